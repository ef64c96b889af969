#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tsfex {

enum class SensorKind { BLE = 0, ACC, GYR, ATT, ALT, GRA, MAG };
inline constexpr std::size_t kSensorKindCount = 7;

const char* sensor_name(SensorKind k);
std::optional<SensorKind> sensor_from_name(std::string_view name);

// Channels per sample: BLE 1 (RSSI dBm), ALT 2, everything else 3.
std::size_t sensor_arity(SensorKind k);

struct SensorSeries {
  SensorKind kind = SensorKind::BLE;
  std::vector<double> timestamps;  // seconds, strictly increasing
  std::vector<double> values;      // row-major, size() * arity entries

  std::size_t size() const { return timestamps.size(); }
  std::size_t arity() const { return sensor_arity(kind); }
  double value(std::size_t i, std::size_t axis) const {
    return values[i * arity() + axis];
  }
  std::vector<double> channel(std::size_t axis) const;
};

enum class Grain { Fine = 0, Coarse = 1 };

inline int grain_code(Grain g) { return g == Grain::Coarse ? 1 : 0; }

struct EventMetadata {
  int tx_power_code = 0;
  int tx_carry = 0;
  int rx_carry = 0;
  int tx_pose = 0;
  int rx_pose = 0;
  int tx_device = 0;
  int rx_device = 0;
  Grain grain = Grain::Fine;
  std::optional<double> true_distance_m;  // training key only
};

struct ContactEvent {
  std::string id;
  EventMetadata metadata;
  std::map<SensorKind, SensorSeries> series;  // BLE required and non-empty

  const SensorSeries* find(SensorKind k) const;
  std::size_t total_samples() const;
};

struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;  // half-open
  std::size_t count() const { return end - begin; }
};

// One continuous recording window; gaps of at least gap_s separate looks.
struct Look {
  double start_s = 0.0;
  double end_s = 0.0;
  std::array<IndexRange, kSensorKindCount> ranges{};  // indexed by SensorKind

  std::size_t sample_count() const;
};

// Event file format: header lines `#KEY=VALUE` (TXPower, TXCarry, RXCarry,
// TXPose, RXPose, TXDevice, RXDevice, Grain), then one record per line
// `t,SENSOR,v1[,v2[,v3]]`. Missing header keys default to code 0 (unknown).
ContactEvent parse_event_file(const std::string& text, const std::string& id = "");
ContactEvent load_event_file(const std::string& path);

std::vector<Look> segment_looks(const ContactEvent& event, double gap_s = 10.0);

struct KeyEntry {
  Grain grain = Grain::Fine;
  double distance_m = 0.0;
};

// Key file: CSV `event_id,grain,distance_m` with grain serialized 0=fine 1=coarse.
std::map<std::string, KeyEntry> load_key_file(const std::string& path);

}  // namespace tsfex
