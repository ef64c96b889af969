#include "tsfex/event.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "tsfex/common.hpp"

namespace tsfex {

namespace {

const char* kSensorNames[kSensorKindCount] = {"BLE", "ACC", "GYR", "ATT",
                                              "ALT", "GRA", "MAG"};

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + s.size();
}

bool parse_int(const std::string& s, long& out) {
  if (s.empty()) return false;
  const char* begin = s.c_str();
  char* end = nullptr;
  out = std::strtol(begin, &end, 10);
  return end == begin + s.size();
}

int tx_power_label_to_code(long label) {
  switch (label) {
    case 8: return 1;
    case 12: return 2;
    default: return 0;  // 7 / unknown
  }
}

}  // namespace

const char* sensor_name(SensorKind k) {
  return kSensorNames[static_cast<std::size_t>(k)];
}

std::optional<SensorKind> sensor_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSensorKindCount; ++i) {
    if (name == kSensorNames[i]) return static_cast<SensorKind>(i);
  }
  return std::nullopt;
}

std::size_t sensor_arity(SensorKind k) {
  switch (k) {
    case SensorKind::BLE: return 1;
    case SensorKind::ALT: return 2;
    default: return 3;
  }
}

std::vector<double> SensorSeries::channel(std::size_t axis) const {
  std::vector<double> out(size());
  const std::size_t a = arity();
  for (std::size_t i = 0; i < size(); ++i) out[i] = values[i * a + axis];
  return out;
}

const SensorSeries* ContactEvent::find(SensorKind k) const {
  auto it = series.find(k);
  return it == series.end() ? nullptr : &it->second;
}

std::size_t ContactEvent::total_samples() const {
  std::size_t n = 0;
  for (const auto& [kind, s] : series) n += s.size();
  return n;
}

std::size_t Look::sample_count() const {
  std::size_t n = 0;
  for (const auto& r : ranges) n += r.count();
  return n;
}

ContactEvent parse_event_file(const std::string& text, const std::string& id) {
  ContactEvent event;
  event.id = id;

  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool saw_header[8] = {};  // per header key, duplicate detection

  auto header_index = [](const std::string& key) -> int {
    static const char* keys[] = {"TXPower", "TXCarry", "RXCarry", "TXPose",
                                 "RXPose",  "TXDevice", "RXDevice", "Grain"};
    for (int i = 0; i < 8; ++i)
      if (key == keys[i]) return i;
    return -1;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (line[0] == '#') {
      std::size_t eq = line.find('=');
      if (eq == std::string::npos) fail_line(line_no, "header without '='");
      std::string key = trim(line.substr(1, eq - 1));
      std::string value = trim(line.substr(eq + 1));
      int idx = header_index(key);
      if (idx < 0) fail_line(line_no, "unknown header key '" + key + "'");
      if (saw_header[idx]) fail_line(line_no, "duplicate header key '" + key + "'");
      saw_header[idx] = true;

      if (key == "Grain") {
        if (value == "fine") {
          event.metadata.grain = Grain::Fine;
        } else if (value == "coarse") {
          event.metadata.grain = Grain::Coarse;
        } else {
          fail_line(line_no, "grain must be fine or coarse");
        }
        continue;
      }
      long v = 0;
      if (!parse_int(value, v)) fail_line(line_no, "non-integer header value '" + value + "'");
      if (key == "TXPower") {
        event.metadata.tx_power_code = tx_power_label_to_code(v);
        continue;
      }
      if (v < 0 || v > 2) fail_line(line_no, key + " code out of range {0,1,2}");
      int code = static_cast<int>(v);
      if (key == "TXCarry") event.metadata.tx_carry = code;
      else if (key == "RXCarry") event.metadata.rx_carry = code;
      else if (key == "TXPose") event.metadata.tx_pose = code;
      else if (key == "RXPose") event.metadata.rx_pose = code;
      else if (key == "TXDevice") event.metadata.tx_device = code;
      else if (key == "RXDevice") event.metadata.rx_device = code;
      continue;
    }

    auto fields = split(line, ',');
    if (fields.size() < 3) fail_line(line_no, "record needs t,SENSOR,values");
    double t = 0;
    if (!parse_number(trim(fields[0]), t)) fail_line(line_no, "bad timestamp '" + fields[0] + "'");
    auto kind = sensor_from_name(trim(fields[1]));
    if (!kind) fail_line(line_no, "unknown sensor '" + fields[1] + "'");
    const std::size_t arity = sensor_arity(*kind);
    if (fields.size() - 2 != arity) {
      fail_line(line_no, std::string(sensor_name(*kind)) + " record needs " +
                             std::to_string(arity) + " values, got " +
                             std::to_string(fields.size() - 2));
    }

    auto& s = event.series[*kind];
    s.kind = *kind;
    if (!s.timestamps.empty() && t <= s.timestamps.back()) {
      fail_line(line_no, std::string("non-monotonic timestamp for ") + sensor_name(*kind));
    }
    s.timestamps.push_back(t);
    for (std::size_t i = 0; i < arity; ++i) {
      double v = 0;
      if (!parse_number(trim(fields[2 + i]), v)) {
        fail_line(line_no, "bad value '" + fields[2 + i] + "'");
      }
      s.values.push_back(v);
    }
  }

  auto ble = event.find(SensorKind::BLE);
  if (ble == nullptr || ble->size() == 0) {
    throw ParseError("missing BLE section in event " + (id.empty() ? "<anonymous>" : id));
  }
  return event;
}

ContactEvent load_event_file(const std::string& path) {
  std::string id = std::filesystem::path(path).stem().string();
  try {
    return parse_event_file(read_text_file(path), id);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<Look> segment_looks(const ContactEvent& event, double gap_s) {
  if (gap_s <= 0.0) throw DataError("gap_s must be positive");

  // Union of all sensors' timestamps: a look is a recording interval of the
  // whole device, not per sensor.
  std::vector<double> all;
  all.reserve(event.total_samples());
  for (const auto& [kind, s] : event.series) {
    all.insert(all.end(), s.timestamps.begin(), s.timestamps.end());
  }
  if (all.empty()) return {};
  std::sort(all.begin(), all.end());

  std::vector<std::pair<double, double>> windows;
  double start = all.front();
  double prev = all.front();
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i] - prev >= gap_s) {
      windows.emplace_back(start, prev);
      start = all[i];
    }
    prev = all[i];
  }
  windows.emplace_back(start, prev);

  std::vector<Look> looks(windows.size());
  for (std::size_t w = 0; w < windows.size(); ++w) {
    looks[w].start_s = windows[w].first;
    looks[w].end_s = windows[w].second;
  }
  for (const auto& [kind, s] : event.series) {
    const auto ki = static_cast<std::size_t>(kind);
    std::size_t i = 0;
    for (std::size_t w = 0; w < windows.size(); ++w) {
      while (i < s.size() && s.timestamps[i] < windows[w].first) ++i;
      looks[w].ranges[ki].begin = i;
      while (i < s.size() && s.timestamps[i] <= windows[w].second) ++i;
      looks[w].ranges[ki].end = i;
    }
  }
  return looks;
}

std::map<std::string, KeyEntry> load_key_file(const std::string& path) {
  std::map<std::string, KeyEntry> out;
  std::istringstream in(read_text_file(path));
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("event_id", 0) == 0) continue;  // header row
    auto fields = split(line, ',');
    if (fields.size() != 3) fail_line(line_no, "key row needs event_id,grain,distance_m");
    KeyEntry entry;
    std::string g = trim(fields[1]);
    if (g == "0" || g == "fine") entry.grain = Grain::Fine;
    else if (g == "1" || g == "coarse") entry.grain = Grain::Coarse;
    else fail_line(line_no, "bad grain '" + g + "'");
    if (!parse_number(trim(fields[2]), entry.distance_m) || entry.distance_m <= 0) {
      fail_line(line_no, "bad distance '" + fields[2] + "'");
    }
    std::string id = trim(fields[0]);
    if (out.count(id)) fail_line(line_no, "duplicate event id '" + id + "'");
    out.emplace(std::move(id), entry);
  }
  return out;
}

}  // namespace tsfex
