#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tsfex {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mt19937_64 engine with explicit distribution transforms. The engine output
// is fixed by the standard and the transforms below avoid libstdc++'s
// unspecified std::*_distribution internals, so every sampled stream is
// byte-reproducible from the seed.
class Rng {
public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive bounds.
  int uniform_int(int lo, int hi) {
    double u = uniform();
    int span = hi - lo + 1;
    int off = static_cast<int>(u * span);
    if (off >= span) off = span - 1;
    return lo + off;
  }

  // Box-Muller; two engine draws per variate.
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  bool bernoulli(double p) { return uniform() < p; }

  // Independent derived stream; depends only on (seed, stream).
  Rng fork(uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1))));
  }

private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace tsfex
