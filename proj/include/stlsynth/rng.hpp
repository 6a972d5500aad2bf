#pragma once

#include <cmath>
#include <cstdint>

namespace stlsynth::rng {

// splitmix64 step; advances the state and returns a mixed 64-bit word.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based sub-seed derivation. derive(seed, 0) == seed so a parent
// stream and its first child coincide where callers rely on that identity.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
  if (index == 0) return seed;
  std::uint64_t s = seed ^ (index * 0xd1342543de82ef95ULL);
  return splitmix64(s);
}

// Deterministic portable random stream. Avoids <random> distributions whose
// output is implementation-defined; byte-for-byte reproducible output depends
// on this.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, 1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // standard normal via Box-Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace stlsynth::rng
