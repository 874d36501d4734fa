#pragma once

#include <cstdint>

#include "equitest/special.hpp"

namespace equitest {

// splitmix64 finalizer; the basis of all seed derivation.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-derived stream: every (master seed, stream id) pair names an
// independent deterministic sequence, so replicates can run on any worker
// in any order and still reproduce bit-identically.  Normal draws use the
// inverse-CDF transform (exactly one uniform each), which keeps the draw
// count independent of the values produced.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(mix64(seed)) {}

  static RandomStream derive(std::uint64_t master, std::uint64_t stream_id) {
    return RandomStream(mix64(master) ^ mix64(stream_id + 0x6A09E667F3BCC909ULL));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0, 1); never returns an endpoint.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() { return special::normal_quantile(uniform()); }

 private:
  std::uint64_t state_;
};

}  // namespace equitest
