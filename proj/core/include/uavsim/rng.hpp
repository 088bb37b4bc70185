#pragma once

#include <cstdint>
#include <string_view>

#include "uavsim/geometry.hpp"

namespace uavsim {

/// Deterministic, platform-independent random stream (splitmix64 core).
///
/// Every consumer of randomness in the framework owns its own stream,
/// derived from the scenario seed plus a stable label. Adding or removing
/// one consumer never perturbs the draws seen by another, which is what
/// makes recorded runs replayable.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  /// Derives an independent stream from (seed, label).
  static RngStream derive(std::uint64_t seed, std::string_view label);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1), 53 bits.
  double uniform01();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller. Consumes exactly two uniforms per call,
  /// no cached spare, so the draw sequence is a pure function of call count.
  double normal();

  Vec3 normal3() {
    Vec3 v;
    v.x() = normal();
    v.y() = normal();
    v.z() = normal();
    return v;
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a 64-bit hash, used for stream derivation and scenario hashing.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ull);

}  // namespace uavsim
