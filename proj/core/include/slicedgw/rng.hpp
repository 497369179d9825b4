#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace slicedgw::rng {

// All randomness in this library is drawn from std::mt19937_64, whose output
// stream is pinned by the C++ standard, through the explicit mappings below.
// Standard-library distributions are avoided on purpose: their algorithms are
// implementation-defined, and the same seed must reproduce the same numbers
// on every platform.

using Engine = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double canonical(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// One standard normal via Box-Muller (cosine branch); consumes two draws.
inline double standard_normal(Engine& eng) {
  const double u1 = canonical(eng);
  const double u2 = canonical(eng);
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  return r * std::cos(2.0 * 3.14159265358979323846 * u2);
}

/// Derives an independent stream seed from a base seed and a salt (splitmix64
/// finalizer). Used to give trials/arms/clouds their own substreams.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace slicedgw::rng
