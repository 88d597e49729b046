#pragma once

#include <cstdint>

namespace pathoracle {

// splitmix64 finalizer; used to derive per-item values from a seed without
// carrying generator state around.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t value) {
  return mix64(mix64(seed) ^ value);
}

// Uniform double in [0,1) from a 64-bit hash.
inline double unit_interval(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace pathoracle
