#pragma once

#include <cstdint>
#include <span>

namespace dkanon {

/// splitmix64 finalizer. Used for every structural hash so that keys are
/// identical across platforms and runs.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return mix64(seed ^ (value + 0x632be59bd9b4e019ULL + (seed << 6) + (seed >> 2)));
}

template <typename T>
std::uint64_t hash_range(std::span<const T> values, std::uint64_t seed = 0) {
  std::uint64_t h = hash_combine(seed, values.size());
  for (const T& v : values) h = hash_combine(h, static_cast<std::uint64_t>(v));
  return h;
}

}  // namespace dkanon
