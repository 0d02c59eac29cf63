#pragma once

#include <cstdint>

namespace lgd {

// Counter-based randomness: every draw is a pure hash of its key, so a value
// depends only on (seed, stream, a, b) and never on evaluation order.

constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

enum class Stream : std::uint64_t {
  mark = 1,
  proposal = 2,
  graph_edge = 3,
  trial = 4,
  pair = 5,
  initial = 6,
};

constexpr std::uint64_t counter_hash(std::uint64_t seed, Stream stream, std::uint64_t a,
                                     std::uint64_t b) noexcept {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(stream));
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  return h;
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double unit_interval(std::uint64_t h) noexcept {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by multiply-shift.
constexpr std::uint64_t bounded(std::uint64_t h, std::uint64_t bound) noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(h) * bound) >> 64);
}

}  // namespace lgd
