#ifndef KWISE_RNG_HPP
#define KWISE_RNG_HPP

#include <cstdint>

namespace kwise {

// Counter-based generator used for all Monte-Carlo sampling. Every draw
// is a pure function of (seed, stream, counter), so partitioning work
// across any number of workers reproduces the same values. The exact
// construction (documented in the README, stable across releases):
//
//   mix64(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//             z ^= z >> 27; z *= 0x94D049BB133111EB;
//             z ^= z >> 31; return z;
//   draw(seed, stream, counter) =
//       mix64( mix64(seed + PHI * (stream + 1)) ^ (PHI * (counter + 1)) )
//   with PHI = 0x9E3779B97F4A7C15.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ull;

inline std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter) {
  std::uint64_t key = mix64(seed + kGolden64 * (stream + 1));
  return mix64(key ^ (kGolden64 * (counter + 1)));
}

// Uniform index in [0, size) via the 128-bit multiply-high map; the
// bias is at most size / 2^64.
inline std::uint64_t bounded_index(std::uint64_t draw, std::uint64_t size) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(draw) * static_cast<unsigned __int128>(size)) >> 64);
}

}  // namespace kwise

#endif  // KWISE_RNG_HPP
