#pragma once

#include <cstdint>
#include <random>

namespace degpack {

// Generator contract ("degpack-rng v1"):
//   engine            std::mt19937_64, seeded with a single 64-bit value
//   substream(m, k)   mt19937_64 seeded with mix_seed(m, k)
//   mix_seed(m, k)    splitmix64 finalizer applied to m ^ splitmix64(k + 1)
//   uniform_index(k)  one engine draw, then (draw * k) >> 64
//   bernoulli(q)      one engine draw, then (draw >> 11) * 2^-53 < q
// Every primitive consumes exactly one engine output, so the number of draws
// per operation is fixed. Ports that adopt the same contract reproduce traces.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t mix_seed(std::uint64_t master,
                                        std::uint64_t stream) noexcept {
  return splitmix64(master ^ splitmix64(stream + 1));
}

inline Rng substream(std::uint64_t master, std::uint64_t stream) {
  return Rng(mix_seed(master, stream));
}

/// Uniform integer in [0, bound). bound must be positive.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  const unsigned __int128 wide =
      static_cast<unsigned __int128>(rng()) * bound;
  return static_cast<std::uint64_t>(wide >> 64);
}

inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double q) { return uniform_unit(rng) < q; }

}  // namespace degpack
