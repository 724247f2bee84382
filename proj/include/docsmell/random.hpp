#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace docsmell {

// All shuffling in the library goes through this Fisher-Yates so outputs are
// identical across standard-library implementations (std::shuffle is not
// pinned down by the standard).
template <typename T>
inline void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& gen) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(gen() % i);
    std::swap(v[i - 1], v[j]);
  }
}

// Uniform pick in [0, n).
inline std::size_t pick_index(std::size_t n, std::mt19937_64& gen) {
  return static_cast<std::size_t>(gen() % n);
}

// Stable seed derivation for sub-streams (per-fold training, per-repeat
// shuffles) so one top-level seed reproduces the whole pipeline.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace docsmell
