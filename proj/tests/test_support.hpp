#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "noisybool/boolfn.hpp"

namespace nbtest {

// Uniform random M-subset of [0, 2^n) via partial Fisher-Yates.
inline std::vector<std::uint32_t> random_zero_set(std::mt19937_64& rng, int n,
                                                  std::uint64_t m) {
  const std::uint64_t s = std::uint64_t{1} << n;
  std::vector<std::uint32_t> pool(s);
  for (std::uint64_t x = 0; x < s; ++x) pool[x] = static_cast<std::uint32_t>(x);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::uint64_t> pick(i, s - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Random function with M drawn uniformly from [min_m, max_m].
inline noisybool::BooleanFunction random_function(std::mt19937_64& rng, int n,
                                                  std::uint64_t min_m,
                                                  std::uint64_t max_m) {
  std::uniform_int_distribution<std::uint64_t> size_dist(min_m, max_m);
  return noisybool::BooleanFunction(n, random_zero_set(rng, n, size_dist(rng)));
}

// Applies a coordinate permutation to every element of a zero-set. perm[k] is
// the source coordinate (0-based, MSB-first) for target coordinate k.
inline std::vector<std::uint32_t> permute_coordinates(
    const std::vector<std::uint32_t>& zeros, int n, const std::vector<int>& perm) {
  std::vector<std::uint32_t> out;
  out.reserve(zeros.size());
  for (std::uint32_t x : zeros) {
    std::uint32_t y = 0;
    for (int k = 0; k < n; ++k) {
      if ((x >> (n - 1 - perm[k])) & 1u) y |= 1u << (n - 1 - k);
    }
    out.push_back(y);
  }
  return out;
}

// Flips one coordinate (1-based, MSB-first) in every element of a zero-set.
inline std::vector<std::uint32_t> flip_coordinate(const std::vector<std::uint32_t>& zeros,
                                                  int n, int coordinate) {
  std::vector<std::uint32_t> out;
  out.reserve(zeros.size());
  for (std::uint32_t x : zeros) out.push_back(x ^ (1u << (n - coordinate)));
  return out;
}

}  // namespace nbtest
