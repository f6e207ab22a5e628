#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noisybool/errors.hpp"

namespace noisybool {

using uint128 = unsigned __int128;

std::string uint128_to_string(uint128 value);

// a(m): the lex sum-term sequence, a(0)=0, a(2m)=2a(m)+2a(m-1)+m(m+1),
// a(2m+1)=4a(m)+(m+1)^2. Exact for m <= 2^40.
uint128 a_rec(std::uint64_t m);

// Floor-sum closed form sum_{i=1}^{ceil(log2 M)} (M - t_i) t_i with
// t_i = 2^(i-1) floor(1/2 + M/2^i). Equals a_rec(M-1) for all M >= 1.
uint128 a_closed(std::uint64_t m_size);

// Bottom-up table a(0..max_m); values must fit in 64 bits (max_m <= 2^27).
std::vector<std::uint64_t> a_table(std::uint64_t max_m);

// b = (2 ln 2 - 1) / (2 ln 2), the constant in the two-sided bounds on a(m).
double bounds_constant_b() noexcept;

struct BoundsReport {
  std::uint64_t m = 0;
  uint128 a = 0;
  double lower = 0.0;   // (1/4)(m+1)^2 log2(m+1)
  double upper = 0.0;   // (1/4)(m+1)^2 (log2(m+1) + b)
  std::optional<double> tight_upper;  // m >= 6: (1/4)(m+1)^2 (log2(m+1) + (m-1)b/m)
  bool lower_holds = false;
  bool upper_holds = false;
  bool tight_holds = true;  // vacuously true for m < 6
  bool lower_equality = false;  // iff m+1 is a power of two
  bool exact_compare = false;   // lower bound compared in exact integers
};

BoundsReport check_bounds(std::uint64_t m);

struct BoundsSweep {
  std::uint64_t max_m = 0;
  std::uint64_t checked = 0;
  bool all_hold = false;
  std::uint64_t equality_count = 0;           // #{m : lower bound met with equality}
  std::uint64_t expected_equality_count = 0;  // #{m <= max_m : m+1 a power of two}
  std::vector<std::uint64_t> failures;        // first offending m values (capped)
};

// Checks the two-sided bounds for every 0 <= m <= max_m, including that lower-bound
// equality occurs exactly when m+1 is a power of two.
BoundsSweep check_bounds_sweep(std::uint64_t max_m);

}  // namespace noisybool
