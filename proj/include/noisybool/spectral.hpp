#pragma once

#include <cstdint>

#include "noisybool/boolfn.hpp"

namespace noisybool {

// F''(1/2) and the spectrum statistics it came from. Values are in nats.
struct D2Report {
  int n = 0;
  std::uint64_t m = 0;
  RatioSpectrum spectrum;
  std::uint64_t sum_term = 0;  // sum_t (M-t) t r_t
  double value = 0.0;          // -4 + 4(n M^2 - 4 sum_term) / ((2^n - M) M)
};

// Shared evaluation kernel; every F''(1/2) in the library goes through this so
// closed-form values compare bitwise across call sites.
inline double d2_value(int n, std::uint64_t m, std::uint64_t sum_term) {
  const double s = static_cast<double>(std::uint64_t{1} << n);
  const std::int64_t num =
      static_cast<std::int64_t>(n) * static_cast<std::int64_t>(m * m) -
      4 * static_cast<std::int64_t>(sum_term);
  return -4.0 + 4.0 * static_cast<double>(num) /
                    ((s - static_cast<double>(m)) * static_cast<double>(m));
}

// Closed form of F''(1/2) from a ratio spectrum. Requires 1 <= M <= 2^n - 1
// and sum(r) = n.
D2Report d2_from_spectrum(int n, std::uint64_t m, const RatioSpectrum& spectrum);

// F''(1/2) of f via its ratio spectrum.
D2Report d2_at_half(const BooleanFunction& f);

// Gain in F''(1/2) from moving one unit of spectrum mass from index j down to
// index i: 16 (j-i)(M-i-j) / ((2^n - M) M). Requires 0 <= i < j <= floor(M/2).
double adjacent_delta(int n, std::uint64_t m, std::uint64_t i, std::uint64_t j);

// g(n) = F''(1/2) of the lex function with M fixed and n treated as a real
// variable; the lex sum-term is the constant a(M-1). Requires M >= 1,
// n >= ceil(log2 M) and 2^n > M.
double g_of(double n, std::uint64_t m);

}  // namespace noisybool
