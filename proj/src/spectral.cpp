#include "noisybool/spectral.hpp"

#include <bit>
#include <cmath>

#include "noisybool/sequences.hpp"

namespace noisybool {

namespace {

void check_nondegenerate(int n, std::uint64_t m) {
  if (n < 1 || n > BooleanFunction::kMaxDimension) {
    fail(errc::dimension_too_large, "dimension out of range: " + std::to_string(n));
  }
  const std::uint64_t s = std::uint64_t{1} << n;
  if (m == 0 || m >= s) {
    fail(errc::degenerate_size,
         "closed form requires 1 <= M <= 2^n - 1, got M=" + std::to_string(m) +
             " at n=" + std::to_string(n));
  }
}

}  // namespace

D2Report d2_from_spectrum(int n, std::uint64_t m, const RatioSpectrum& spectrum) {
  check_nondegenerate(n, m);
  if (spectrum.r.size() != m / 2 + 1) {
    fail(errc::length_mismatch,
         "spectrum for M=" + std::to_string(m) + " must have length " +
             std::to_string(m / 2 + 1) + ", got " + std::to_string(spectrum.r.size()));
  }
  std::uint64_t total = 0;
  std::uint64_t sum_term = 0;
  for (std::uint64_t t = 0; t < spectrum.r.size(); ++t) {
    total += spectrum.r[t];
    sum_term += (m - t) * t * spectrum.r[t];
  }
  if (total != static_cast<std::uint64_t>(n)) {
    fail(errc::spectrum_sum_mismatch,
         "spectrum entries sum to " + std::to_string(total) + ", expected n=" + std::to_string(n));
  }
  D2Report rep;
  rep.n = n;
  rep.m = m;
  rep.spectrum = spectrum;
  rep.sum_term = sum_term;
  rep.value = d2_value(n, m, sum_term);
  return rep;
}

D2Report d2_at_half(const BooleanFunction& f) {
  check_nondegenerate(f.dimension(), f.zero_count());
  return d2_from_spectrum(f.dimension(), f.zero_count(), f.ratio_spectrum());
}

double adjacent_delta(int n, std::uint64_t m, std::uint64_t i, std::uint64_t j) {
  check_nondegenerate(n, m);
  if (!(i < j) || j > m / 2) {
    fail(errc::index_order_violation,
         "need 0 <= i < j <= floor(M/2), got i=" + std::to_string(i) + ", j=" + std::to_string(j));
  }
  const double s = static_cast<double>(std::uint64_t{1} << n);
  const double gain = 16.0 * static_cast<double>((j - i) * (m - i - j));
  return gain / ((s - static_cast<double>(m)) * static_cast<double>(m));
}

double g_of(double n, std::uint64_t m) {
  if (m == 0) fail(errc::domain_violation, "g(n) requires M >= 1");
  const int min_n = (m <= 1) ? 0 : std::bit_width(m - 1);  // ceil(log2 M)
  if (!(n >= static_cast<double>(min_n) - 1e-12)) {
    fail(errc::domain_violation,
         "g(n) requires n >= ceil(log2 M) = " + std::to_string(min_n));
  }
  const double s = std::exp2(n);
  const double md = static_cast<double>(m);
  if (!(s > md)) fail(errc::domain_violation, "g(n) requires 2^n > M");
  const double sum_term = static_cast<double>(a_rec(m - 1));
  return -4.0 + 4.0 * (n * md * md - 4.0 * sum_term) / ((s - md) * md);
}

}  // namespace noisybool
