#include "noisybool/sequences.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <unordered_map>

namespace noisybool {

namespace {

constexpr std::uint64_t kRecCap = std::uint64_t{1} << 40;
constexpr std::uint64_t kTableCap = std::uint64_t{1} << 27;
constexpr double kGuardBand = 1e-9;  // relative guard for double-precision compares

uint128 a_rec_memo(std::uint64_t m, std::unordered_map<std::uint64_t, uint128>& memo) {
  if (m == 0) return 0;
  if (m == 1) return 1;
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  uint128 value;
  if (m % 2 == 0) {
    const std::uint64_t k = m / 2;
    value = 2 * a_rec_memo(k, memo) + 2 * a_rec_memo(k - 1, memo) +
            uint128(k) * (k + 1);
  } else {
    const std::uint64_t k = (m - 1) / 2;
    value = 4 * a_rec_memo(k, memo) + uint128(k + 1) * (k + 1);
  }
  memo.emplace(m, value);
  return value;
}

}  // namespace

std::string uint128_to_string(uint128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out += static_cast<char>('0' + static_cast<unsigned>(value % 10));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

uint128 a_rec(std::uint64_t m) {
  if (m > kRecCap) {
    fail(errc::overflow, "a(m) supported only for m <= 2^40, got m=" + std::to_string(m));
  }
  std::unordered_map<std::uint64_t, uint128> memo;
  return a_rec_memo(m, memo);
}

uint128 a_closed(std::uint64_t m_size) {
  if (m_size == 0) fail(errc::size_out_of_range, "a_closed requires M >= 1");
  if (m_size > kRecCap + 1) {
    fail(errc::overflow, "a_closed supported only for M <= 2^40 + 1");
  }
  const int levels = (m_size <= 1) ? 0 : std::bit_width(m_size - 1);  // ceil(log2 M)
  uint128 total = 0;
  for (int i = 1; i <= levels; ++i) {
    const std::uint64_t t = (std::uint64_t{1} << (i - 1)) *
                            ((m_size + (std::uint64_t{1} << (i - 1))) >> i);
    total += uint128(m_size - t) * t;
  }
  return total;
}

std::vector<std::uint64_t> a_table(std::uint64_t max_m) {
  if (max_m > kTableCap) {
    fail(errc::parameter_too_large,
         "a_table supported only for max_m <= 2^27, got " + std::to_string(max_m));
  }
  std::vector<std::uint64_t> table(max_m + 1, 0);
  if (max_m >= 1) table[1] = 1;
  for (std::uint64_t m = 2; m <= max_m; ++m) {
    if (m % 2 == 0) {
      const std::uint64_t k = m / 2;
      table[m] = 2 * table[k] + 2 * table[k - 1] + k * (k + 1);
    } else {
      const std::uint64_t k = (m - 1) / 2;
      table[m] = 4 * table[k] + (k + 1) * (k + 1);
    }
  }
  return table;
}

double bounds_constant_b() noexcept {
  return (2.0 * std::numbers::ln2 - 1.0) / (2.0 * std::numbers::ln2);
}

namespace {

BoundsReport bounds_report_from(std::uint64_t m, uint128 a) {
  BoundsReport rep;
  rep.m = m;
  rep.a = a;
  const double a_dbl = static_cast<double>(a);
  const double mp1 = static_cast<double>(m) + 1.0;
  const double quarter_sq = 0.25 * mp1 * mp1;
  const double lg = std::log2(mp1);
  const double b = bounds_constant_b();

  rep.lower = quarter_sq * lg;
  rep.upper = quarter_sq * (lg + b);
  rep.exact_compare = std::has_single_bit(m + 1);
  if (rep.exact_compare) {
    // m+1 = 2^k: the lower bound is the exact integer (m+1)^2 k / 4.
    const unsigned k = static_cast<unsigned>(std::bit_width(m + 1) - 1);
    const uint128 rhs = uint128(m + 1) * (m + 1) * k;
    rep.lower_holds = 4 * a >= rhs;
    rep.lower_equality = 4 * a == rhs;
  } else {
    rep.lower_holds = a_dbl >= rep.lower * (1.0 - kGuardBand);
    rep.lower_equality = false;
  }
  rep.upper_holds = a_dbl < rep.upper * (1.0 + kGuardBand);
  if (m >= 6) {
    const double md = static_cast<double>(m);
    rep.tight_upper = quarter_sq * (lg + (md - 1.0) * b / md);
    rep.tight_holds = a_dbl <= *rep.tight_upper * (1.0 + kGuardBand);
  }
  return rep;
}

}  // namespace

BoundsReport check_bounds(std::uint64_t m) {
  return bounds_report_from(m, a_rec(m));
}

BoundsSweep check_bounds_sweep(std::uint64_t max_m) {
  constexpr std::size_t kMaxFailures = 64;
  const std::vector<std::uint64_t> table = a_table(max_m);
  BoundsSweep sweep;
  sweep.max_m = max_m;
  for (std::uint64_t m = 0; m <= max_m; ++m) {
    const BoundsReport rep = bounds_report_from(m, table[m]);
    const bool pow2 = std::has_single_bit(m + 1);
    const bool ok = rep.lower_holds && rep.upper_holds && rep.tight_holds &&
                    rep.lower_equality == pow2;
    if (!ok && sweep.failures.size() < kMaxFailures) sweep.failures.push_back(m);
    if (!ok) continue;
    if (rep.lower_equality) ++sweep.equality_count;
  }
  for (std::uint64_t v = 1; v <= max_m + 1; v *= 2) {
    ++sweep.expected_equality_count;
    if (v > (std::uint64_t{1} << 62)) break;
  }
  sweep.checked = max_m + 1;
  sweep.all_hold = sweep.failures.empty();
  return sweep;
}

}  // namespace noisybool
