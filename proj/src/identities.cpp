#include "noisybool/identities.hpp"

#include <bit>
#include <cmath>

#include "noisybool/curve.hpp"

namespace noisybool {

namespace {

constexpr int kPascalSize = 65;

const std::array<std::array<uint128, kPascalSize>, kPascalSize>& pascal_table() {
  static const auto table = [] {
    std::array<std::array<uint128, kPascalSize>, kPascalSize> t{};
    for (int n = 0; n < kPascalSize; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
      }
    }
    return t;
  }();
  return table;
}

IdentityCheck make_check(std::string lemma, std::string params, uint128 lhs, uint128 rhs) {
  IdentityCheck c;
  c.lemma = std::move(lemma);
  c.params = std::move(params);
  c.lhs = lhs;
  c.rhs = rhs;
  c.pass = lhs == rhs;
  return c;
}

}  // namespace

uint128 binomial(int n, int k) {
  if (n < 0 || n >= kPascalSize) {
    fail(errc::parameter_too_large, "binomial supports 0 <= n <= 64");
  }
  if (k < 0 || k > n) return 0;
  return pascal_table()[n][k];
}

std::array<IdentityCheck, 3> lemma5(int n) {
  if (n < 1 || n > 30) {
    fail(errc::parameter_too_large, "lemma5 requires 1 <= n <= 30, got n=" + std::to_string(n));
  }
  uint128 s0 = 0, s1 = 0, s2 = 0;
  for (int k = 0; k <= n; ++k) {
    const uint128 c = binomial(n, k);
    s0 += c;
    s1 += c * static_cast<unsigned>(k);
    s2 += c * static_cast<unsigned>(k) * static_cast<unsigned>(k);
  }
  const std::string params = "n=" + std::to_string(n);
  const uint128 two_n = uint128(1) << n;
  return {
      make_check("lemma5.count", params, s0, two_n),
      make_check("lemma5.k", params, s1, (uint128(n) << n) >> 1),
      make_check("lemma5.k2", params, s2, (uint128(n) * (n + 1) << n) >> 2),
  };
}

std::array<IdentityCheck, 2> lemma6(int m, int n) {
  if (m < 1 || n < 1 || m + n > 40) {
    fail(errc::parameter_too_large, "lemma6 requires m, n >= 1 and m + n <= 40");
  }
  uint128 s1 = 0, s2 = 0;
  for (int r = 0; r <= m + n; ++r) {
    for (int k = 0; k <= r; ++k) {
      const uint128 prod = binomial(m, k) * binomial(n, r - k);
      s1 += prod * static_cast<unsigned>(k);
      s2 += prod * static_cast<unsigned>(k) * static_cast<unsigned>(k);
    }
  }
  const std::string params = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
  return {
      make_check("lemma6.k", params, s1, (uint128(m) << (m + n)) >> 1),
      make_check("lemma6.k2", params, s2, (uint128(m) * (m + 1) << (m + n)) >> 2),
  };
}

IdentityCheck lemma7(int m, int n, int t) {
  if (m < 0 || n < 1 || t < 1 || m + n + t > 30) {
    fail(errc::parameter_too_large, "lemma7 requires m >= 0, n, t >= 1 and m + n + t <= 30");
  }
  uint128 lhs = 0;
  for (int r = 0; r <= m + n + t; ++r) {
    for (int k = 0; k <= r; ++k) {
      for (int l = 0; l <= r - k; ++l) {
        lhs += binomial(m, r - k - l) * binomial(n, k) * binomial(t, l) *
               static_cast<unsigned>(k) * static_cast<unsigned>(l);
      }
    }
  }
  const uint128 rhs = (uint128(n) * t) << (m + n + t - 2);
  return make_check("lemma7.kl",
                    "m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                        ",t=" + std::to_string(t),
                    lhs, rhs);
}

double cond_prob_zero_derivative(const BooleanFunction& f, std::uint32_t y,
                                 double alpha, int order) {
  if (order < 0 || order > 2) fail(errc::invalid_argument, "derivative order must be 0, 1 or 2");
  if (order == 0) return cond_prob_zero(f, y, alpha);
  if (y >= f.cube_size()) {
    fail(errc::codeword_out_of_range, "codeword out of range: " + std::to_string(y));
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    fail(errc::probability_out_of_range, "derivatives require 0 < alpha < 1");
  }
  const int n = f.dimension();
  const double beta = 1.0 - alpha;
  double total = 0.0;
  for (std::uint32_t x : f.zero_set()) {
    const int d = std::popcount(x ^ y);
    if (order == 1) {
      total += (d - n * alpha) * std::pow(alpha, d - 1) * std::pow(beta, n - 1 - d);
    } else {
      const double poly = static_cast<double>(d) * (d - 1) +
                          2.0 * (1.0 - n) * d * alpha +
                          static_cast<double>(n) * (n - 1) * alpha * alpha;
      total += poly * std::pow(alpha, d - 2) * std::pow(beta, n - 2 - d);
    }
  }
  return total;
}

std::vector<ProbSumCheck> lemma4_check(const BooleanFunction& f, double alpha,
                                       int max_order) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    fail(errc::probability_out_of_range, "lemma4_check requires 0 < alpha < 1");
  }
  if (max_order < 0 || max_order > 2) {
    fail(errc::invalid_argument, "max_order must be 0, 1 or 2");
  }
  std::vector<ProbSumCheck> checks;
  for (int order = 0; order <= max_order; ++order) {
    ProbSumCheck c;
    c.order = order;
    for (std::uint64_t y = 0; y < f.cube_size(); ++y) {
      c.sum += cond_prob_zero_derivative(f, static_cast<std::uint32_t>(y), alpha, order);
    }
    c.expected = order == 0 ? static_cast<double>(f.zero_count()) : 0.0;
    c.tolerance = order == 0 ? 1e-9 : 1e-8;
    c.pass = std::abs(c.sum - c.expected) <= c.tolerance;
    checks.push_back(c);
  }
  return checks;
}

}  // namespace noisybool
