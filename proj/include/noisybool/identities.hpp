#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "noisybool/boolfn.hpp"
#include "noisybool/sequences.hpp"

namespace noisybool {

// Exact binomial coefficient; zero outside 0 <= k <= n. Supports n <= 64.
uint128 binomial(int n, int k);

// One combinatorial identity evaluated two ways: lhs by direct enumeration of
// the binomial sum, rhs by the closed form.
struct IdentityCheck {
  std::string lemma;
  std::string params;
  uint128 lhs = 0;
  uint128 rhs = 0;
  bool pass = false;
};

// sum_k C(n,k) = 2^n, sum_k C(n,k) k = n 2^(n-1), sum_k C(n,k) k^2 = n(n+1) 2^(n-2).
// Requires 1 <= n <= 30.
std::array<IdentityCheck, 3> lemma5(int n);

// sum_r sum_k C(m,k) C(n,r-k) k = m 2^(m+n-1) and the k^2 variant
// m(m+1) 2^(m+n-2). Requires m, n >= 1 and m + n <= 40.
std::array<IdentityCheck, 2> lemma6(int m, int n);

// sum_r sum_k sum_l C(m,r-k-l) C(n,k) C(t,l) k l = n t 2^(m+n+t-2).
// Requires m >= 0, n, t >= 1 and m + n + t <= 30.
IdentityCheck lemma7(int m, int n, int t);

// Analytic d^order/d alpha^order of Pr{f(X^n)=0 | y, alpha}; order 0, 1 or 2.
double cond_prob_zero_derivative(const BooleanFunction& f, std::uint32_t y,
                                 double alpha, int order);

// sum_y of the order-i derivative of the conditional probability: M for
// order 0, exactly 0 for orders >= 1.
struct ProbSumCheck {
  int order = 0;
  double sum = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Checks the probability-sum identity for orders 0..max_order (max_order <= 2)
// at 0 < alpha < 1, using the analytic per-y derivative formulas.
std::vector<ProbSumCheck> lemma4_check(const BooleanFunction& f, double alpha,
                                       int max_order);

}  // namespace noisybool
