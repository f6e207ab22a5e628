#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "noisybool/boolfn.hpp"

namespace noisybool {

enum class EntropyUnit { bits, nats };

const char* unit_name(EntropyUnit unit) noexcept;
double one_bit(EntropyUnit unit) noexcept;  // 1 bit expressed in the given unit

// Binary entropy H(p) with H(0) = H(1) = 0 by continuity.
double binary_entropy(double p, EntropyUnit unit);

// BSC path weights w[d] = alpha^d (1-alpha)^(n-d) for d = 0..n. Every
// conditional-probability evaluation in the library goes through this table so
// that independently computed values agree bitwise.
std::vector<double> bsc_weights(int n, double alpha);

// Pr{f(X^n)=0 | y^n, alpha}: exact sum over the zero-set via the
// Hamming-distance histogram of the zero-set relative to y. Clamped to [0,1].
double cond_prob_zero(const BooleanFunction& f, std::uint32_t y, double alpha);

// F_f(alpha) = H(alpha) - (1/S) sum_y H(Pr{f(X^n)=0 | y, alpha}).
double big_f(const BooleanFunction& f, double alpha, EntropyUnit unit);

// T(P_f) = 1 bit - H(M / 2^n), in the requested unit.
double big_t(const BooleanFunction& f, EntropyUnit unit);

// I(f(X^n); Y^n) = H(M/S) - (1/S) sum_y H(Pr{f(X^n)=0 | y, alpha}).
double mutual_information(const BooleanFunction& f, double alpha, EntropyUnit unit);

// Erkip bound (1-2a)^2 (all alpha) and the Ordentlich-Shayevitz-Weinstein
// bound, valid only for (1-1/sqrt(3))/2 <= alpha <= 1 - (1-1/sqrt(3))/2.
// Both in bits.
struct BaselineBounds {
  double erkip;
  std::optional<double> osw;
};
BaselineBounds baseline_bounds(double alpha);

// Central finite difference of F_f at alpha, in nats; order 1 or 2.
// Requires 0 < alpha - h and alpha + h < 1.
double fd_derivative(const BooleanFunction& f, double alpha, int order,
                     double step = 1e-4);

// Sampled (alpha, F) pairs plus metadata for plotting and shape analysis.
struct CurveTable {
  int n = 0;
  std::vector<std::uint32_t> zero_set;
  EntropyUnit unit = EntropyUnit::bits;
  std::vector<double> grid;
  std::vector<double> f;
  double t = 0.0;
  std::vector<double> erkip;                 // empty when baselines not included
  std::vector<std::optional<double>> osw;    // empty when baselines not included
};

// Grid "start:step:end"; the last point is exactly `end`.
std::vector<double> make_alpha_grid(double start, double step, double end);

// Requires a nonempty, strictly increasing grid within [0, 1].
void validate_alpha_grid(const std::vector<double>& grid);

CurveTable sample_curve(const BooleanFunction& f, std::vector<double> grid,
                        EntropyUnit unit, bool include_baselines);

// CSV row per grid point: alpha,F,unit,T,erkip,osw (header mandatory, empty
// cells where a value is absent, 17 significant digits).
void write_curve_csv(std::ostream& out, const CurveTable& table);

// The two n=4, M=4 example curves: f1 = {0,1,2,3} and f2 = {0,1,2,4} on a
// 201-point grid, in bits.
std::pair<CurveTable, CurveTable> fig1_tables();

// One CSV with a `series` column: the two curves plus the constant T line.
void write_fig1_csv(std::ostream& out, const CurveTable& f1, const CurveTable& f2);

std::string format_double17(double value);

}  // namespace noisybool
