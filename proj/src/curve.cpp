#include "noisybool/curve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <span>

namespace noisybool {

const char* unit_name(EntropyUnit unit) noexcept {
  return unit == EntropyUnit::bits ? "bits" : "nats";
}

double one_bit(EntropyUnit unit) noexcept {
  return unit == EntropyUnit::bits ? 1.0 : std::numbers::ln2;
}

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(errc::probability_out_of_range,
         std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

double entropy_unchecked(double p, EntropyUnit unit) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  const double q = 1.0 - p;
  if (unit == EntropyUnit::bits) return -p * std::log2(p) - q * std::log2(q);
  return -p * std::log(p) - q * std::log(q);
}

void hamming_histogram(std::span<const std::uint32_t> zero_set, std::uint32_t y,
                       std::span<std::uint64_t> hist) {
  std::fill(hist.begin(), hist.end(), 0);
  for (std::uint32_t x : zero_set) ++hist[static_cast<unsigned>(std::popcount(x ^ y))];
}

double weighted_prob(std::span<const std::uint64_t> hist, std::span<const double> w) {
  double p = 0.0;
  for (std::size_t d = 0; d < hist.size(); ++d) p += static_cast<double>(hist[d]) * w[d];
  return std::clamp(p, 0.0, 1.0);
}

// sum_y H(Pr{f=0 | y, alpha}), accumulated in increasing codeword order.
double conditional_entropy_sum(const BooleanFunction& f, double alpha, EntropyUnit unit) {
  const int n = f.dimension();
  const std::uint64_t s = f.cube_size();
  const std::vector<double> w = bsc_weights(n, alpha);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1);
  double acc = 0.0;
  for (std::uint64_t y = 0; y < s; ++y) {
    hamming_histogram(f.zero_set(), static_cast<std::uint32_t>(y), hist);
    acc += entropy_unchecked(weighted_prob(hist, w), unit);
  }
  return acc;
}

}  // namespace

double binary_entropy(double p, EntropyUnit unit) {
  check_probability(p, "probability");
  return entropy_unchecked(p, unit);
}

std::vector<double> bsc_weights(int n, double alpha) {
  check_probability(alpha, "alpha");
  const double beta = 1.0 - alpha;
  std::vector<double> pa(static_cast<std::size_t>(n) + 1);
  std::vector<double> pb(static_cast<std::size_t>(n) + 1);
  pa[0] = pb[0] = 1.0;
  for (int d = 1; d <= n; ++d) {
    pa[d] = pa[d - 1] * alpha;
    pb[d] = pb[d - 1] * beta;
  }
  std::vector<double> w(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) w[d] = pa[d] * pb[n - d];
  return w;
}

double cond_prob_zero(const BooleanFunction& f, std::uint32_t y, double alpha) {
  if (y >= f.cube_size()) {
    fail(errc::codeword_out_of_range,
         "codeword " + std::to_string(y) + " out of range for n=" + std::to_string(f.dimension()));
  }
  const std::vector<double> w = bsc_weights(f.dimension(), alpha);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(f.dimension()) + 1);
  hamming_histogram(f.zero_set(), y, hist);
  return weighted_prob(hist, w);
}

double big_f(const BooleanFunction& f, double alpha, EntropyUnit unit) {
  check_probability(alpha, "alpha");
  const double s = static_cast<double>(f.cube_size());
  return binary_entropy(alpha, unit) - conditional_entropy_sum(f, alpha, unit) / s;
}

double big_t(const BooleanFunction& f, EntropyUnit unit) {
  const double pf = static_cast<double>(f.zero_count()) / static_cast<double>(f.cube_size());
  return one_bit(unit) - binary_entropy(pf, unit);
}

double mutual_information(const BooleanFunction& f, double alpha, EntropyUnit unit) {
  check_probability(alpha, "alpha");
  const double s = static_cast<double>(f.cube_size());
  const double pf = static_cast<double>(f.zero_count()) / s;
  return binary_entropy(pf, unit) - conditional_entropy_sum(f, alpha, unit) / s;
}

BaselineBounds baseline_bounds(double alpha) {
  check_probability(alpha, "alpha");
  const double u = 1.0 - 2.0 * alpha;
  BaselineBounds b;
  b.erkip = u * u;
  const double lo = 0.5 * (1.0 - 1.0 / std::sqrt(3.0));
  if (alpha >= lo && alpha <= 1.0 - lo) {
    const double half_log2e = 0.5 * std::numbers::log2e;
    b.osw = half_log2e * u * u + 9.0 * (1.0 - half_log2e) * u * u * u * u;
  }
  return b;
}

double fd_derivative(const BooleanFunction& f, double alpha, int order, double step) {
  if (order != 1 && order != 2) {
    fail(errc::invalid_argument, "derivative order must be 1 or 2");
  }
  if (!(step > 0.0) || !(alpha - step > 0.0) || !(alpha + step < 1.0)) {
    fail(errc::step_out_of_domain,
         "need 0 < alpha-h and alpha+h < 1 with h > 0 (alpha=" + std::to_string(alpha) +
             ", h=" + std::to_string(step) + ")");
  }
  const double fp = big_f(f, alpha + step, EntropyUnit::nats);
  const double fm = big_f(f, alpha - step, EntropyUnit::nats);
  if (order == 1) return (fp - fm) / (2.0 * step);
  const double f0 = big_f(f, alpha, EntropyUnit::nats);
  return (fp - 2.0 * f0 + fm) / (step * step);
}

std::vector<double> make_alpha_grid(double start, double step, double end) {
  if (!(step > 0.0) || !(start < end) || !(start >= 0.0) || !(end <= 1.0)) {
    fail(errc::invalid_grid, "grid requires 0 <= start < end <= 1 and step > 0");
  }
  std::vector<double> grid;
  for (std::uint64_t k = 0;; ++k) {
    const double a = start + static_cast<double>(k) * step;
    if (a >= end - step * 1e-9) {
      grid.push_back(end);
      break;
    }
    grid.push_back(a);
    if (grid.size() > 100'000'000) fail(errc::invalid_grid, "grid too fine");
  }
  return grid;
}

void validate_alpha_grid(const std::vector<double>& grid) {
  if (grid.empty()) fail(errc::invalid_grid, "grid is empty");
  double prev = -1.0;
  for (double a : grid) {
    if (!(a >= 0.0 && a <= 1.0)) fail(errc::invalid_grid, "grid value outside [0, 1]");
    if (!(a > prev)) fail(errc::invalid_grid, "grid must be strictly increasing");
    prev = a;
  }
}

CurveTable sample_curve(const BooleanFunction& f, std::vector<double> grid,
                        EntropyUnit unit, bool include_baselines) {
  validate_alpha_grid(grid);
  const int n = f.dimension();
  const std::uint64_t s = f.cube_size();
  const std::size_t points = grid.size();

  std::vector<std::vector<double>> weights(points);
  for (std::size_t i = 0; i < points; ++i) weights[i] = bsc_weights(n, grid[i]);

  std::vector<double> acc(points, 0.0);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t y = 0; y < s; ++y) {
    hamming_histogram(f.zero_set(), static_cast<std::uint32_t>(y), hist);
    for (std::size_t i = 0; i < points; ++i) {
      acc[i] += entropy_unchecked(weighted_prob(hist, weights[i]), unit);
    }
  }

  CurveTable table;
  table.n = n;
  table.zero_set = f.zero_set();
  table.unit = unit;
  table.t = big_t(f, unit);
  table.f.resize(points);
  for (std::size_t i = 0; i < points; ++i) {
    table.f[i] = binary_entropy(grid[i], unit) - acc[i] / static_cast<double>(s);
  }
  if (include_baselines) {
    table.erkip.resize(points);
    table.osw.resize(points);
    for (std::size_t i = 0; i < points; ++i) {
      const BaselineBounds b = baseline_bounds(grid[i]);
      table.erkip[i] = b.erkip;
      table.osw[i] = b.osw;
    }
  }
  table.grid = std::move(grid);
  return table;
}

std::string format_double17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_curve_csv(std::ostream& out, const CurveTable& table) {
  out << "alpha,F,unit,T,erkip,osw\n";
  const bool baselines = !table.erkip.empty();
  for (std::size_t i = 0; i < table.grid.size(); ++i) {
    out << format_double17(table.grid[i]) << ',' << format_double17(table.f[i]) << ','
        << unit_name(table.unit) << ',' << format_double17(table.t) << ',';
    if (baselines) out << format_double17(table.erkip[i]);
    out << ',';
    if (baselines && table.osw[i].has_value()) out << format_double17(*table.osw[i]);
    out << '\n';
  }
}

std::pair<CurveTable, CurveTable> fig1_tables() {
  const std::vector<double> grid = make_alpha_grid(0.0, 0.005, 1.0);
  CurveTable f1 = sample_curve(BooleanFunction::lex(4, 4), grid, EntropyUnit::bits, false);
  CurveTable f2 = sample_curve(BooleanFunction(4, {0, 1, 2, 4}), grid, EntropyUnit::bits, false);
  return {std::move(f1), std::move(f2)};
}

void write_fig1_csv(std::ostream& out, const CurveTable& f1, const CurveTable& f2) {
  out << "series,alpha,F,unit,T,erkip,osw\n";
  auto emit = [&out](const char* series, const CurveTable& t, bool constant_t) {
    for (std::size_t i = 0; i < t.grid.size(); ++i) {
      const double v = constant_t ? t.t : t.f[i];
      out << series << ',' << format_double17(t.grid[i]) << ',' << format_double17(v) << ','
          << unit_name(t.unit) << ',' << format_double17(t.t) << ",,\n";
    }
  };
  emit("f1", f1, false);
  emit("f2", f2, false);
  emit("T", f1, true);
}

}  // namespace noisybool
