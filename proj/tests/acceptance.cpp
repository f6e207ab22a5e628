// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.
// The CLI binary path (for the exit-code pathway of criterion 10) is passed
// via --cli; ctest wires it up automatically.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "noisybool/boolfn.hpp"
#include "noisybool/curve.hpp"
#include "noisybool/explorer.hpp"
#include "noisybool/identities.hpp"
#include "noisybool/sequences.hpp"
#include "noisybool/spectral.hpp"

using namespace noisybool;

namespace {

std::string g_cli_path;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && pass) {
      pass = false;
      detail = message;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::uint32_t> random_zero_set(std::mt19937_64& rng, int n, std::uint64_t m) {
  const std::uint64_t s = std::uint64_t{1} << n;
  std::vector<std::uint32_t> pool(s);
  for (std::uint64_t x = 0; x < s; ++x) pool[x] = static_cast<std::uint32_t>(x);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::uint64_t> pick(i, s - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(m);
  return pool;
}

BooleanFunction random_function(std::mt19937_64& rng, int n, std::uint64_t min_m,
                                std::uint64_t max_m) {
  std::uniform_int_distribution<std::uint64_t> size_dist(min_m, max_m);
  return BooleanFunction(n, random_zero_set(rng, n, size_dist(rng)));
}

// 1. |d2_at_half - central finite difference| <= 1e-5: exhaustive n=3 plus
//    1000 random functions each at n=4 and n=5.
Outcome criterion1() {
  Outcome out;
  double worst = 0.0;
  for (std::uint32_t mask = 1; mask < 255; ++mask) {
    const BooleanFunction f = BooleanFunction::from_mask(3, mask);
    worst = std::max(worst,
                     std::abs(d2_at_half(f).value - fd_derivative(f, 0.5, 2, 1e-4)));
  }
  std::mt19937_64 rng(101);
  for (int n : {4, 5}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const BooleanFunction f = random_function(rng, n, 1, (std::uint64_t{1} << n) - 1);
      worst = std::max(worst,
                       std::abs(d2_at_half(f).value - fd_derivative(f, 0.5, 2, 1e-4)));
    }
  }
  out.require(worst <= 1e-5, "max |closed - fd| = " + std::to_string(worst));
  if (out.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "max|closed-fd|=%.2e", worst);
    out.detail = buf;
  }
  return out;
}

// 2. Exhaustive nonpositivity: best F''(1/2) <= 1e-12 everywhere, with equality
//    exactly on the 2n dictator/complement zero-sets at M = 2^(n-1).
Outcome criterion2() {
  Outcome out;
  for (int n = 2; n <= 4; ++n) {
    const std::uint64_t s = std::uint64_t{1} << n;
    std::set<std::uint64_t> dictator_masks;
    for (int i = 1; i <= n; ++i) {
      const std::uint64_t mask = BooleanFunction::dictator(n, i).mask();
      dictator_masks.insert(mask);
      dictator_masks.insert(((s == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << s) - 1)) ^ mask);
    }
    for (std::uint64_t m = 1; m < s; ++m) {
      const SearchReport rep = max_d2(n, m, DedupMode::none, 0);
      out.require(rep.best_value <= 1e-12,
                  "positive max at n=" + std::to_string(n) + " M=" + std::to_string(m));
      if (2 * m == s) {
        out.require(std::abs(rep.best_value) <= 1e-12,
                    "missing equality at M=2^(n-1), n=" + std::to_string(n));
        out.require(rep.argmax_count == static_cast<std::uint64_t>(2 * n),
                    "argmax count != 2n at n=" + std::to_string(n));
        std::set<std::uint64_t> argmax;
        for (const auto& zs : rep.argmax_zero_sets) {
          std::uint64_t mask = 0;
          for (std::uint32_t x : zs) mask |= std::uint64_t{1} << x;
          argmax.insert(mask);
        }
        out.require(argmax == dictator_masks,
                    "equality set is not the dictator set at n=" + std::to_string(n));
      } else {
        out.require(rep.best_value < -1e-12,
                    "spurious equality at n=" + std::to_string(n) + " M=" + std::to_string(m));
      }
    }
  }
  return out;
}

// 3. verify_lex_max_spectrum passes and lex attains max_d2 for all n <= 4.
Outcome criterion3() {
  Outcome out;
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t s = std::uint64_t{1} << n;
    for (std::uint64_t m = 1; m < s; ++m) {
      out.require(verify_lex_max_spectrum(n, m).passed,
                  "lex spectrum not maximal at n=" + std::to_string(n) +
                      " M=" + std::to_string(m));
      out.require(max_d2(n, m).lex_is_max,
                  "lex not a d2 maximizer at n=" + std::to_string(n) +
                      " M=" + std::to_string(m));
    }
  }
  return out;
}

// 4. Adjacent-move delta formula vs brute spectrum differences, n=3 and n=4.
Outcome criterion4() {
  Outcome out;
  std::uint64_t pairs = 0;
  for (int n : {3, 4}) {
    const std::uint32_t s = 1u << n;
    std::map<std::uint64_t, std::set<std::vector<std::uint32_t>>> spectra;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
      const std::uint64_t m = static_cast<std::uint64_t>(std::popcount(mask));
      if (m == s) continue;
      spectra[m].insert(BooleanFunction::from_mask(n, mask).ratio_spectrum().r);
    }
    for (const auto& [m, set_for_m] : spectra) {
      for (const auto& upper : set_for_m) {
        for (std::uint64_t i = 0; i + 1 < upper.size(); ++i) {
          if (upper[i] == 0) continue;
          for (std::uint64_t j = i + 1; j < upper.size(); ++j) {
            std::vector<std::uint32_t> lower = upper;
            --lower[i];
            ++lower[j];
            if (set_for_m.count(lower) == 0) continue;
            ++pairs;
            const double brute = d2_from_spectrum(n, m, RatioSpectrum{upper}).value -
                                 d2_from_spectrum(n, m, RatioSpectrum{lower}).value;
            const double formula = adjacent_delta(n, m, i, j);
            out.require(std::abs(brute - formula) <= 1e-12,
                        "delta mismatch at n=" + std::to_string(n) +
                            " M=" + std::to_string(m));
          }
        }
      }
    }
  }
  out.require(pairs > 0, "no adjacent spectrum pairs found");
  if (out.pass) out.detail = std::to_string(pairs) + " adjacent pairs";
  return out;
}

// 5. Symmetry about alpha = 1/2 and complement invariance at 1e-12.
Outcome criterion5() {
  Outcome out;
  const std::vector<double> grid = make_alpha_grid(0.0, 0.01, 1.0);
  const auto check_function = [&](const BooleanFunction& f) {
    const CurveTable table = sample_curve(f, grid, EntropyUnit::bits, false);
    const CurveTable comp = sample_curve(f.complement(), grid, EntropyUnit::bits, false);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      out.require(std::abs(table.f[i] - comp.f[i]) <= 1e-12, "complement mismatch");
      if (grid[i] <= 0.5) {
        const double mirrored = big_f(f, 1.0 - grid[i], EntropyUnit::bits);
        out.require(std::abs(table.f[i] - mirrored) <= 1e-12, "symmetry mismatch");
      }
    }
  };
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t s = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
      check_function(BooleanFunction::from_mask(n, mask));
      if (!out.pass) return out;
    }
  }
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 500 && out.pass; ++trial) {
    check_function(random_function(rng, 4, 0, 16));
  }
  return out;
}

// 6. Midpoint F(1/2) = T and dictator attainment of 1 - H(alpha).
Outcome criterion6() {
  Outcome out;
  const std::vector<double> grid = make_alpha_grid(0.0, 0.01, 1.0);
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t s = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
      const BooleanFunction f = BooleanFunction::from_mask(n, mask);
      out.require(std::abs(big_f(f, 0.5, EntropyUnit::bits) - big_t(f, EntropyUnit::bits)) <= 1e-12,
                  "midpoint mismatch at n=" + std::to_string(n));
    }
  }
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 500; ++trial) {
    const BooleanFunction f = random_function(rng, 4, 0, 16);
    out.require(std::abs(big_f(f, 0.5, EntropyUnit::bits) - big_t(f, EntropyUnit::bits)) <= 1e-12,
                "midpoint mismatch at n=4");
    out.require(std::abs(big_f(f, 0.5, EntropyUnit::nats) - big_t(f, EntropyUnit::nats)) <= 1e-12,
                "midpoint mismatch in nats");
  }
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      const BooleanFunction dict = BooleanFunction::dictator(n, i);
      for (double alpha : grid) {
        const double expected = 1.0 - binary_entropy(alpha, EntropyUnit::bits);
        out.require(std::abs(mutual_information(dict, alpha, EntropyUnit::bits) - expected) <= 1e-12,
                    "dictator MI mismatch at n=" + std::to_string(n));
      }
    }
  }
  return out;
}

// 7. Sequence suite: closed form vs recursion (M <= 1e5), two-sided bounds and
//    the tight bound up to m = 1e6, equality exactly at powers of two.
Outcome criterion7() {
  Outcome out;
  const std::vector<std::uint64_t> table = a_table(100000);
  for (std::uint64_t m = 1; m <= 100000; ++m) {
    if (a_closed(m) != table[m - 1]) {
      out.require(false, "a_closed(" + std::to_string(m) + ") != a_rec(" + std::to_string(m - 1) + ")");
      return out;
    }
  }
  const BoundsSweep sweep = check_bounds_sweep(1000000);
  out.require(sweep.all_hold, "sequence bound failure below m=1e6");
  out.require(sweep.equality_count == sweep.expected_equality_count,
              "lower-bound equality set is not the powers of two");
  if (out.pass) {
    out.detail = "equalities at " + std::to_string(sweep.equality_count) + " powers of two";
  }
  return out;
}

// 8. Identity suite: binomial identities exact at the stated caps; probability
//    sums for 100 random (f, alpha) at n=4.
Outcome criterion8() {
  Outcome out;
  std::uint64_t checks = 0;
  for (int n = 1; n <= 30; ++n) {
    for (const auto& c : lemma5(n)) {
      ++checks;
      out.require(c.pass, c.lemma + " failed at " + c.params);
    }
  }
  for (int m = 1; m < 40; ++m) {
    for (int n = 1; m + n <= 40; ++n) {
      for (const auto& c : lemma6(m, n)) {
        ++checks;
        out.require(c.pass, c.lemma + " failed at " + c.params);
      }
    }
  }
  for (int m = 0; m <= 28; ++m) {
    for (int n = 1; m + n < 30; ++n) {
      for (int t = 1; m + n + t <= 30; ++t) {
        ++checks;
        const IdentityCheck c = lemma7(m, n, t);
        out.require(c.pass, c.lemma + " failed at " + c.params);
      }
    }
  }
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> alpha_dist(0.01, 0.99);
  for (int trial = 0; trial < 100; ++trial) {
    const BooleanFunction f = random_function(rng, 4, 1, 15);
    for (const ProbSumCheck& c : lemma4_check(f, alpha_dist(rng), 2)) {
      ++checks;
      out.require(c.pass, "lemma4 order " + std::to_string(c.order) + " out of tolerance");
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " checks";
  return out;
}

// 9. Lex sum-term constancy (M <= 64) and g(n) monotonicity sweeps.
Outcome criterion9() {
  Outcome out;
  for (std::uint64_t m = 1; m <= 64; ++m) {
    const int min_n = std::max<int>(1, m <= 1 ? 0 : std::bit_width(m - 1));
    const std::uint64_t expected = static_cast<std::uint64_t>(a_rec(m - 1));
    for (int n = min_n; n <= min_n + 6; ++n) {
      std::uint64_t sum_term = 0;
      for (std::uint32_t c : BooleanFunction::lex(n, m).column_one_counts()) {
        sum_term += static_cast<std::uint64_t>(c) * (m - c);
      }
      out.require(sum_term == expected,
                  "lex sum-term not a(M-1) at M=" + std::to_string(m) +
                      " n=" + std::to_string(n));
    }
  }
  for (std::uint64_t m = 1; m <= 64; ++m) {
    const double base = std::log2(static_cast<double>(m)) + 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 40; ++k) {
      const double value = g_of(base + 0.25 * k, m);
      out.require(value < prev, "g not strictly decreasing at M=" + std::to_string(m));
      prev = value;
    }
    const double at_base = g_of(base, m);
    out.require(at_base <= 1e-12, "g(log2 M + 1) > 0 at M=" + std::to_string(m));
    if (std::has_single_bit(m)) {
      out.require(std::abs(at_base) <= 1e-12,
                  "missing g equality at power-of-two M=" + std::to_string(m));
    } else {
      out.require(at_base < -1e-12, "spurious g equality at M=" + std::to_string(m));
    }
  }
  return out;
}

int run_cli_status(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args + " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 10. Regression scan at n=4 (all 65,536 zero-sets, 101-point grid, 1e-9):
//     zero violations, deterministic across worker counts, and the CLI exits
//     with code 3 when a violation is injected.
Outcome criterion10() {
  Outcome out;
  const std::vector<double> grid = make_alpha_grid(0.0, 0.01, 1.0);

  const auto t_par = std::chrono::steady_clock::now();
  const ConjectureScan parallel = conjecture_scan(4, std::nullopt, grid, 1e-9, 8);
  const double par_seconds = seconds_since(t_par);

  const auto t_one = std::chrono::steady_clock::now();
  const ConjectureScan single = conjecture_scan(4, std::nullopt, grid, 1e-9, 1);
  const double one_seconds = seconds_since(t_one);

  out.require(single.functions_examined == 65536, "expected 65,536 zero-sets");
  out.require(single.violation_count == 0,
              std::to_string(single.violation_count) + " conjecture violations");
  out.require(single.max_margin <= 1e-9, "max margin above tolerance");
  out.require(single.max_margin == parallel.max_margin &&
                  single.violation_count == parallel.violation_count,
              "worker count changed the report");

  if (!g_cli_path.empty()) {
    out.require(run_cli_status("scan --n 3 --alpha-grid 0:0.01:1 --tolerance -0.5") == 3,
                "injected violation did not exit 3");
    out.require(run_cli_status("scan --n 2 --alpha-grid 0:0.01:1 --tolerance 1e-9") == 0,
                "clean scan did not exit 0");
  } else {
    out.require(false, "no --cli path provided for the exit-code pathway");
  }
  if (out.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "max_margin=%.2e; %.1fs single, %.1fs with 8 workers",
                  single.max_margin, one_seconds, par_seconds);
    out.detail = buf;
  }
  return out;
}

// 11. Example-figure reproduction: both series peak at T ~ 0.188722 bits at 1/2
//     and classify as quasi-concave / single-peak wave.
Outcome criterion11() {
  Outcome out;
  const auto [f1, f2] = fig1_tables();
  out.require(f1.grid.size() == 201 && f2.grid.size() == 201, "expected 201-point grids");
  out.require(std::abs(f1.f[100] - f1.t) <= 1e-12, "f1 midpoint != T");
  out.require(std::abs(f2.f[100] - f2.t) <= 1e-12, "f2 midpoint != T");
  out.require(std::abs(f1.t - 0.188722) <= 1e-6, "T != 0.188722 bits");
  out.require(std::abs(f2.t - 0.188722) <= 1e-6, "T != 0.188722 bits");
  out.require(classify_shape(f1).shape == CurveShape::quasi_concave,
              "f1 is not quasi-concave");
  out.require(classify_shape(f2).shape == CurveShape::single_peak_wave,
              "f2 is not a single-peak wave");
  std::ostringstream csv;
  write_fig1_csv(csv, f1, f2);
  out.require(csv.str().rfind("series,alpha,F,unit,T,erkip,osw", 0) == 0,
              "fig1 CSV header mismatch");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
  }

  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {1, "closed-form F''(1/2) vs finite-difference oracle", criterion1},
      {2, "exhaustive nonpositivity of F''(1/2) with dictator-only equality", criterion2},
      {3, "lex extremality: spectrum order and d2 maximum (n<=4)", criterion3},
      {4, "adjacent-spectrum delta formula (n=3,4)", criterion4},
      {5, "symmetry about 1/2 and complement invariance", criterion5},
      {6, "midpoint F(1/2)=T and dictator MI attainment", criterion6},
      {7, "sequence suite: a(m) closed form and two-sided bounds", criterion7},
      {8, "identity suite: binomial identities exact, probability sums", criterion8},
      {9, "lex sum-term constancy and g(n) monotonicity", criterion9},
      {10, "conjecture regression scan at n=4 with exit-code pathway", criterion10},
      {11, "example-figure curves: midpoint, T value, shapes", criterion11},
  };

  bool all_pass = true;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = criterion.run();
    const double elapsed = seconds_since(start);
    all_pass = all_pass && outcome.pass;
    std::printf("[%s] %2d. %s (%.2fs)%s%s\n", outcome.pass ? "PASS" : "FAIL", criterion.id,
                criterion.name, elapsed, outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES present");
  return all_pass ? 0 : 1;
}
