// Command-line frontend: curve/spectrum/d2 evaluation, exhaustive searches and
// scans, shape census, sequence bounds and identity sweeps. Emits CSV for
// curves and JSON for reports. Exit codes: 0 success, 1 internal error,
// 2 validation error, 3 conjecture-scan violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "noisybool/boolfn.hpp"
#include "noisybool/curve.hpp"
#include "noisybool/explorer.hpp"
#include "noisybool/identities.hpp"
#include "noisybool/sequences.hpp"
#include "noisybool/spectral.hpp"

namespace nb = noisybool;
using nlohmann::json;

namespace {

struct FunctionOptions {
  std::string zeros;
  std::string mask;
  std::uint64_t lex_size = 0;
  int dictator_coord = 0;
  CLI::Option* zeros_opt = nullptr;
  CLI::Option* mask_opt = nullptr;
  CLI::Option* lex_opt = nullptr;
  CLI::Option* dict_opt = nullptr;

  void attach(CLI::App* sub, bool required) {
    auto* group = sub->add_option_group("function", "Boolean function specification");
    zeros_opt = group->add_option("--zeros", zeros, "comma-separated zero-set, e.g. 0,1,2,4");
    mask_opt = group->add_option("--mask", mask, "zero-set bitmask, e.g. 0x0017 (n <= 6)");
    lex_opt = group->add_option("--lex", lex_size, "lex function with this zero-set size");
    dict_opt = group->add_option("--dictator", dictator_coord, "dictator on coordinate i (1-based)");
    group->require_option(required ? 1 : 0, 1);
  }

  bool given() const {
    return zeros_opt->count() || mask_opt->count() || lex_opt->count() || dict_opt->count();
  }

  nb::BooleanFunction resolve(int n) const {
    if (zeros_opt->count()) return nb::parse_zero_set("n=" + std::to_string(n) + "; zeros=" + zeros);
    if (mask_opt->count()) return nb::parse_zero_set("n=" + std::to_string(n) + "; mask=" + mask);
    if (lex_opt->count()) return nb::BooleanFunction::lex(n, lex_size);
    return nb::BooleanFunction::dictator(n, dictator_coord);
  }
};

std::vector<double> parse_grid(const std::string& spec) {
  double start = 0.0, step = 0.0, end = 0.0;
  char extra = '\0';
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &step, &end, &extra) != 3) {
    nb::fail(nb::errc::parse_error, "--alpha-grid expects start:step:end, got '" + spec + "'");
  }
  return nb::make_alpha_grid(start, step, end);
}

nb::EntropyUnit parse_unit(const std::string& unit) {
  if (unit == "bits") return nb::EntropyUnit::bits;
  if (unit == "nats") return nb::EntropyUnit::nats;
  nb::fail(nb::errc::parse_error, "--unit must be bits or nats, got '" + unit + "'");
}

unsigned resolve_workers(const CLI::Option* opt, unsigned value) {
  if (opt != nullptr && opt->count() > 0) return value;
  if (const char* env = std::getenv("NOISYBOOL_WORKERS")) {
    char* rest = nullptr;
    const unsigned long parsed = std::strtoul(env, &rest, 10);
    if (rest != nullptr && *rest == '\0') return static_cast<unsigned>(parsed);
  }
  return 0;  // auto
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) nb::fail(nb::errc::io_failure, "cannot write to '" + path + "'");
}

json curve_to_json(const nb::CurveTable& t) {
  json j{
      {"function", {{"n", t.n}, {"zeros", t.zero_set}}},
      {"unit", nb::unit_name(t.unit)},
      {"T", t.t},
      {"grid", t.grid},
      {"F", t.f},
  };
  if (!t.erkip.empty()) {
    j["erkip"] = t.erkip;
    json osw = json::array();
    for (const auto& v : t.osw) {
      if (v.has_value()) {
        osw.push_back(*v);
      } else {
        osw.push_back(nullptr);
      }
    }
    j["osw"] = std::move(osw);
  }
  return j;
}

// --- subcommand runners ------------------------------------------------------

int run_curve(int n, const FunctionOptions& fn, const std::string& grid_spec,
              const std::string& unit, bool baselines, const std::string& format,
              const std::string& out) {
  const nb::BooleanFunction f = fn.resolve(n);
  const nb::CurveTable table = nb::sample_curve(f, parse_grid(grid_spec), parse_unit(unit), baselines);
  if (format == "json") {
    write_output(out, curve_to_json(table).dump(2) + "\n");
  } else if (format == "csv") {
    std::ostringstream csv;
    nb::write_curve_csv(csv, table);
    write_output(out, csv.str());
  } else {
    nb::fail(nb::errc::parse_error, "--format must be csv or json");
  }
  return 0;
}

int run_spectrum(int n, const FunctionOptions& fn, const std::string& out) {
  const nb::BooleanFunction f = fn.resolve(n);
  const std::vector<std::uint32_t> counts = f.column_one_counts();
  std::vector<std::uint64_t> gamma;
  for (std::uint32_t c : counts) gamma.push_back(std::min<std::uint64_t>(c, f.zero_count() - c));
  json j{
      {"n", f.dimension()},
      {"M", f.zero_count()},
      {"zeros", f.zero_set()},
      {"column_one_counts", counts},
      {"gamma", gamma},
      {"ratio_spectrum", f.ratio_spectrum().r},
      {"weight_spectrum", f.weight_spectrum().c},
  };
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int run_d2(int n, const FunctionOptions& fn, const std::string& out) {
  const nb::D2Report rep = nb::d2_at_half(fn.resolve(n));
  json j{
      {"n", rep.n},
      {"M", rep.m},
      {"r", rep.spectrum.r},
      {"sum_term", rep.sum_term},
      {"value", rep.value},
      {"unit", "nats"},
  };
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int run_search(int n, std::uint64_t m, const std::string& dedup, unsigned workers,
               std::size_t max_argmax, const std::string& out) {
  const nb::DedupMode mode = dedup == "symmetry" ? nb::DedupMode::symmetry : nb::DedupMode::none;
  const nb::SearchReport rep = nb::max_d2(n, m, mode, workers, max_argmax);
  write_output(out, nb::to_json(rep).dump(2) + "\n");
  return 0;
}

int run_scan(int n, std::optional<std::uint64_t> m, const std::string& grid_spec,
             double tolerance, unsigned workers, const std::string& out) {
  const nb::ConjectureScan scan =
      nb::conjecture_scan(n, m, parse_grid(grid_spec), tolerance, workers);
  write_output(out, nb::to_json(scan).dump(2) + "\n");
  return scan.violation_count > 0 ? 3 : 0;
}

int run_shapes(int n, const FunctionOptions& fn, std::optional<std::uint64_t> m,
               const std::string& grid_spec, double tolerance, unsigned workers,
               const std::string& out) {
  std::vector<double> grid = parse_grid(grid_spec);
  if (fn.given()) {
    const nb::CurveTable table =
        nb::sample_curve(fn.resolve(n), std::move(grid), nb::EntropyUnit::bits, false);
    const nb::ShapeClass cls = nb::classify_shape(table, tolerance);
    json j{{"n", n},
           {"zeros", table.zero_set},
           {"shape", nb::shape_name(cls.shape)},
           {"extrema_locations", cls.extrema_locations}};
    write_output(out, j.dump(2) + "\n");
    return 0;
  }
  const nb::ShapeCensus census = nb::shape_census(n, m, std::move(grid), tolerance, workers);
  write_output(out, nb::to_json(census).dump(2) + "\n");
  return 0;
}

json bounds_report_to_json(const nb::BoundsReport& rep) {
  json j{
      {"m", rep.m},
      {"a", nb::uint128_to_string(rep.a)},
      {"lower", rep.lower},
      {"upper", rep.upper},
      {"lower_holds", rep.lower_holds},
      {"upper_holds", rep.upper_holds},
      {"lower_equality", rep.lower_equality},
      {"exact_compare", rep.exact_compare},
  };
  if (rep.tight_upper.has_value()) {
    j["tight_upper"] = *rep.tight_upper;
    j["tight_holds"] = rep.tight_holds;
  }
  return j;
}

int run_sequence(const CLI::Option* m_opt, std::uint64_t m, const CLI::Option* a_opt,
                 std::uint64_t a_index, bool check_bounds_flag, std::uint64_t max_m,
                 const std::string& out) {
  if (m_opt->count() > 0) {
    write_output(out, bounds_report_to_json(nb::check_bounds(m)).dump(2) + "\n");
    return 0;
  }
  if (a_opt->count() > 0) {
    json j{{"m", a_index}, {"a", nb::uint128_to_string(nb::a_rec(a_index))}};
    write_output(out, j.dump(2) + "\n");
    return 0;
  }
  if (!check_bounds_flag) {
    nb::fail(nb::errc::invalid_argument, "sequence requires one of --m, --a, --check-bounds");
  }
  const nb::BoundsSweep sweep = nb::check_bounds_sweep(max_m);
  json j{
      {"max_m", sweep.max_m},
      {"checked", sweep.checked},
      {"all_hold", sweep.all_hold},
      {"equality_count", sweep.equality_count},
      {"expected_equality_count", sweep.expected_equality_count},
      {"failures", sweep.failures},
  };
  write_output(out, j.dump(2) + "\n");
  return sweep.all_hold && sweep.equality_count == sweep.expected_equality_count ? 0 : 1;
}

int run_identities(int max5, int max6, int max7, int n, int samples, std::uint64_t seed,
                   const std::string& out) {
  std::uint64_t checks = 0, failures = 0;
  json failed = json::array();
  auto record = [&](const nb::IdentityCheck& c) {
    ++checks;
    if (!c.pass) {
      ++failures;
      failed.push_back({{"lemma", c.lemma},
                        {"params", c.params},
                        {"lhs", nb::uint128_to_string(c.lhs)},
                        {"rhs", nb::uint128_to_string(c.rhs)}});
    }
  };
  for (int k = 1; k <= max5; ++k) {
    for (const auto& c : nb::lemma5(k)) record(c);
  }
  for (int a = 1; a < max6; ++a) {
    for (int b = 1; a + b <= max6; ++b) {
      for (const auto& c : nb::lemma6(a, b)) record(c);
    }
  }
  for (int a = 0; a <= max7; ++a) {
    for (int b = 1; a + b < max7; ++b) {
      for (int c = 1; a + b + c <= max7; ++c) record(nb::lemma7(a, b, c));
    }
  }

  if (n > nb::BooleanFunction::kMaxMaskDimension) {
    nb::fail(nb::errc::instance_too_large, "identities sampling supports n <= 6");
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t s = std::uint64_t{1} << n;
  std::uniform_int_distribution<std::uint64_t> mask_dist(1, (std::uint64_t{1} << s) - 2);
  std::uniform_real_distribution<double> alpha_dist(0.01, 0.99);
  std::uint64_t prob_checks = 0, prob_failures = 0;
  for (int i = 0; i < samples; ++i) {
    const nb::BooleanFunction f = nb::BooleanFunction::from_mask(n, mask_dist(rng));
    const double alpha = alpha_dist(rng);
    for (const nb::ProbSumCheck& c : nb::lemma4_check(f, alpha, 2)) {
      ++prob_checks;
      if (!c.pass) ++prob_failures;
    }
  }

  json j{
      {"identity_checks", checks},
      {"identity_failures", failures},
      {"failed", failed},
      {"prob_sum_checks", prob_checks},
      {"prob_sum_failures", prob_failures},
  };
  write_output(out, j.dump(2) + "\n");
  return failures == 0 && prob_failures == 0 ? 0 : 1;
}

int run_fig1(const std::string& out) {
  const auto [f1, f2] = nb::fig1_tables();
  std::ostringstream csv;
  nb::write_fig1_csv(csv, f1, f2);
  write_output(out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of Boolean functions of a noisy binary symmetric channel"};
  app.require_subcommand(1);

  int n = 0;
  std::string out;
  std::string grid_spec = "0:0.01:1";
  std::string unit = "bits";
  std::string format = "csv";
  std::string dedup = "none";
  bool baselines = false;
  unsigned workers = 0;
  double tolerance = 0.0;
  std::uint64_t m_value = 0;

  auto add_n = [&n](CLI::App* sub) {
    sub->add_option("--n", n, "cube dimension")->required();
  };
  auto add_out = [&out](CLI::App* sub) { sub->add_option("--out", out, "output path (default stdout)"); };

  FunctionOptions curve_fn, spectrum_fn, d2_fn, shapes_fn;

  CLI::App* curve = app.add_subcommand("curve", "sample F_f(alpha) over a grid");
  add_n(curve);
  curve_fn.attach(curve, true);
  curve->add_option("--alpha-grid", grid_spec, "grid start:step:end (default 0:0.01:1)");
  curve->add_option("--unit", unit, "bits or nats (default bits)");
  curve->add_flag("--baselines", baselines, "include Erkip/OSW baseline columns");
  curve->add_option("--format", format, "csv or json (default csv)");
  add_out(curve);

  CLI::App* spectrum = app.add_subcommand("spectrum", "ratio and weight spectra of a function");
  add_n(spectrum);
  spectrum_fn.attach(spectrum, true);
  add_out(spectrum);

  CLI::App* d2 = app.add_subcommand("d2", "closed-form F''(1/2) in nats");
  add_n(d2);
  d2_fn.attach(d2, true);
  add_out(d2);

  CLI::App* search = app.add_subcommand("search", "exhaustive max of F''(1/2) over M-subsets");
  add_n(search);
  std::size_t max_argmax = 64;
  search->add_option("--M", m_value, "zero-set size")->required();
  search->add_option("--dedup", dedup, "none or symmetry (default none)")
      ->check(CLI::IsMember({"none", "symmetry"}));
  CLI::Option* search_workers = search->add_option("--workers", workers, "worker threads (0 = auto)");
  search->add_option("--max-argmax", max_argmax, "cap on stored argmax zero-sets");
  add_out(search);

  CLI::App* scan = app.add_subcommand("scan", "scan F_f(alpha) <= T over enumerated functions");
  add_n(scan);
  CLI::Option* scan_m = scan->add_option("--M", m_value, "restrict to this zero-set size");
  scan->add_option("--alpha-grid", grid_spec, "grid start:step:end (default 0:0.01:1)");
  tolerance = 1e-9;
  scan->add_option("--tolerance", tolerance, "violation tolerance (default 1e-9)");
  CLI::Option* scan_workers = scan->add_option("--workers", workers, "worker threads (0 = auto)");
  add_out(scan);

  CLI::App* shapes = app.add_subcommand("shapes", "classify curve shapes");
  add_n(shapes);
  shapes_fn.attach(shapes, false);
  CLI::Option* shapes_m = shapes->add_option("--M", m_value, "census restricted to this size");
  shapes->add_option("--alpha-grid", grid_spec, "grid start:step:end (default 0:0.01:1)");
  double plateau_tol = 1e-10;
  shapes->add_option("--tolerance", plateau_tol, "plateau-merge tolerance (default 1e-10)");
  CLI::Option* shapes_workers = shapes->add_option("--workers", workers, "worker threads (0 = auto)");
  add_out(shapes);

  CLI::App* sequence = app.add_subcommand("sequence", "a(m) recursion, closed form and bounds");
  std::uint64_t seq_m = 0, seq_a = 0, max_m = 1000000;
  CLI::Option* seq_m_opt = sequence->add_option("--m", seq_m, "bounds report for this m");
  CLI::Option* seq_a_opt = sequence->add_option("--a", seq_a, "print a(m) for this m");
  bool check_bounds_flag = false;
  CLI::Option* seq_sweep_opt =
      sequence->add_flag("--check-bounds", check_bounds_flag, "sweep bounds for all m <= --max-m");
  sequence->add_option("--max-m", max_m, "sweep limit (default 1000000)");
  seq_m_opt->excludes(seq_a_opt)->excludes(seq_sweep_opt);
  seq_a_opt->excludes(seq_sweep_opt);
  add_out(sequence);

  CLI::App* identities = app.add_subcommand("identities", "brute-force identity sweeps");
  int max5 = 30, max6 = 40, max7 = 30, id_n = 4, samples = 100;
  std::uint64_t seed = 1;
  identities->add_option("--max-lemma5", max5, "lemma-5 n cap (default 30)");
  identities->add_option("--max-lemma6", max6, "lemma-6 m+n cap (default 40)");
  identities->add_option("--max-lemma7", max7, "lemma-7 m+n+t cap (default 30)");
  identities->add_option("--n", id_n, "dimension for probability-sum checks (default 4)");
  identities->add_option("--samples", samples, "random (f, alpha) samples (default 100)");
  identities->add_option("--seed", seed, "RNG seed (default 1)");
  add_out(identities);

  CLI::App* fig1 = app.add_subcommand("fig1", "emit the two n=4, M=4 example curves as CSV");
  add_out(fig1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error:usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*curve) return run_curve(n, curve_fn, grid_spec, unit, baselines, format, out);
    if (*spectrum) return run_spectrum(n, spectrum_fn, out);
    if (*d2) return run_d2(n, d2_fn, out);
    if (*search) {
      return run_search(n, m_value, dedup, resolve_workers(search_workers, workers), max_argmax, out);
    }
    if (*scan) {
      std::optional<std::uint64_t> m_filter;
      if (scan_m->count() > 0) m_filter = m_value;
      return run_scan(n, m_filter, grid_spec, tolerance, resolve_workers(scan_workers, workers), out);
    }
    if (*shapes) {
      std::optional<std::uint64_t> m_filter;
      if (shapes_m->count() > 0) m_filter = m_value;
      return run_shapes(n, shapes_fn, m_filter, grid_spec, plateau_tol,
                        resolve_workers(shapes_workers, workers), out);
    }
    if (*sequence) {
      return run_sequence(seq_m_opt, seq_m, seq_a_opt, seq_a, check_bounds_flag, max_m, out);
    }
    if (*identities) return run_identities(max5, max6, max7, id_n, samples, seed, out);
    if (*fig1) return run_fig1(out);
    return 2;
  } catch (const nb::Error& e) {
    std::cerr << "error:" << nb::errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == nb::errc::io_failure ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error:internal: " << e.what() << "\n";
    return 1;
  }
}
