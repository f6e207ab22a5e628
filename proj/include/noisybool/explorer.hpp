#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "noisybool/boolfn.hpp"
#include "noisybool/curve.hpp"

namespace noisybool {

enum class DedupMode { none, symmetry };
const char* dedup_name(DedupMode mode) noexcept;

// The symmetry group of the analysis: coordinate permutations composed with
// per-coordinate bit flips (x -> pi(x) ^ c), of order n! 2^n, optionally
// extended by zero-set complementation. All of these preserve F_f and the
// ratio spectrum (complementation preserves the spectrum only at M = 2^(n-1),
// where it also preserves M).
class SymmetryGroup {
 public:
  explicit SymmetryGroup(int n);  // n <= 6

  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return vertex_map_.size(); }

  std::uint64_t image(std::uint64_t mask, std::size_t element) const noexcept;
  // Minimal mask over all images; complements included only when requested.
  std::uint64_t canonical(std::uint64_t mask, bool include_complement) const noexcept;
  std::vector<std::uint64_t> orbit(std::uint64_t mask, bool include_complement) const;

 private:
  int n_;
  std::uint64_t full_mask_;
  std::vector<std::array<std::uint8_t, 64>> vertex_map_;
};

// Visits every M-subset of the n-cube exactly once, in increasing bitmask
// order. dedup = symmetry visits only canonical orbit representatives
// (complementation joins orbits when M = 2^(n-1)). Requires n <= 5.
void for_each_function(int n, std::uint64_t m, DedupMode dedup,
                       const std::function<void(const BooleanFunction&)>& visit);
std::vector<BooleanFunction> enumerate_functions(int n, std::uint64_t m, DedupMode dedup);

struct SearchReport {
  int n = 0;
  std::uint64_t m = 0;
  std::uint64_t functions_examined = 0;
  double best_value = 0.0;  // max F''(1/2), nats
  std::uint64_t argmax_count = 0;
  std::vector<std::vector<std::uint32_t>> argmax_zero_sets;  // possibly truncated
  double lex_value = 0.0;
  bool lex_is_max = false;
  DedupMode dedup_mode = DedupMode::none;
};

// Exhaustive maximum of F''(1/2) over all M-subsets at dimension n <= 5.
SearchReport max_d2(int n, std::uint64_t m, DedupMode dedup = DedupMode::none,
                    unsigned workers = 1, std::size_t max_argmax = 64);

struct ScanViolation {
  std::vector<std::uint32_t> zero_set;
  double alpha = 0.0;
  double margin = 0.0;  // F(alpha) - T
};

struct ConjectureScan {
  int n = 0;
  std::optional<std::uint64_t> m_filter;  // absent = all zero-sets
  std::vector<double> grid;
  double tolerance = 0.0;
  std::uint64_t functions_examined = 0;
  std::uint64_t violation_count = 0;
  std::vector<ScanViolation> violations;  // possibly truncated
  double max_margin = 0.0;                // most positive F - T observed
};

// Evaluates F_f(alpha) - T for every enumerated f and grid point, recording
// margins above the tolerance. All-M scans require n <= 4; fixed-M scans
// allow n <= 5. Numerical evidence, not proof.
ConjectureScan conjecture_scan(int n, std::optional<std::uint64_t> m_filter,
                               std::vector<double> grid, double tolerance = 1e-9,
                               unsigned workers = 1, std::size_t max_violations = 1000);

enum class CurveShape { quasi_concave, single_peak_wave, flat, other };
const char* shape_name(CurveShape shape) noexcept;

struct ShapeClass {
  CurveShape shape = CurveShape::other;
  std::vector<double> extrema_locations;
};

// Classifies a sampled curve by its interior extrema after merging plateaus
// within the tolerance: one maximum and no minima is quasi-concave; the
// min-max-min pattern with the maximum at the grid point nearest 1/2 is the
// single-peak wave. Requires a symmetric grid with at least 101 points.
ShapeClass classify_shape(const CurveTable& curve, double tolerance = 1e-10);

struct ShapeCensus {
  int n = 0;
  std::optional<std::uint64_t> m_filter;
  std::uint64_t functions_examined = 0;
  std::uint64_t quasi_concave = 0;
  std::uint64_t single_peak_wave = 0;
  std::uint64_t flat = 0;
  std::uint64_t other = 0;
  std::vector<std::vector<std::uint32_t>> other_zero_sets;  // possibly truncated
};

ShapeCensus shape_census(int n, std::optional<std::uint64_t> m_filter,
                         std::vector<double> grid, double plateau_tolerance = 1e-10,
                         unsigned workers = 1, std::size_t max_other = 64);

struct LexSpectrumCheck {
  int n = 0;
  std::uint64_t m = 0;
  bool passed = false;
  std::uint64_t functions_examined = 0;
  std::vector<std::uint32_t> counterexample;  // empty when passed
};

// Verifies that the lex spectrum compares >= the spectrum of every M-subset.
LexSpectrumCheck verify_lex_max_spectrum(int n, std::uint64_t m, unsigned workers = 1);

nlohmann::json to_json(const SearchReport& report);
nlohmann::json to_json(const ConjectureScan& scan);
nlohmann::json to_json(const ShapeCensus& census);
nlohmann::json to_json(const LexSpectrumCheck& check);

}  // namespace noisybool
