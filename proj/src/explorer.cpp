#include "noisybool/explorer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "noisybool/identities.hpp"
#include "noisybool/spectral.hpp"

namespace noisybool {

const char* dedup_name(DedupMode mode) noexcept {
  return mode == DedupMode::none ? "none" : "symmetry";
}

const char* shape_name(CurveShape shape) noexcept {
  switch (shape) {
    case CurveShape::quasi_concave: return "quasi_concave";
    case CurveShape::single_peak_wave: return "single_peak_wave";
    case CurveShape::flat: return "flat";
    case CurveShape::other: return "other";
  }
  return "other";
}

// ---------------------------------------------------------------------------
// mask combinatorics
// ---------------------------------------------------------------------------

namespace {

std::uint64_t choose(unsigned n, unsigned k) {
  return static_cast<std::uint64_t>(binomial(static_cast<int>(n), static_cast<int>(k)));
}

std::uint64_t next_same_popcount(std::uint64_t v) noexcept {
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  return r | (((v ^ r) >> 2) / c);
}

// rank-th smallest mask (numeric order = colex order) with `ones` bits among
// `positions` bit positions.
std::uint64_t combination_unrank(unsigned positions, unsigned ones, std::uint64_t rank) {
  std::uint64_t mask = 0;
  unsigned limit = positions;
  for (unsigned bits = ones; bits > 0; --bits) {
    unsigned p = bits - 1;
    while (p + 1 < limit && choose(p + 1, bits) <= rank) ++p;
    mask |= std::uint64_t{1} << p;
    rank -= choose(p, bits);
    limit = p;
  }
  return mask;
}

// Visits masks with fixed popcount for ranks [begin, end); the visitor may
// return false to stop early.
template <typename Visit>
void visit_combinations(unsigned positions, unsigned ones, std::uint64_t begin,
                        std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  std::uint64_t mask = combination_unrank(positions, ones, begin);
  for (std::uint64_t rank = begin;; ) {
    if (!visit(mask)) return;
    if (++rank >= end) return;
    mask = next_same_popcount(mask);
  }
}

std::vector<std::uint32_t> mask_to_zeros(std::uint64_t mask) {
  std::vector<std::uint32_t> zeros;
  zeros.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    const int x = std::countr_zero(mask);
    zeros.push_back(static_cast<std::uint32_t>(x));
    mask &= mask - 1;
  }
  return zeros;
}

// ---------------------------------------------------------------------------
// per-dimension lookup tables (n <= 6)
// ---------------------------------------------------------------------------

struct CubeTables {
  int n;
  std::uint32_t s;
  std::array<std::uint64_t, 6> column_mask{};       // [k]: codewords with coordinate k+1 set
  std::vector<std::array<std::uint64_t, 7>> dist;   // [y][d]: codewords at distance d from y

  explicit CubeTables(int n_in) : n(n_in), s(1u << n_in) {
    for (int k = 0; k < n; ++k) {
      for (std::uint32_t x = 0; x < s; ++x) {
        if ((x >> (n - 1 - k)) & 1u) column_mask[k] |= std::uint64_t{1} << x;
      }
    }
    dist.assign(s, {});
    for (std::uint32_t y = 0; y < s; ++y) {
      for (std::uint32_t x = 0; x < s; ++x) {
        dist[y][static_cast<unsigned>(std::popcount(x ^ y))] |= std::uint64_t{1} << x;
      }
    }
  }
};

std::uint64_t sum_term_of_mask(const CubeTables& t, std::uint64_t zmask, std::uint64_t m) {
  std::uint64_t st = 0;
  for (int k = 0; k < t.n; ++k) {
    const std::uint64_t c = static_cast<std::uint64_t>(std::popcount(zmask & t.column_mask[k]));
    st += c * (m - c);
  }
  return st;
}

void spectrum_of_mask(const CubeTables& t, std::uint64_t zmask, std::uint64_t m,
                      std::vector<std::uint32_t>& r) {
  r.assign(m / 2 + 1, 0);
  for (int k = 0; k < t.n; ++k) {
    const std::uint64_t c = static_cast<std::uint64_t>(std::popcount(zmask & t.column_mask[k]));
    ++r[std::min(c, m - c)];
  }
}

// ---------------------------------------------------------------------------
// chunked parallel driver: contiguous rank ranges, merged in chunk order
// ---------------------------------------------------------------------------

unsigned resolve_chunks(std::uint64_t total, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
}

void run_chunks(std::uint64_t total, unsigned chunks,
                const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
  if (chunks <= 1) {
    fn(0, 0, total);
    return;
  }
  const std::uint64_t base = total / chunks;
  const std::uint64_t rem = total % chunks;
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (unsigned c = 0; c < chunks; ++c) {
    const std::uint64_t begin = base * c + std::min<std::uint64_t>(c, rem);
    const std::uint64_t end = begin + base + (c < rem ? 1 : 0);
    pool.emplace_back([&fn, &errors, c, begin, end] {
      try {
        fn(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

void check_enumerable(int n, std::uint64_t m) {
  if (n < 1) fail(errc::dimension_too_large, "dimension must be >= 1");
  if (n > 5) {
    fail(errc::instance_too_large,
         "exhaustive enumeration supports n <= 5, got n=" + std::to_string(n));
  }
  if (m > (std::uint64_t{1} << n)) {
    fail(errc::size_out_of_range,
         "M=" + std::to_string(m) + " exceeds 2^" + std::to_string(n));
  }
}

void check_classify_grid(const std::vector<double>& grid) {
  if (grid.size() < 101) {
    fail(errc::grid_too_coarse,
         "shape classification needs at least 101 grid points, got " +
             std::to_string(grid.size()));
  }
  const std::size_t last = grid.size() - 1;
  for (std::size_t i = 0; i <= last / 2; ++i) {
    if (std::abs(grid[i] + grid[last - i] - 1.0) > 1e-9) {
      fail(errc::grid_too_coarse, "shape classification needs a grid symmetric about 1/2");
    }
  }
}

// Interior extrema of a sampled curve after merging plateaus within tol.
CurveShape classify_values(const std::vector<double>& grid, const std::vector<double>& f,
                           double tol, std::vector<double>* extrema_out) {
  double max_abs = 0.0;
  for (double v : f) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs <= 1e-12) return CurveShape::flat;

  struct Plateau {
    std::size_t first, last;
    double value;
  };
  std::vector<Plateau> plateaus;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!plateaus.empty() && std::abs(f[i] - plateaus.back().value) <= tol) {
      plateaus.back().last = i;
    } else {
      plateaus.push_back({i, i, f[i]});
    }
  }

  enum class Kind { maximum, minimum };
  std::vector<std::pair<Kind, std::size_t>> extrema;  // (kind, plateau index)
  for (std::size_t j = 1; j + 1 < plateaus.size(); ++j) {
    const double v = plateaus[j].value;
    if (v > plateaus[j - 1].value && v > plateaus[j + 1].value) {
      extrema.emplace_back(Kind::maximum, j);
    } else if (v < plateaus[j - 1].value && v < plateaus[j + 1].value) {
      extrema.emplace_back(Kind::minimum, j);
    }
  }
  if (extrema_out != nullptr) {
    extrema_out->clear();
    for (const auto& [kind, j] : extrema) {
      extrema_out->push_back(grid[(plateaus[j].first + plateaus[j].last) / 2]);
    }
  }

  const auto kind_of = [&](std::size_t i) { return extrema[i].first; };
  if (extrema.size() == 1 && kind_of(0) == Kind::maximum) return CurveShape::quasi_concave;
  if (extrema.size() == 3 && kind_of(0) == Kind::minimum && kind_of(1) == Kind::maximum &&
      kind_of(2) == Kind::minimum) {
    std::size_t nearest_half = 0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      if (std::abs(grid[i] - 0.5) < std::abs(grid[nearest_half] - 0.5)) nearest_half = i;
    }
    const Plateau& peak = plateaus[extrema[1].second];
    if (peak.first <= nearest_half && nearest_half <= peak.last) {
      return CurveShape::single_peak_wave;
    }
  }
  return CurveShape::other;
}

// Shared fast evaluation of F over a grid for mask-represented functions.
struct GridEvaluator {
  const CubeTables& tables;
  std::vector<double> grid;
  std::vector<std::vector<double>> weights;  // [alpha][d]
  std::vector<double> h_alpha;               // H(alpha) in bits
  std::vector<double> t_for_m;               // T per zero-set size

  GridEvaluator(const CubeTables& t, std::vector<double> grid_in)
      : tables(t), grid(std::move(grid_in)) {
    weights.reserve(grid.size());
    h_alpha.reserve(grid.size());
    for (double alpha : grid) {
      weights.push_back(bsc_weights(t.n, alpha));
      h_alpha.push_back(binary_entropy(alpha, EntropyUnit::bits));
    }
    t_for_m.resize(t.s + 1);
    for (std::uint32_t m = 0; m <= t.s; ++m) {
      t_for_m[m] = one_bit(EntropyUnit::bits) -
                   binary_entropy(static_cast<double>(m) / static_cast<double>(t.s),
                                  EntropyUnit::bits);
    }
  }

  // Fills out[i] = F(grid[i]) in bits; identical arithmetic to big_f.
  void eval(std::uint64_t zmask, std::vector<double>& out) const {
    const std::size_t points = grid.size();
    out.assign(points, 0.0);
    std::array<double, 7> hist{};
    for (std::uint32_t y = 0; y < tables.s; ++y) {
      for (int d = 0; d <= tables.n; ++d) {
        hist[d] = static_cast<double>(std::popcount(zmask & tables.dist[y][d]));
      }
      for (std::size_t i = 0; i < points; ++i) {
        const std::vector<double>& w = weights[i];
        double p = 0.0;
        for (int d = 0; d <= tables.n; ++d) p += hist[d] * w[d];
        p = std::clamp(p, 0.0, 1.0);
        if (p > 0.0 && p < 1.0) {
          out[i] += -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
        }
      }
    }
    const double s = static_cast<double>(tables.s);
    for (std::size_t i = 0; i < points; ++i) out[i] = h_alpha[i] - out[i] / s;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// symmetry group
// ---------------------------------------------------------------------------

SymmetryGroup::SymmetryGroup(int n) : n_(n) {
  if (n < 1 || n > 6) {
    fail(errc::dimension_too_large, "symmetry group supports 1 <= n <= 6");
  }
  const std::uint32_t s = 1u << n;
  full_mask_ = (s == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << s) - 1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint32_t flip = 0; flip < s; ++flip) {
      std::array<std::uint8_t, 64> vmap{};
      for (std::uint32_t x = 0; x < s; ++x) {
        std::uint32_t image = 0;
        for (int i = 0; i < n; ++i) {
          if ((x >> perm[i]) & 1u) image |= 1u << i;
        }
        vmap[x] = static_cast<std::uint8_t>(image ^ flip);
      }
      vertex_map_.push_back(vmap);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::uint64_t SymmetryGroup::image(std::uint64_t mask, std::size_t element) const noexcept {
  const auto& vmap = vertex_map_[element];
  std::uint64_t out = 0;
  while (mask != 0) {
    const int x = std::countr_zero(mask);
    out |= std::uint64_t{1} << vmap[x];
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t SymmetryGroup::canonical(std::uint64_t mask, bool include_complement) const noexcept {
  std::uint64_t best = ~std::uint64_t{0};
  for (std::size_t e = 0; e < vertex_map_.size(); ++e) {
    const std::uint64_t img = image(mask, e);
    best = std::min(best, img);
    if (include_complement) best = std::min(best, full_mask_ ^ img);
  }
  return best;
}

std::vector<std::uint64_t> SymmetryGroup::orbit(std::uint64_t mask, bool include_complement) const {
  std::vector<std::uint64_t> out;
  out.reserve(vertex_map_.size() * (include_complement ? 2 : 1));
  for (std::size_t e = 0; e < vertex_map_.size(); ++e) {
    const std::uint64_t img = image(mask, e);
    out.push_back(img);
    if (include_complement) out.push_back(full_mask_ ^ img);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

void for_each_function(int n, std::uint64_t m, DedupMode dedup,
                       const std::function<void(const BooleanFunction&)>& visit) {
  check_enumerable(n, m);
  const std::uint32_t s = 1u << n;
  std::optional<SymmetryGroup> group;
  if (dedup == DedupMode::symmetry) group.emplace(n);
  const bool with_complement = 2 * m == s;
  visit_combinations(s, static_cast<unsigned>(m), 0, choose(s, static_cast<unsigned>(m)),
                     [&](std::uint64_t mask) {
                       if (group && group->canonical(mask, with_complement) != mask) return true;
                       visit(BooleanFunction::from_mask(n, mask));
                       return true;
                     });
}

std::vector<BooleanFunction> enumerate_functions(int n, std::uint64_t m, DedupMode dedup) {
  std::vector<BooleanFunction> out;
  for_each_function(n, m, dedup, [&out](const BooleanFunction& f) { out.push_back(f); });
  return out;
}

// ---------------------------------------------------------------------------
// max F''(1/2) search
// ---------------------------------------------------------------------------

SearchReport max_d2(int n, std::uint64_t m, DedupMode dedup, unsigned workers,
                    std::size_t max_argmax) {
  check_enumerable(n, m);
  const std::uint32_t s = 1u << n;
  if (m == 0 || m >= s) {
    fail(errc::degenerate_size, "max_d2 requires 1 <= M <= 2^n - 1");
  }
  const CubeTables tables(n);
  std::optional<SymmetryGroup> group;
  if (dedup == DedupMode::symmetry) group.emplace(n);
  const bool with_complement = 2 * m == s;

  struct Local {
    std::uint64_t best_st = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> argmax;
    std::uint64_t argmax_count = 0;
    std::uint64_t examined = 0;
  };
  const std::uint64_t total = choose(s, static_cast<unsigned>(m));
  const unsigned chunks = resolve_chunks(total, workers);
  std::vector<Local> locals(chunks);
  run_chunks(total, chunks, [&](unsigned c, std::uint64_t begin, std::uint64_t end) {
    Local& loc = locals[c];
    visit_combinations(s, static_cast<unsigned>(m), begin, end, [&](std::uint64_t mask) {
      if (group && group->canonical(mask, with_complement) != mask) return true;
      ++loc.examined;
      const std::uint64_t st = sum_term_of_mask(tables, mask, m);
      // smaller sum-term <=> larger F''(1/2)
      if (st < loc.best_st) {
        loc.best_st = st;
        loc.argmax.assign(1, mask);
        loc.argmax_count = 1;
      } else if (st == loc.best_st) {
        ++loc.argmax_count;
        if (loc.argmax.size() < max_argmax) loc.argmax.push_back(mask);
      }
      return true;
    });
  });

  std::uint64_t best_st = std::numeric_limits<std::uint64_t>::max();
  for (const Local& loc : locals) best_st = std::min(best_st, loc.best_st);

  SearchReport rep;
  rep.n = n;
  rep.m = m;
  rep.dedup_mode = dedup;
  for (const Local& loc : locals) {
    rep.functions_examined += loc.examined;
    if (loc.best_st != best_st) continue;
    rep.argmax_count += loc.argmax_count;
    for (std::uint64_t mask : loc.argmax) {
      if (rep.argmax_zero_sets.size() < max_argmax) {
        rep.argmax_zero_sets.push_back(mask_to_zeros(mask));
      }
    }
  }
  rep.best_value = d2_value(n, m, best_st);
  const std::uint64_t lex_mask = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  rep.lex_value = d2_value(n, m, sum_term_of_mask(tables, lex_mask, m));
  rep.lex_is_max = std::abs(rep.best_value - rep.lex_value) <= 1e-12;
  return rep;
}

// ---------------------------------------------------------------------------
// conjecture scan and shape census
// ---------------------------------------------------------------------------

namespace {

void check_scan_instance(int n, const std::optional<std::uint64_t>& m_filter) {
  if (n < 1) fail(errc::dimension_too_large, "dimension must be >= 1");
  if (m_filter.has_value()) {
    check_enumerable(n, *m_filter);
  } else if (n > 4) {
    fail(errc::instance_too_large,
         "all-M exhaustive scans support n <= 4, got n=" + std::to_string(n));
  }
}

// Visits all zero-set masks of the scan universe for ranks [begin, end).
template <typename Visit>
void visit_scan_masks(std::uint32_t s, const std::optional<std::uint64_t>& m_filter,
                      std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (m_filter.has_value()) {
    visit_combinations(s, static_cast<unsigned>(*m_filter), begin, end,
                       [&](std::uint64_t mask) {
                         visit(mask);
                         return true;
                       });
  } else {
    for (std::uint64_t mask = begin; mask < end; ++mask) visit(mask);
  }
}

std::uint64_t scan_total(std::uint32_t s, const std::optional<std::uint64_t>& m_filter) {
  if (m_filter.has_value()) return choose(s, static_cast<unsigned>(*m_filter));
  return std::uint64_t{1} << s;
}

}  // namespace

ConjectureScan conjecture_scan(int n, std::optional<std::uint64_t> m_filter,
                               std::vector<double> grid, double tolerance,
                               unsigned workers, std::size_t max_violations) {
  check_scan_instance(n, m_filter);
  validate_alpha_grid(grid);
  const CubeTables tables(n);
  const GridEvaluator eval(tables, grid);
  const std::size_t points = grid.size();

  struct Local {
    std::uint64_t examined = 0;
    std::uint64_t violation_count = 0;
    std::vector<ScanViolation> violations;
    double max_margin = -std::numeric_limits<double>::infinity();
  };
  const std::uint64_t total = scan_total(tables.s, m_filter);
  const unsigned chunks = resolve_chunks(total, workers);
  std::vector<Local> locals(chunks);
  run_chunks(total, chunks, [&](unsigned c, std::uint64_t begin, std::uint64_t end) {
    Local& loc = locals[c];
    std::vector<double> f_values;
    visit_scan_masks(tables.s, m_filter, begin, end, [&](std::uint64_t mask) {
      ++loc.examined;
      eval.eval(mask, f_values);
      const double t = eval.t_for_m[static_cast<std::size_t>(std::popcount(mask))];
      for (std::size_t i = 0; i < points; ++i) {
        const double margin = f_values[i] - t;
        loc.max_margin = std::max(loc.max_margin, margin);
        if (margin > tolerance) {
          ++loc.violation_count;
          if (loc.violations.size() < max_violations) {
            loc.violations.push_back({mask_to_zeros(mask), eval.grid[i], margin});
          }
        }
      }
    });
  });

  ConjectureScan scan;
  scan.n = n;
  scan.m_filter = m_filter;
  scan.grid = std::move(grid);
  scan.tolerance = tolerance;
  scan.max_margin = -std::numeric_limits<double>::infinity();
  for (Local& loc : locals) {
    scan.functions_examined += loc.examined;
    scan.violation_count += loc.violation_count;
    scan.max_margin = std::max(scan.max_margin, loc.max_margin);
    for (ScanViolation& v : loc.violations) {
      if (scan.violations.size() < max_violations) scan.violations.push_back(std::move(v));
    }
  }
  return scan;
}

ShapeClass classify_shape(const CurveTable& curve, double tolerance) {
  check_classify_grid(curve.grid);
  ShapeClass result;
  result.shape = classify_values(curve.grid, curve.f, tolerance, &result.extrema_locations);
  return result;
}

ShapeCensus shape_census(int n, std::optional<std::uint64_t> m_filter,
                         std::vector<double> grid, double plateau_tolerance,
                         unsigned workers, std::size_t max_other) {
  check_scan_instance(n, m_filter);
  validate_alpha_grid(grid);
  check_classify_grid(grid);
  const CubeTables tables(n);
  const GridEvaluator eval(tables, grid);

  struct Local {
    std::uint64_t examined = 0;
    std::uint64_t counts[4] = {0, 0, 0, 0};
    std::vector<std::uint64_t> other_masks;
  };
  const std::uint64_t total = scan_total(tables.s, m_filter);
  const unsigned chunks = resolve_chunks(total, workers);
  std::vector<Local> locals(chunks);
  run_chunks(total, chunks, [&](unsigned c, std::uint64_t begin, std::uint64_t end) {
    Local& loc = locals[c];
    std::vector<double> f_values;
    visit_scan_masks(tables.s, m_filter, begin, end, [&](std::uint64_t mask) {
      ++loc.examined;
      eval.eval(mask, f_values);
      const CurveShape shape = classify_values(eval.grid, f_values, plateau_tolerance, nullptr);
      ++loc.counts[static_cast<int>(shape)];
      if (shape == CurveShape::other && loc.other_masks.size() < max_other) {
        loc.other_masks.push_back(mask);
      }
    });
  });

  ShapeCensus census;
  census.n = n;
  census.m_filter = m_filter;
  for (const Local& loc : locals) {
    census.functions_examined += loc.examined;
    census.quasi_concave += loc.counts[static_cast<int>(CurveShape::quasi_concave)];
    census.single_peak_wave += loc.counts[static_cast<int>(CurveShape::single_peak_wave)];
    census.flat += loc.counts[static_cast<int>(CurveShape::flat)];
    census.other += loc.counts[static_cast<int>(CurveShape::other)];
    for (std::uint64_t mask : loc.other_masks) {
      if (census.other_zero_sets.size() < max_other) {
        census.other_zero_sets.push_back(mask_to_zeros(mask));
      }
    }
  }
  return census;
}

// ---------------------------------------------------------------------------
// lex spectrum extremality
// ---------------------------------------------------------------------------

LexSpectrumCheck verify_lex_max_spectrum(int n, std::uint64_t m, unsigned workers) {
  check_enumerable(n, m);
  if (m == 0) fail(errc::empty_zero_set, "spectrum comparison requires M >= 1");
  const CubeTables tables(n);
  const std::uint64_t lex_mask = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  std::vector<std::uint32_t> lex_r;
  spectrum_of_mask(tables, lex_mask, m, lex_r);

  struct Local {
    std::uint64_t examined = 0;
    std::optional<std::uint64_t> counterexample;
  };
  const std::uint64_t total = choose(tables.s, static_cast<unsigned>(m));
  const unsigned chunks = resolve_chunks(total, workers);
  std::vector<Local> locals(chunks);
  run_chunks(total, chunks, [&](unsigned c, std::uint64_t begin, std::uint64_t end) {
    Local& loc = locals[c];
    std::vector<std::uint32_t> r;
    visit_combinations(tables.s, static_cast<unsigned>(m), begin, end,
                       [&](std::uint64_t mask) {
                         ++loc.examined;
                         spectrum_of_mask(tables, mask, m, r);
                         for (std::size_t i = 0; i < r.size(); ++i) {
                           if (lex_r[i] == r[i]) continue;
                           if (lex_r[i] > r[i]) break;  // lex dominates
                           loc.counterexample = mask;
                           return false;
                         }
                         return true;
                       });
  });

  LexSpectrumCheck check;
  check.n = n;
  check.m = m;
  check.passed = true;
  for (const Local& loc : locals) {
    check.functions_examined += loc.examined;
    if (loc.counterexample && check.passed) {
      check.passed = false;
      check.counterexample = mask_to_zeros(*loc.counterexample);
    }
  }
  return check;
}

// ---------------------------------------------------------------------------
// JSON reports
// ---------------------------------------------------------------------------

nlohmann::json to_json(const SearchReport& report) {
  return {
      {"n", report.n},
      {"M", report.m},
      {"functions_examined", report.functions_examined},
      {"best_value", report.best_value},
      {"argmax_count", report.argmax_count},
      {"argmax_zero_sets", report.argmax_zero_sets},
      {"lex_value", report.lex_value},
      {"lex_is_max", report.lex_is_max},
      {"dedup_mode", dedup_name(report.dedup_mode)},
  };
}

nlohmann::json to_json(const ConjectureScan& scan) {
  nlohmann::json violations = nlohmann::json::array();
  for (const ScanViolation& v : scan.violations) {
    violations.push_back({{"zero_set", v.zero_set}, {"alpha", v.alpha}, {"margin", v.margin}});
  }
  nlohmann::json j{
      {"n", scan.n},
      {"grid", scan.grid},
      {"tolerance", scan.tolerance},
      {"functions_examined", scan.functions_examined},
      {"violation_count", scan.violation_count},
      {"violations", std::move(violations)},
      {"max_margin", scan.max_margin},
  };
  if (scan.m_filter.has_value()) {
    j["M"] = *scan.m_filter;
  } else {
    j["M"] = "all";
  }
  return j;
}

nlohmann::json to_json(const ShapeCensus& census) {
  nlohmann::json j{
      {"n", census.n},
      {"functions_examined", census.functions_examined},
      {"quasi_concave", census.quasi_concave},
      {"single_peak_wave", census.single_peak_wave},
      {"flat", census.flat},
      {"other", census.other},
      {"other_zero_sets", census.other_zero_sets},
  };
  if (census.m_filter.has_value()) {
    j["M"] = *census.m_filter;
  } else {
    j["M"] = "all";
  }
  return j;
}

nlohmann::json to_json(const LexSpectrumCheck& check) {
  nlohmann::json j{
      {"n", check.n},
      {"M", check.m},
      {"passed", check.passed},
      {"functions_examined", check.functions_examined},
  };
  if (check.counterexample.empty()) {
    j["counterexample"] = nullptr;
  } else {
    j["counterexample"] = check.counterexample;
  }
  return j;
}

}  // namespace noisybool
