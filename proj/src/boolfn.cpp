#include "noisybool/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace noisybool {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::duplicate_element: return "duplicate_element";
    case errc::element_out_of_range: return "element_out_of_range";
    case errc::dimension_too_large: return "dimension_too_large";
    case errc::size_out_of_range: return "size_out_of_range";
    case errc::coordinate_out_of_range: return "coordinate_out_of_range";
    case errc::empty_zero_set: return "empty_zero_set";
    case errc::length_mismatch: return "length_mismatch";
    case errc::probability_out_of_range: return "probability_out_of_range";
    case errc::codeword_out_of_range: return "codeword_out_of_range";
    case errc::step_out_of_domain: return "step_out_of_domain";
    case errc::degenerate_size: return "degenerate_size";
    case errc::spectrum_sum_mismatch: return "spectrum_sum_mismatch";
    case errc::index_order_violation: return "index_order_violation";
    case errc::domain_violation: return "domain_violation";
    case errc::overflow: return "overflow";
    case errc::parameter_too_large: return "parameter_too_large";
    case errc::instance_too_large: return "instance_too_large";
    case errc::grid_too_coarse: return "grid_too_coarse";
    case errc::invalid_grid: return "invalid_grid";
    case errc::invalid_argument: return "invalid_argument";
    case errc::parse_error: return "parse_error";
    case errc::io_failure: return "io_failure";
  }
  return "unknown";
}

namespace {

void check_dimension(int n) {
  if (n < 1 || n > BooleanFunction::kMaxDimension) {
    fail(errc::dimension_too_large,
         "dimension n must be in [1, " + std::to_string(BooleanFunction::kMaxDimension) +
             "], got " + std::to_string(n));
  }
}

}  // namespace

BooleanFunction::BooleanFunction(int n, std::vector<std::uint32_t> zero_set)
    : n_(n), zero_set_(std::move(zero_set)) {
  check_dimension(n);
  const std::uint64_t s = std::uint64_t{1} << n_;
  for (std::uint32_t x : zero_set_) {
    if (x >= s) {
      fail(errc::element_out_of_range,
           "zero-set element " + std::to_string(x) + " out of range for n=" + std::to_string(n_));
    }
  }
  std::sort(zero_set_.begin(), zero_set_.end());
  if (std::adjacent_find(zero_set_.begin(), zero_set_.end()) != zero_set_.end()) {
    fail(errc::duplicate_element, "zero-set contains duplicate elements");
  }
}

BooleanFunction BooleanFunction::lex(int n, std::uint64_t m) {
  check_dimension(n);
  if (m > (std::uint64_t{1} << n)) {
    fail(errc::size_out_of_range,
         "lex size " + std::to_string(m) + " exceeds 2^" + std::to_string(n));
  }
  std::vector<std::uint32_t> zeros(m);
  for (std::uint64_t x = 0; x < m; ++x) zeros[x] = static_cast<std::uint32_t>(x);
  return BooleanFunction(n, std::move(zeros));
}

BooleanFunction BooleanFunction::dictator(int n, int coordinate) {
  check_dimension(n);
  if (coordinate < 1 || coordinate > n) {
    fail(errc::coordinate_out_of_range,
         "coordinate " + std::to_string(coordinate) + " out of range for n=" + std::to_string(n));
  }
  const std::uint64_t s = std::uint64_t{1} << n;
  const int bit = n - coordinate;  // x_1 is the MSB
  std::vector<std::uint32_t> zeros;
  zeros.reserve(s / 2);
  for (std::uint64_t x = 0; x < s; ++x) {
    if (((x >> bit) & 1u) == 0) zeros.push_back(static_cast<std::uint32_t>(x));
  }
  return BooleanFunction(n, std::move(zeros));
}

BooleanFunction BooleanFunction::from_mask(int n, std::uint64_t mask) {
  check_dimension(n);
  if (n > kMaxMaskDimension) {
    fail(errc::dimension_too_large, "mask form requires n <= 6, got n=" + std::to_string(n));
  }
  const std::uint64_t s = std::uint64_t{1} << n;
  if (n < 6 && (mask >> s) != 0) {
    fail(errc::element_out_of_range, "mask has bits above 2^n");
  }
  std::vector<std::uint32_t> zeros;
  zeros.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (std::uint64_t x = 0; x < s; ++x) {
    if ((mask >> x) & 1u) zeros.push_back(static_cast<std::uint32_t>(x));
  }
  return BooleanFunction(n, std::move(zeros));
}

bool BooleanFunction::contains(std::uint32_t codeword) const noexcept {
  return std::binary_search(zero_set_.begin(), zero_set_.end(), codeword);
}

std::uint64_t BooleanFunction::mask() const {
  if (n_ > kMaxMaskDimension) {
    fail(errc::dimension_too_large, "mask form requires n <= 6, got n=" + std::to_string(n_));
  }
  std::uint64_t mask = 0;
  for (std::uint32_t x : zero_set_) mask |= std::uint64_t{1} << x;
  return mask;
}

BooleanFunction BooleanFunction::complement() const {
  const std::uint64_t s = cube_size();
  std::vector<std::uint32_t> zeros;
  zeros.reserve(s - zero_set_.size());
  auto it = zero_set_.begin();
  for (std::uint64_t x = 0; x < s; ++x) {
    if (it != zero_set_.end() && *it == x) {
      ++it;
    } else {
      zeros.push_back(static_cast<std::uint32_t>(x));
    }
  }
  return BooleanFunction(n_, std::move(zeros));
}

std::vector<std::uint32_t> BooleanFunction::column_one_counts() const {
  std::vector<std::uint32_t> counts(n_, 0);
  for (std::uint32_t x : zero_set_) {
    for (int k = 0; k < n_; ++k) {
      counts[k] += (x >> (n_ - 1 - k)) & 1u;
    }
  }
  return counts;
}

RatioSpectrum BooleanFunction::ratio_spectrum() const {
  const std::uint64_t m = zero_count();
  if (m == 0) fail(errc::empty_zero_set, "ratio spectrum requires a nonempty zero-set");
  RatioSpectrum spec;
  spec.r.assign(m / 2 + 1, 0);
  for (std::uint32_t count : column_one_counts()) {
    const std::uint64_t gamma = std::min<std::uint64_t>(count, m - count);
    ++spec.r[gamma];
  }
  return spec;
}

WeightSpectrum BooleanFunction::weight_spectrum() const {
  const std::uint64_t m = zero_count();
  if (m == 0) fail(errc::empty_zero_set, "weight spectrum requires a nonempty zero-set");
  WeightSpectrum spec;
  spec.c.assign(m + 1, 0);
  for (std::uint32_t count : column_one_counts()) ++spec.c[count];
  return spec;
}

std::uint64_t lex_column_count(int n, std::uint64_t m, int coordinate) {
  check_dimension(n);
  if (m > (std::uint64_t{1} << n)) {
    fail(errc::size_out_of_range,
         "size " + std::to_string(m) + " exceeds 2^" + std::to_string(n));
  }
  if (coordinate < 1 || coordinate > n) {
    fail(errc::coordinate_out_of_range,
         "coordinate " + std::to_string(coordinate) + " out of range for n=" + std::to_string(n));
  }
  const std::uint64_t terms = std::uint64_t{1} << (n - coordinate);
  const std::uint64_t denom = std::uint64_t{1} << (n + 1 - coordinate);
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k < terms; ++k) total += (m + k) / denom;
  return total;
}

std::strong_ordering spectrum_cmp(const RatioSpectrum& a, const RatioSpectrum& b) {
  if (a.r.size() != b.r.size()) {
    fail(errc::length_mismatch, "spectra have different lengths (" +
                                    std::to_string(a.r.size()) + " vs " +
                                    std::to_string(b.r.size()) + ")");
  }
  for (std::size_t i = 0; i < a.r.size(); ++i) {
    if (a.r[i] != b.r[i]) return a.r[i] <=> b.r[i];
  }
  return std::strong_ordering::equal;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::uint64_t parse_uint(const std::string& text, int base, const std::string& what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value, base);
  if (ec != std::errc() || ptr != last || text.empty()) {
    fail(errc::parse_error, "cannot parse " + what + " from '" + text + "'");
  }
  return value;
}

}  // namespace

BooleanFunction parse_zero_set(const std::string& text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string::npos) {
    fail(errc::parse_error, "expected 'n=<int>; zeros=...' or 'n=<int>; mask=0x...'");
  }
  const std::string head = trim(text.substr(0, semi));
  const std::string tail = trim(text.substr(semi + 1));
  if (head.rfind("n=", 0) != 0) fail(errc::parse_error, "expected 'n=<int>' before ';'");
  const std::uint64_t n = parse_uint(trim(head.substr(2)), 10, "dimension");
  if (n == 0 || n > BooleanFunction::kMaxDimension) {
    fail(errc::dimension_too_large, "dimension out of range: " + std::to_string(n));
  }

  if (tail.rfind("zeros=", 0) == 0) {
    std::vector<std::uint32_t> zeros;
    std::string list = trim(tail.substr(6));
    std::size_t pos = 0;
    while (pos < list.size()) {
      std::size_t comma = list.find(',', pos);
      if (comma == std::string::npos) comma = list.size();
      const std::string item = trim(list.substr(pos, comma - pos));
      const std::uint64_t v = parse_uint(item, 10, "zero-set element");
      if (v > 0xFFFFFFFFull) fail(errc::element_out_of_range, "element too large: " + item);
      zeros.push_back(static_cast<std::uint32_t>(v));
      pos = comma + 1;
    }
    return BooleanFunction(static_cast<int>(n), std::move(zeros));
  }
  if (tail.rfind("mask=", 0) == 0) {
    std::string hex = trim(tail.substr(5));
    if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0) hex = hex.substr(2);
    const std::uint64_t mask = parse_uint(hex, 16, "mask");
    return BooleanFunction::from_mask(static_cast<int>(n), mask);
  }
  fail(errc::parse_error, "expected 'zeros=' or 'mask=' after ';'");
}

std::string format_zero_set(const BooleanFunction& f) {
  std::string out = "n=" + std::to_string(f.dimension()) + "; zeros=";
  bool first = true;
  for (std::uint32_t x : f.zero_set()) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out;
}

std::string format_zero_set_mask(const BooleanFunction& f) {
  const std::uint64_t mask = f.mask();
  const int hex_digits = std::max<int>(1, static_cast<int>(f.cube_size() / 4));
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%0*llx", hex_digits,
                static_cast<unsigned long long>(mask));
  return "n=" + std::to_string(f.dimension()) + "; mask=" + buf;
}

}  // namespace noisybool
