#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "noisybool/errors.hpp"

namespace noisybool {

// Histogram (r_0, ..., r_{floor(M/2)}) of the per-coordinate balance values
// gamma_k = min(#ones, #zeros) of the zero-set columns. Sums to n.
struct RatioSpectrum {
  std::vector<std::uint32_t> r;

  std::uint64_t m_half() const noexcept { return r.size() - 1; }
  bool operator==(const RatioSpectrum&) const = default;
};

// Histogram (c_0, ..., c_M) of exact column one-counts: c_t = #{k : count_k = t}.
// Related to the ratio spectrum by r_t = c_t + c_{M-t} for t < M/2.
struct WeightSpectrum {
  std::vector<std::uint32_t> c;

  bool operator==(const WeightSpectrum&) const = default;
};

// A Boolean function f : {0,1}^n -> {0,1}, represented by its dimension and the
// zero-set f^-1(0) as sorted integer codewords. Coordinate x_1 is the
// most-significant bit of the codeword, so lexicographic order of sequences
// equals integer order. Immutable after construction.
class BooleanFunction {
 public:
  static constexpr int kMaxDimension = 24;
  // Dimensions up to here additionally expose the zero-set as a 2^n-bit mask.
  static constexpr int kMaxMaskDimension = 6;

  BooleanFunction(int n, std::vector<std::uint32_t> zero_set);

  // Zero-set {0, 1, ..., m-1}: the first m codewords in lexicographic order.
  static BooleanFunction lex(int n, std::uint64_t m);
  // Zero-set {x : x_i = 0}, i.e. f(x) = x_i. Coordinates are 1-based.
  static BooleanFunction dictator(int n, int coordinate);
  // Zero-set from a bitmask (bit j set <=> j in the zero-set). Requires n <= 6.
  static BooleanFunction from_mask(int n, std::uint64_t mask);

  int dimension() const noexcept { return n_; }
  std::uint64_t cube_size() const noexcept { return std::uint64_t{1} << n_; }
  std::uint64_t zero_count() const noexcept { return zero_set_.size(); }
  const std::vector<std::uint32_t>& zero_set() const noexcept { return zero_set_; }

  bool contains(std::uint32_t codeword) const noexcept;
  std::uint64_t mask() const;  // requires n <= 6

  // The output-complemented function f^c with (f^c)^-1(0) = f^-1(1).
  BooleanFunction complement() const;

  // Entry k-1 is the number of zero-set elements whose k-th coordinate is 1.
  std::vector<std::uint32_t> column_one_counts() const;
  RatioSpectrum ratio_spectrum() const;  // requires M >= 1
  WeightSpectrum weight_spectrum() const;  // requires M >= 1

  bool operator==(const BooleanFunction&) const = default;

 private:
  int n_;
  std::vector<std::uint32_t> zero_set_;
};

// Column one-count of lex(n, m) at coordinate i, by the floor-sum
// sum_{k=0}^{2^(n-i)-1} floor((m+k) / 2^(n+1-i)). Agrees with the direct count.
std::uint64_t lex_column_count(int n, std::uint64_t m, int coordinate);

// Lexicographic comparison from index 0 upward; greater means a "larger"
// spectrum (more mass at low indices). Both spectra must have equal length.
std::strong_ordering spectrum_cmp(const RatioSpectrum& a, const RatioSpectrum& b);

// Textual zero-set format: "n=4; zeros=0,1,2,4" or "n=4; mask=0x0017".
BooleanFunction parse_zero_set(const std::string& text);
std::string format_zero_set(const BooleanFunction& f);
std::string format_zero_set_mask(const BooleanFunction& f);  // requires n <= 6

}  // namespace noisybool
