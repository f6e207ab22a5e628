#include "noisybool/spectral.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "noisybool/curve.hpp"
#include "noisybool/sequences.hpp"
#include "test_support.hpp"

using namespace noisybool;
using doctest::Approx;

TEST_CASE("closed form from a spectrum") {
  const D2Report dict = d2_from_spectrum(4, 8, RatioSpectrum{{1, 0, 0, 0, 3}});
  CHECK(dict.value == 0.0);

  const D2Report lex44 = d2_from_spectrum(4, 4, RatioSpectrum{{2, 0, 2}});
  CHECK(lex44.value == Approx(-4.0 / 3.0).epsilon(1e-15));
  CHECK(lex44.sum_term == 8);

  const D2Report lex35 = d2_from_spectrum(3, 5, RatioSpectrum{{0, 1, 2}});
  CHECK(lex35.value == Approx(-16.0 / 15.0).epsilon(1e-15));
  CHECK(lex35.sum_term == 16);

  CHECK_THROWS_AS(d2_from_spectrum(3, 0, RatioSpectrum{{3}}), Error);
  CHECK_THROWS_AS(d2_from_spectrum(3, 8, RatioSpectrum{{0, 0, 0, 0, 3}}), Error);
  CHECK_THROWS_AS(d2_from_spectrum(4, 4, RatioSpectrum{{2, 0, 1}}), Error);  // sums to 3
  CHECK_THROWS_AS(d2_from_spectrum(4, 4, RatioSpectrum{{2, 2}}), Error);     // wrong length
}

TEST_CASE("d2 at alpha = 1/2") {
  CHECK(d2_at_half(BooleanFunction::dictator(5, 2)).value == 0.0);
  CHECK(d2_at_half(BooleanFunction::lex(4, 4)).value == Approx(-4.0 / 3.0).epsilon(1e-15));

  const BooleanFunction wave(4, {0, 1, 2, 4});
  CHECK(d2_at_half(wave).value == Approx(fd_derivative(wave, 0.5, 2, 1e-4)).epsilon(1e-5));

  CHECK_THROWS_AS(d2_at_half(BooleanFunction(3, {})), Error);
  CHECK_THROWS_AS(d2_at_half(BooleanFunction::lex(3, 8)), Error);
}

TEST_CASE("closed form matches the finite-difference oracle (exhaustive n=3)") {
  for (std::uint32_t mask = 1; mask < 255; ++mask) {
    const BooleanFunction f = BooleanFunction::from_mask(3, mask);
    const double closed = d2_at_half(f).value;
    const double fd = fd_derivative(f, 0.5, 2, 1e-4);
    REQUIRE(std::abs(closed - fd) <= 1e-5);
    REQUIRE(closed <= 1e-12);  // nonpositivity at the midpoint
  }
}

TEST_CASE("spectrum order implies d2 order over all realizable pairs at n=3") {
  const std::uint32_t s = 8;
  for (std::uint64_t m = 1; m < s; ++m) {
    std::set<std::vector<std::uint32_t>> spectra;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
      if (static_cast<std::uint64_t>(std::popcount(mask)) != m) continue;
      spectra.insert(BooleanFunction::from_mask(3, mask).ratio_spectrum().r);
    }
    for (const auto& a : spectra) {
      for (const auto& b : spectra) {
        const auto order = spectrum_cmp(RatioSpectrum{a}, RatioSpectrum{b});
        if (order == std::strong_ordering::greater) {
          REQUIRE(d2_from_spectrum(3, m, RatioSpectrum{a}).value >
                  d2_from_spectrum(3, m, RatioSpectrum{b}).value);
        }
      }
    }
  }
}

TEST_CASE("moving spectrum mass down one index strictly raises d2 (n=3,4)") {
  for (int n : {3, 4}) {
    const std::uint32_t s = 1u << n;
    for (std::uint64_t m = 1; m < s; ++m) {
      std::set<std::vector<std::uint32_t>> spectra;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        if (static_cast<std::uint64_t>(std::popcount(mask)) != m) continue;
        spectra.insert(BooleanFunction::from_mask(n, mask).ratio_spectrum().r);
      }
      for (const auto& upper : spectra) {
        for (std::size_t i = 0; i + 1 < upper.size(); ++i) {
          if (upper[i] == 0) continue;
          for (std::size_t j = i + 1; j < upper.size(); ++j) {
            std::vector<std::uint32_t> lower = upper;
            --lower[i];
            ++lower[j];
            if (spectra.count(lower) == 0) continue;
            const double gain = d2_from_spectrum(n, m, RatioSpectrum{upper}).value -
                                d2_from_spectrum(n, m, RatioSpectrum{lower}).value;
            REQUIRE(gain > 0.0);
            REQUIRE(gain == Approx(adjacent_delta(n, m, i, j)).epsilon(1e-12));
          }
        }
      }
    }
  }
}

TEST_CASE("a lexicographically larger spectrum can tie or lose in d2") {
  // Both realizable at n=4: ratio spectra (1,0,3) > (0,4,0) compare greater,
  // yet at M=4 their d2 values coincide and at M=5 the greater spectrum has
  // the strictly smaller d2. Ordering is only monotone along adjacent moves.
  const BooleanFunction tie_hi(4, {0, 3, 5, 6});
  const BooleanFunction tie_lo(4, {1, 2, 4, 8});
  REQUIRE(spectrum_cmp(tie_hi.ratio_spectrum(), tie_lo.ratio_spectrum()) ==
          std::strong_ordering::greater);
  CHECK(d2_at_half(tie_hi).value == d2_at_half(tie_lo).value);
  CHECK(d2_at_half(tie_hi).value == Approx(-8.0 / 3.0).epsilon(1e-15));

  const BooleanFunction rev_hi(4, {0, 2, 3, 4, 5});
  const BooleanFunction rev_lo(4, {0, 1, 2, 4, 8});
  REQUIRE(spectrum_cmp(rev_hi.ratio_spectrum(), rev_lo.ratio_spectrum()) ==
          std::strong_ordering::greater);
  CHECK(d2_at_half(rev_hi).value < d2_at_half(rev_lo).value);
  CHECK(d2_at_half(rev_hi).sum_term == 18);
  CHECK(d2_at_half(rev_lo).sum_term == 16);
}

TEST_CASE("adjacent-spectrum delta") {
  CHECK(adjacent_delta(4, 4, 1, 2) == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(adjacent_delta(4, 4, 0, 1) == Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(adjacent_delta(4, 4, 2, 1), Error);
  CHECK_THROWS_AS(adjacent_delta(4, 4, 1, 1), Error);
  CHECK_THROWS_AS(adjacent_delta(4, 4, 0, 3), Error);
  CHECK_THROWS_AS(adjacent_delta(4, 0, 0, 1), Error);

  // Definitional consistency: moving one unit of mass from index j to i.
  const RatioSpectrum base{{1, 1, 2}};  // n=4, M=4
  for (std::uint64_t i = 0; i < 2; ++i) {
    for (std::uint64_t j = i + 1; j <= 2; ++j) {
      RatioSpectrum moved = base;
      if (moved.r[j] == 0) continue;
      ++moved.r[i];
      --moved.r[j];
      const double brute = d2_from_spectrum(4, 4, moved).value -
                           d2_from_spectrum(4, 4, base).value;
      REQUIRE(brute == Approx(adjacent_delta(4, 4, i, j)).epsilon(1e-13));
    }
  }
}

TEST_CASE("g(n) for lex functions") {
  CHECK(g_of(4.0, 8) == 0.0);  // log2(8) + 1, a power of two
  // -4 + 4(5*16 - 4*a(3)) / ((32-4)*4) = -16/7; cross-checked below against
  // the finite difference of the matching lex function.
  CHECK(g_of(5.0, 4) == Approx(-16.0 / 7.0).epsilon(1e-15));
  CHECK(g_of(5.0, 4) ==
        Approx(fd_derivative(BooleanFunction::lex(5, 4), 0.5, 2, 1e-4)).epsilon(1e-5));
  CHECK(g_of(4.0, 4) == d2_at_half(BooleanFunction::lex(4, 4)).value);

  CHECK_THROWS_AS(g_of(2.0, 4), Error);   // 2^n = M
  CHECK_THROWS_AS(g_of(1.5, 4), Error);   // below ceil(log2 M)
  CHECK_THROWS_AS(g_of(3.0, 0), Error);
}

TEST_CASE("g is decreasing in n with g(log2 M + 1) <= 0 (M <= 64)") {
  for (std::uint64_t m = 1; m <= 64; ++m) {
    const double base = std::log2(static_cast<double>(m)) + 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 40; ++k) {
      const double value = g_of(base + 0.25 * k, m);
      REQUIRE(value < prev);
      prev = value;
    }
    const double at_base = g_of(base, m);
    REQUIRE(at_base <= 1e-12);
    if (std::has_single_bit(m)) {
      REQUIRE(std::abs(at_base) <= 1e-12);
    } else {
      REQUIRE(at_base < -1e-9);
    }
  }
}

TEST_CASE("lex sum-term is constant in n and equals a(M-1)") {
  for (std::uint64_t m = 1; m <= 64; ++m) {
    const int min_n = std::max<int>(1, m <= 1 ? 0 : std::bit_width(m - 1));
    for (int n = min_n; n <= min_n + 6; ++n) {
      const auto counts = BooleanFunction::lex(n, m).column_one_counts();
      std::uint64_t sum_term = 0;
      for (std::uint32_t c : counts) sum_term += static_cast<std::uint64_t>(c) * (m - c);
      REQUIRE(sum_term == static_cast<std::uint64_t>(a_rec(m - 1)));
    }
  }
}
