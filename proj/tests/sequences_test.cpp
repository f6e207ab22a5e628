#include "noisybool/sequences.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>

using namespace noisybool;
using doctest::Approx;

TEST_CASE("a(m) recursion") {
  CHECK(a_rec(0) == 0);
  CHECK(a_rec(4) == 16);
  CHECK(a_rec(7) == 48);
  const std::vector<std::uint64_t> head = a_table(8);
  CHECK(head == std::vector<std::uint64_t>{0, 1, 4, 8, 16, 25, 36, 48, 68});
  CHECK_THROWS_AS(a_rec((std::uint64_t{1} << 40) + 1), Error);

  // Recursion relations hold far above the table range.
  const std::uint64_t k = std::uint64_t{1} << 29;
  CHECK(a_rec(2 * k) == 2 * a_rec(k) + 2 * a_rec(k - 1) + uint128(k) * (k + 1));
  CHECK(a_rec(2 * k + 1) == 4 * a_rec(k) + uint128(k + 1) * (k + 1));
}

TEST_CASE("floor-sum closed form equals the recursion") {
  CHECK(a_closed(4) == 8);
  CHECK(a_closed(5) == 16);
  CHECK(a_closed(1) == 0);
  for (std::uint64_t m = 1; m <= 10000; ++m) {
    REQUIRE(a_closed(m) == a_rec(m - 1));
  }
  CHECK_THROWS_AS(a_closed(0), Error);
}

TEST_CASE("uint128 decimal formatting") {
  CHECK(uint128_to_string(0) == "0");
  CHECK(uint128_to_string(1) == "1");
  CHECK(uint128_to_string(uint128(1) << 100) == "1267650600228229401496703205376");
}

TEST_CASE("two-sided bounds reports") {
  const BoundsReport m3 = check_bounds(3);
  CHECK(m3.a == 8);
  CHECK(m3.lower == 8.0);
  CHECK(m3.lower_equality);
  CHECK(m3.exact_compare);
  CHECK(m3.lower_holds);
  CHECK(m3.upper_holds);
  CHECK(!m3.tight_upper.has_value());

  const BoundsReport m5 = check_bounds(5);
  CHECK(m5.a == 25);
  CHECK(m5.lower == Approx(23.2647).epsilon(1e-4));
  CHECK(m5.upper == Approx(25.7725).epsilon(1e-4));
  CHECK(!m5.lower_equality);
  CHECK(m5.lower_holds);
  CHECK(m5.upper_holds);

  const BoundsReport m0 = check_bounds(0);
  CHECK(m0.a == 0);
  CHECK(m0.lower == 0.0);
  CHECK(m0.lower_equality);

  const BoundsReport m6 = check_bounds(6);
  REQUIRE(m6.tight_upper.has_value());
  CHECK(m6.tight_holds);
  CHECK(*m6.tight_upper < m6.upper);
}

TEST_CASE("bounds sweep") {
  const BoundsSweep sweep = check_bounds_sweep(100000);
  CHECK(sweep.all_hold);
  CHECK(sweep.checked == 100001);
  CHECK(sweep.failures.empty());
  // equality exactly when m+1 is a power of two: 2^0 .. 2^16 <= 100001
  CHECK(sweep.equality_count == 17);
  CHECK(sweep.expected_equality_count == 17);
}

TEST_CASE("the upper-bound constant") {
  CHECK(bounds_constant_b() == Approx(0.2786524795555182).epsilon(1e-15));
}
