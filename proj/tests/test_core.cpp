#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mints/direction.hpp"
#include "mints/int128.hpp"
#include "mints/rational.hpp"
#include "mints/scheme.hpp"
#include "mints/verify.hpp"

using namespace mints;

namespace {

// The three-mint scheme from the classic presentation of the puzzle:
// first weighing (0,1,2), second (1,1,0).
Scheme worked_scheme() { return Scheme::classic({0, 1, 2}, {1, 1, 0}); }

IntVector vec2(long long a, long long b) {
  IntVector v;
  v.coords = {a, b};
  return v;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("scheme construction enforces the invariants") {
  CHECK_NOTHROW(worked_scheme());
  CHECK_THROWS_AS(Scheme::classic({-1, 1}, {1, 1}), InvalidSchemeError);
  CHECK_THROWS_AS(Scheme::classic({0, 1}, {0, 1}), InvalidSchemeError);  // zero column
  CHECK_THROWS_AS(Scheme::classic({kEntryMax + 1}, {0}), InvalidSchemeError);
  CHECK_THROWS_AS(Scheme(std::vector<std::vector<long long>>{}), InvalidSchemeError);
  CHECK_THROWS_AS(Scheme({{1, 2}, {1}}), InvalidSchemeError);
  CHECK_THROWS_AS(Scheme(std::vector<std::vector<long long>>{{}}), InvalidSchemeError);
  CHECK(Scheme({{1, 2, 4}}).weighings() == 1);  // one weighing is allowed
}

TEST_CASE("mask helpers use 1-based mint indices") {
  CHECK(mask_to_mints(0b110) == std::vector<int>{2, 3});
  CHECK(mints_to_mask({2, 3}, 3) == 0b110);
  CHECK(mints_to_mask({}, 3) == 0);
  CHECK_THROWS_AS(mints_to_mask({4}, 3), ConfigError);
  CHECK_THROWS_AS(mints_to_mask({0}, 3), ConfigError);
}

TEST_CASE("subset sums read off the scheme columns") {
  const Scheme s = worked_scheme();
  CHECK(subset_sum(s, 0b110) == vec2(3, 1));  // mints 2 and 3
  CHECK(subset_sum(s, 0).is_zero());
  CHECK(subset_sum(s, 0b001) == vec2(0, 1));
  CHECK_THROWS_AS(subset_sum(s, 0b1000), ConfigError);
}

TEST_CASE("canonical directions are primitive and sign-fixed") {
  CHECK(canonical_direction(vec2(2, 4)) == canonical_direction(vec2(1, 2)));
  CHECK(canonical_direction(vec2(2, 4)).coords() == std::vector<Int128>{1, 2});
  CHECK(canonical_direction(vec2(-3, 6)).coords() == std::vector<Int128>{1, -2});
  CHECK(canonical_direction(vec2(0, 5)).coords() == std::vector<Int128>{0, 1});
  CHECK_THROWS_AS(canonical_direction(vec2(0, 0)), ZeroVectorError);
}

TEST_CASE("canonical_direction is idempotent and scale-invariant") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> coord(-9, 9);
  std::uniform_int_distribution<int> kdist(1, 4);
  std::uniform_int_distribution<long long> tdist(-9, 9);
  for (int iter = 0; iter < 2000; ++iter) {
    const int k = kdist(rng);
    IntVector v;
    v.coords.resize(k);
    bool zero = true;
    for (auto& c : v.coords) {
      c = coord(rng);
      if (c != 0) zero = false;
    }
    if (zero) continue;
    long long t = 0;
    while (t == 0) t = tdist(rng);
    IntVector scaled;
    scaled.coords = v.coords;
    for (auto& c : scaled.coords) c = checked_mul(c, t);
    const Direction d = canonical_direction(v);
    CHECK(canonical_direction(scaled) == d);
    IntVector again;
    again.coords = d.coords();
    CHECK(canonical_direction(again) == d);
  }
}

TEST_CASE("the worked three-mint scheme is feasible") {
  const FeasibilityReport report = verify_scheme(worked_scheme());
  CHECK(report.feasible);
  CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("collinear subset sums produce the smallest witness pair") {
  // (1,0) + (0,1) is collinear with (1,1): subsets {1,2} and {3}.
  const FeasibilityReport r1 = verify_scheme(Scheme::classic({1, 0, 1}, {0, 1, 1}));
  REQUIRE_FALSE(r1.feasible);
  CHECK(r1.witness->first == 0b011);
  CHECK(r1.witness->second == 0b100);

  // (0,1) + (2,1) = (2,2) is collinear with (1,1): subsets {2} and {1,3}.
  const FeasibilityReport r2 = verify_scheme(Scheme::classic({0, 1, 2}, {1, 1, 1}));
  REQUIRE_FALSE(r2.feasible);
  CHECK(r2.witness->first == 0b010);
  CHECK(r2.witness->second == 0b101);
}

TEST_CASE("single-mint schemes are always feasible") {
  CHECK(verify_scheme(Scheme::classic({1}, {0})).feasible);
  CHECK(verify_scheme(Scheme::classic({3}, {2})).feasible);
}

TEST_CASE("one weighing cannot separate two mints") {
  CHECK_FALSE(verify_scheme(Scheme({{1, 2}})).feasible);
}

TEST_CASE("cost kinds on the worked scheme") {
  const Scheme s = worked_scheme();
  CHECK(cost(s, CostKind::TotalMax) == 4);
  CHECK(cost(s, CostKind::GrandSum) == 5);
  CHECK(cost(s, CostKind::MaxEntry) == 2);
}

TEST_CASE("factorial construction") {
  const Scheme s3 = factorial_scheme(3);
  CHECK(s3.rows()[0] == std::vector<long long>{1, 2, 6});
  CHECK(s3.rows()[1] == std::vector<long long>{1, 1, 1});
  const Scheme s1 = factorial_scheme(1);
  CHECK(s1.rows()[0] == std::vector<long long>{1});
  CHECK(s1.rows()[1] == std::vector<long long>{1});

  const Scheme s5 = factorial_scheme(5);
  CHECK(verify_scheme(s5).feasible);
  CHECK(cost(s5, CostKind::TotalMax) == 153);

  CHECK_THROWS_AS(factorial_scheme(0), ConfigError);
  CHECK_THROWS_AS(factorial_scheme(kFactorialSchemeMaxMints + 1), OverflowError);
}

TEST_CASE("cost bounds") {
  CHECK(bounds(3).lower == 3);
  CHECK(bounds(3).upper == 9);
  CHECK(bounds(3, CapacityWitness{2, 3}).upper == 6);
  CHECK(bounds(1).lower == 1);
  CHECK(bounds(1).upper == 1);
  // A witness for fewer mints does not apply.
  CHECK(bounds(4, CapacityWitness{2, 3}).upper == 33);
  CHECK_THROWS_AS(bounds(0), ConfigError);
}

TEST_CASE("non-empty subset sums of a valid scheme are nonzero") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const Scheme s = testing::random_scheme(rng, 1 + iter % 6, 4);
    const SubsetMask full = SubsetMask{1} << s.mints();
    for (SubsetMask m = 1; m < full; ++m) CHECK_FALSE(subset_sum(s, m).is_zero());
  }
}

TEST_CASE("checked 128-bit arithmetic raises on overflow") {
  const Int128 big = Int128{1} << 126;
  CHECK_THROWS_AS(checked_add(big, big), OverflowError);
  CHECK_THROWS_AS(checked_mul(big, 4), OverflowError);
  CHECK(checked_mul(Int128{1} << 62, 2) == Int128{1} << 63);
  CHECK(to_string(Int128{-42}) == "-42");
  CHECK(to_string(Int128{0}) == "0");
  CHECK(gcd128(-12, 18) == 6);
  CHECK(gcd128(0, 0) == 0);
}

TEST_CASE("rationals are exact and always reduced") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(3, 2) == Rational(1, 3));
  CHECK(-Rational(1, 3) == Rational(-1, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-1/3") == Rational(-1, 3));
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational(10, 3).to_string() == "10/3");
  CHECK(Rational(-4, 2).to_string() == "-2");
  CHECK_THROWS_AS(Rational(1, 0), ConfigError);
  CHECK_THROWS_AS(Rational::parse("x"), ConfigError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ConfigError);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), ConfigError);
  const long long big = (1LL << 62);
  CHECK_THROWS_AS(Rational(big) * Rational(4), OverflowError);
}

}  // TEST_SUITE
