#include <doctest.h>

#include <vector>

#include "mints/decoder.hpp"
#include "mints/search.hpp"
#include "mints/verify.hpp"

using namespace mints;
using decoder::DecodeOutcome;

namespace {

Scheme worked_scheme() { return Scheme::classic({0, 1, 2}, {1, 1, 0}); }

std::vector<Rational> obs(const Rational& a, const Rational& b) { return {a, b}; }

}  // namespace

TEST_SUITE("decoder") {

TEST_CASE("simulated weighing totals are exact") {
  const Scheme s = worked_scheme();

  // Fake third mint, eps = 1/2: first weighing 0 + 1 + 2*(3/2) = 4,
  // second 1 + 1 + 0 = 2.
  const auto t1 = decoder::simulate_weighings(s, Rational(1), Rational(1, 2), 0b100);
  CHECK(t1 == obs(Rational(4), Rational(2)));

  // Nothing fake: plain column totals times W.
  const auto t2 = decoder::simulate_weighings(s, Rational(1), Rational(0), 0);
  CHECK(t2 == obs(Rational(3), Rational(2)));
  const auto t2w = decoder::simulate_weighings(s, Rational(3, 2), Rational(0), 0);
  CHECK(t2w == obs(Rational(9, 2), Rational(3)));

  // Fake mints 1 and 2, eps = 1/3: (3 + (1/3)*1, 2 + (1/3)*2).
  const auto t3 = decoder::simulate_weighings(s, Rational(1), Rational(1, 3), 0b011);
  CHECK(t3 == obs(Rational(10, 3), Rational(8, 3)));

  CHECK_THROWS_AS(decoder::simulate_weighings(s, Rational(0), Rational(1, 2), 0b1), ConfigError);
  CHECK_THROWS_AS(decoder::simulate_weighings(s, Rational(-1), Rational(1, 2), 0b1), ConfigError);
  CHECK_THROWS_AS(decoder::simulate_weighings(s, Rational(1), Rational(0), 0b1), ConfigError);
  CHECK_THROWS_AS(decoder::simulate_weighings(s, Rational(1), Rational(1), 0b1000), ConfigError);
}

TEST_CASE("the worked scheme's ratio table has seven entries") {
  const auto table = decoder::ratio_table(worked_scheme());
  CHECK(table.size() == 7);
  for (const auto& [dir, mask] : table) {
    CHECK(canonical_direction(subset_sum(worked_scheme(), mask)) == dir);
  }
}

TEST_CASE("ratio tables for tiny schemes") {
  const auto one = decoder::ratio_table(Scheme::classic({1}, {0}));
  REQUIRE(one.size() == 1);
  CHECK(one.begin()->second == 0b1);

  const auto axes = decoder::ratio_table(Scheme::classic({1, 0}, {0, 1}));
  CHECK(axes.size() == 3);

  CHECK_THROWS_AS(decoder::ratio_table(Scheme::classic({1, 0, 1}, {0, 1, 1})),
                  InfeasibleSchemeError);
}

TEST_CASE("decoding the worked scheme") {
  const Scheme s = worked_scheme();

  // Deviations (1, 0): only the third mint's vector points that way.
  CHECK(decoder::decode(s, Rational(1), obs(Rational(4), Rational(2))) ==
        DecodeOutcome::fake_set(0b100));

  // Totals exactly match the genuine sums.
  CHECK(decoder::decode(s, Rational(1), obs(Rational(3), Rational(2))) ==
        DecodeOutcome::all_genuine());

  // Deviations (1, 1) are the second mint's direction.
  CHECK(decoder::decode(s, Rational(1), obs(Rational(4), Rational(3))) ==
        DecodeOutcome::fake_set(0b010));

  // Deviations (1, 5) match no subset sum.
  const auto bad = decoder::decode(s, Rational(1), obs(Rational(4), Rational(7)));
  CHECK(bad.kind == DecodeOutcome::Kind::Inconsistent);
  CHECK(bad.reason.find("unknown direction") != std::string::npos);

  CHECK_THROWS_AS(decoder::decode(Scheme({{1, 2, 4}}), Rational(1), obs(1, 2)), ConfigError);
  CHECK_THROWS_AS(decoder::decode(s, Rational(1), {Rational(1)}), ConfigError);
  CHECK_THROWS_AS(decoder::decode(s, Rational(0), obs(1, 2)), ConfigError);
  CHECK_THROWS_AS(decoder::decode(Scheme::classic({1, 0, 1}, {0, 1, 1}), Rational(1), obs(1, 2)),
                  InfeasibleSchemeError);
}

TEST_CASE("negative eps exercises the sign canonicalization") {
  const Scheme s = worked_scheme();
  const auto totals = decoder::simulate_weighings(s, Rational(1), Rational(-1, 2), 0b100);
  CHECK(totals == obs(Rational(2), Rational(2)));
  CHECK(decoder::decode(s, Rational(1), totals) == DecodeOutcome::fake_set(0b100));
}

TEST_CASE("every fake set round-trips through simulate and decode") {
  // Fixture schemes: the worked scheme plus optimal and factorial
  // constructions up to five mints.
  std::vector<Scheme> fixtures{worked_scheme()};
  for (int n = 1; n <= 5; ++n) {
    fixtures.push_back(factorial_scheme(n));
    search::SearchConfig c;
    c.mints = n;
    const auto r = search::search_optimal(c);
    fixtures.push_back(*r.best_scheme);
  }

  const std::vector<Rational> epsilons{Rational(-1, 2), Rational(1, 3), Rational(1),
                                       Rational(7, 5), Rational(-2)};
  const Rational w(7, 3);
  for (const Scheme& s : fixtures) {
    const auto table = decoder::ratio_table(s);
    const SubsetMask full = SubsetMask{1} << s.mints();
    for (SubsetMask fake = 0; fake < full; ++fake) {
      for (const Rational& eps : epsilons) {
        const auto totals = decoder::simulate_weighings(s, w, eps, fake);
        const auto outcome = decoder::decode(s, table, w, totals);
        if (fake == 0) {
          REQUIRE(outcome == DecodeOutcome::all_genuine());
        } else {
          REQUIRE(outcome == DecodeOutcome::fake_set(fake));
        }
      }
    }
  }
}

}  // TEST_SUITE
