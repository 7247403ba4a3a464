#include "doctest.h"

#include <cmath>

#include "expframe/error.hpp"
#include "expframe/grid_spectrum.hpp"
#include "expframe/interval_union.hpp"
#include "expframe/rng.hpp"

using namespace expframe;

namespace {
constexpr double kPi = 3.141592653589793238462643;
}

TEST_CASE("validate merges touching intervals") {
  const IntervalUnion u = validate({{0, 1}, {1, 2}});
  REQUIRE(u.intervals().size() == 1);
  CHECK(u.intervals()[0].a == 0.0);
  CHECK(u.intervals()[0].b == 2.0);
}

TEST_CASE("validate sorts") {
  const IntervalUnion u = validate({{3, 4}, {0, 1}});
  REQUIRE(u.intervals().size() == 2);
  CHECK(u.intervals()[0].a == 0.0);
  CHECK(u.intervals()[1].a == 3.0);
}

TEST_CASE("validate rejects degenerate and empty input") {
  CHECK_THROWS_WITH_AS(validate({{0, 0}}), doctest::Contains("BadInterval"), Error);
  CHECK_THROWS_WITH_AS(validate({{2, 1}}), doctest::Contains("BadInterval"), Error);
  CHECK_THROWS_WITH_AS(validate({}), doctest::Contains("EmptySpectrum"), Error);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(validate({{0, inf}}), Error);
}

TEST_CASE("validate merges overlapping intervals") {
  const IntervalUnion u = validate({{0, 2}, {1, 5}, {7, 8}});
  REQUIRE(u.intervals().size() == 2);
  CHECK(u.intervals()[0].b == 5.0);
  CHECK(u.measure() == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("validate is a fixed point on canonical input") {
  const IntervalUnion u = validate({{0.3, 1.7}, {2.5, 9.25}});
  const IntervalUnion v = validate(u.intervals());
  REQUIRE(v.intervals().size() == u.intervals().size());
  for (std::size_t i = 0; i < u.intervals().size(); ++i) {
    CHECK(v.intervals()[i].a == u.intervals()[i].a);
    CHECK(v.intervals()[i].b == u.intervals()[i].b);
  }
}

TEST_CASE("normalize_to_window forced arithmetic") {
  SUBCASE("single interval of length 4pi") {
    const auto n = normalize_to_window(validate({{5, 5 + 4 * kPi}}));
    CHECK(n.shift == 5.0);
    CHECK(n.d == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(n.set.inf() == 0.0);
    CHECK(n.set.sup() == doctest::Approx(4 * kPi).epsilon(1e-15));
  }
  SUBCASE("identity case") {
    const auto n = normalize_to_window(validate({{0, 2 * kPi}}));
    CHECK(n.shift == 0.0);
    CHECK(n.d == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("two intervals") {
    const auto n = normalize_to_window(validate({{-kPi, 0}, {kPi, 2 * kPi}}));
    CHECK(n.shift == -kPi);
    CHECK(n.d == doctest::Approx(1.5).epsilon(1e-12));
    REQUIRE(n.set.intervals().size() == 2);
    CHECK(n.set.intervals()[0].a == 0.0);
    CHECK(n.set.intervals()[0].b == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(n.set.intervals()[1].a == doctest::Approx(2 * kPi).epsilon(1e-15));
    CHECK(n.set.intervals()[1].b == doctest::Approx(3 * kPi).epsilon(1e-12));
  }
}

TEST_CASE("normalize_to_window is idempotent") {
  const auto once = normalize_to_window(validate({{-2.25, -1.0}, {0.5, 3.75}}));
  const auto twice = normalize_to_window(once.set);
  CHECK(twice.shift == 0.0);
  CHECK(twice.d == once.d);
  REQUIRE(twice.set.intervals().size() == once.set.intervals().size());
  for (std::size_t i = 0; i < once.set.intervals().size(); ++i) {
    CHECK(twice.set.intervals()[i].a == once.set.intervals()[i].a);
    CHECK(twice.set.intervals()[i].b == once.set.intervals()[i].b);
  }
  // The window provably contains the set even after the 1-ulp rounding of d.
  CHECK(once.set.sup() <= 2 * kPi * once.d);
}

TEST_CASE("grid_cover exact alignment") {
  const auto c = grid_cover(validate({{0, kPi}}), 1.0, 4);
  CHECK(c.grid.cells() == std::vector<int>{0, 1});
  CHECK(c.excess == 0.0);
}

TEST_CASE("grid_cover excess arithmetic") {
  const auto c = grid_cover(validate({{0, 1}}), 1.0, 4);
  CHECK(c.grid.cells() == std::vector<int>{0});
  CHECK(c.excess == doctest::Approx(kPi / 2 - 1.0).epsilon(1e-14));
}

TEST_CASE("grid_cover two aligned cells") {
  const auto c = grid_cover(validate({{0, kPi / 2}, {kPi, 3 * kPi / 2}}), 1.0, 4);
  CHECK(c.grid.cells() == std::vector<int>{0, 2});
  CHECK(c.excess == 0.0);
}

TEST_CASE("grid_cover honors the caller tolerance") {
  CHECK_THROWS_WITH_AS(grid_cover(validate({{0, 1}}), 1.0, 4, 0.1),
                       doctest::Contains("GridTooCoarse"), Error);
}

TEST_CASE("grid_cover rejects sets outside the window") {
  CHECK_THROWS_AS(grid_cover(validate({{-0.5, 1}}), 1.0, 4, 1e9), Error);
  CHECK_THROWS_AS(grid_cover(validate({{0, 7}}), 1.0, 4, 1e9), Error);
}

TEST_CASE("grid measure") {
  CHECK(GridSpectrum(4, {0, 2}, 1.0).measure() == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(GridSpectrum(1, {0}, 1.0).measure() == doctest::Approx(2 * kPi).epsilon(1e-15));
  CHECK(GridSpectrum(8, {0, 1, 2}, 2.0).measure() ==
        doctest::Approx(3 * kPi / 2).epsilon(1e-15));
}

TEST_CASE("grid spectrum validation") {
  CHECK_THROWS_AS(GridSpectrum(4, {}, 1.0), Error);
  CHECK_THROWS_AS(GridSpectrum(4, {4}, 1.0), Error);
  CHECK_THROWS_AS(GridSpectrum(4, {-1}, 1.0), Error);
  CHECK_THROWS_AS(GridSpectrum(0, {0}, 1.0), Error);
  CHECK_THROWS_AS(GridSpectrum(4, {0}, 0.0), Error);
  const GridSpectrum g(4, {2, 0, 2}, 1.0);  // dedup + sort
  CHECK(g.cells() == std::vector<int>{0, 2});
}

TEST_CASE("cover excess is nonincreasing under doubling") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    // Irrational-looking endpoints inside [0, 2*pi].
    std::vector<Interval> raw;
    double t = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double a = t + 0.1 + 1.7 * rng.uniform01();
      const double b = a + 0.05 + 0.6 * rng.uniform01();
      raw.push_back({a, b});
      t = b;
    }
    const IntervalUnion u = validate(raw);
    const double d = normalize_to_window(u).d;  // keep original offsets, scale only
    const IntervalUnion v = normalize_to_window(u).set;
    double prev = std::numeric_limits<double>::infinity();
    for (int m = 8; m <= 1024; m *= 2) {
      const auto c = grid_cover(v, d, m);
      CHECK(c.excess <= prev);
      CHECK(c.grid.measure() >= v.measure());
      prev = c.excess;
    }
  }
}

TEST_CASE("auto_grid_cover doubles until the tolerance holds") {
  const IntervalUnion u = validate({{0.0, 0.1}});
  const auto n = normalize_to_window(u);
  const auto c = auto_grid_cover(n.set, n.d, 0.01, 64, 4096);
  CHECK(c.excess <= 0.01 * u.measure());
}

TEST_CASE("auto_grid_cover reports the cap") {
  // A sliver spectrum inside a huge window cannot reach 0 excess by m=128.
  const IntervalUnion u = validate({{0.0, 1e-5}, {6.0, 6.0 + 1e-5}});
  CHECK_THROWS_WITH_AS(auto_grid_cover(u, 1.0, 1e-9, 64, 128),
                       doctest::Contains("GridTooCoarse"), Error);
}
