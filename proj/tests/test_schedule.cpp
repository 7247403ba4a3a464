#include "doctest.h"

#include <cmath>

#include "expframe/error.hpp"
#include "expframe/rng.hpp"
#include "expframe/schedule.hpp"

using namespace expframe;

namespace {

// Independent re-derivation of the recursion for a single index, used as the
// oracle for the frozen values below.
std::pair<int, std::vector<double>> recursion_oracle(double delta) {
  std::vector<double> a{1.0};
  while (a.back() >= 100.0 * delta)
    a.push_back(a.back() * (1.0 - 5.0 * std::sqrt(delta / a.back())) / 2.0);
  return {static_cast<int>(a.size()) - 2, a};
}

}  // namespace

TEST_CASE("rejects delta outside (0, 1/100)") {
  CHECK_THROWS_WITH_AS(compute_schedule(0.0), doctest::Contains("DeltaOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(compute_schedule(0.01), doctest::Contains("DeltaOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(compute_schedule(-1e-3), doctest::Contains("DeltaOutOfRange"), Error);
}

TEST_CASE("delta = 0.009 stops immediately (L = 0)") {
  const auto s = compute_schedule(0.009);
  CHECK(s.L == 0);
  REQUIRE(s.alphas.size() == 2);
  CHECK(s.alphas[1] == doctest::Approx(0.26282917548737155).epsilon(1e-12));
  CHECK(s.alphas[1] >= 0.225);
  CHECK(s.alphas[1] < 0.9);
}

TEST_CASE("delta = 0.001 gives L = 2") {
  const auto s = compute_schedule(0.001);
  CHECK(s.L == 2);
  REQUIRE(s.alphas.size() == 4);
  CHECK(s.alphas[1] == doctest::Approx(0.42094305849579052).epsilon(1e-12));
  CHECK(s.alphas[2] == doctest::Approx(0.15917928699237780).epsilon(1e-12));
  CHECK(s.alphas[3] == doctest::Approx(0.048048074992032971).epsilon(1e-12));
  CHECK(s.betas[3] == doctest::Approx(0.25139518481244590).epsilon(1e-12));
  const auto [L, a] = recursion_oracle(0.001);
  CHECK(L == s.L);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(s.alphas[i] == a[i]);
}

TEST_CASE("C_product is stationary to 1e-12") {
  const auto s = compute_schedule(0.001);
  CHECK(s.C_product == doctest::Approx(35.209830331596499).epsilon(1e-10));
  // One more factor beyond the implementation's stopping point changes nothing
  // at the 1e-12 level.
  CHECK(compute_schedule(0.005).C_product == s.C_product);
}

TEST_CASE("schedule invariants over random delta") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const double delta = std::exp(std::log(1e-6) + rng.uniform01() * std::log(1e-2 / 1e-6));
    const auto s = compute_schedule(delta);
    const std::size_t last = s.alphas.size() - 1;
    REQUIRE(last == static_cast<std::size_t>(s.L) + 1);
    CHECK(s.alphas[last] >= 25.0 * delta);
    CHECK(s.alphas[last] < 100.0 * delta);
    CHECK(s.betas[last] < s.C_product * s.alphas[last]);
    CHECK(s.alphas[0] == 1.0);
    CHECK(s.betas[0] == 1.0);
    for (int j = 0; j <= s.L; ++j) {
      CHECK(s.alphas[static_cast<std::size_t>(j)] >= 100.0 * delta);
      CHECK(s.alphas[static_cast<std::size_t>(j + 1)] >=
            s.alphas[static_cast<std::size_t>(j)] / 4.0);
      CHECK(s.alphas[static_cast<std::size_t>(j + 1)] <
            s.alphas[static_cast<std::size_t>(j)] / 2.0);
    }
  }
}
