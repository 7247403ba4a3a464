#include "doctest.h"

#include <cmath>
#include <numeric>

#include "expframe/certificate.hpp"
#include "expframe/error.hpp"
#include "expframe/fourier.hpp"
#include "expframe/rng.hpp"
#include "oracle_utils.hpp"

using namespace expframe;

namespace {
constexpr double kPi = 3.141592653589793238462643;

std::vector<int> random_subset(int m, int size, SplitMix64& rng) {
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  rng.shuffle(idx);
  idx.resize(static_cast<std::size_t>(size));
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<int> full_range(int m) {
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}
}  // namespace

TEST_CASE("fourier_submatrix hand values") {
  SUBCASE("1x1") {
    const auto B = fourier_submatrix(1, std::vector<int>{0}, std::vector<int>{0});
    CHECK(B(0, 0) == std::complex<double>(1.0, 0.0));
  }
  SUBCASE("m=4 cols {0,2} rows {0,1}") {
    const auto B = fourier_submatrix(4, std::vector<int>{0, 2}, std::vector<int>{0, 1});
    CHECK(std::abs(B(0, 0) - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(B(0, 1) - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(B(1, 0) - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(B(1, 1) - std::complex<double>(-1, 0)) < 1e-15);
  }
  SUBCASE("2-point DFT") {
    const auto B = fourier_submatrix(2, std::vector<int>{0, 1}, std::vector<int>{0, 1});
    CHECK(std::abs(B(1, 1) - std::complex<double>(-1, 0)) < 1e-15);
    CHECK(std::abs(B(0, 1) - std::complex<double>(1, 0)) < 1e-15);
  }
}

TEST_CASE("fourier_submatrix rejects bad input") {
  CHECK_THROWS_WITH_AS(fourier_submatrix(4, std::vector<int>{4}, std::vector<int>{0}),
                       doctest::Contains("IndexOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(fourier_submatrix(4, std::vector<int>{0}, std::vector<int>{-1}),
                       doctest::Contains("IndexOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(fourier_submatrix(8192, std::vector<int>{0}, std::vector<int>{0}),
                       doctest::Contains("ProblemTooLarge"), Error);
}

TEST_CASE("gram hand values") {
  SUBCASE("orthogonal rows") {
    Eigen::MatrixXcd B(2, 2);
    B << 1, 1, 1, -1;
    const auto G = gram(B);
    CHECK(std::abs(G(0, 0) - 2.0) < 1e-15);
    CHECK(std::abs(G(0, 1)) < 1e-15);
    CHECK(std::abs(G(1, 1) - 2.0) < 1e-15);
  }
  SUBCASE("single row") {
    Eigen::MatrixXcd B(1, 2);
    B << 1, 1;
    const auto G = gram(B);
    CHECK(std::abs(G(0, 1) - 1.0) < 1e-15);
    CHECK(std::abs(G(1, 0) - 1.0) < 1e-15);
  }
  SUBCASE("full DFT columns are orthogonal") {
    const auto B = fourier_submatrix(4, full_range(4), full_range(4));
    const auto G = gram(B);
    CHECK((G - 4.0 * Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-12);
  }
}

TEST_CASE("eigen_extremes basics") {
  CHECK(eigen_extremes(Eigen::MatrixXcd::Identity(3, 3)).lambda_min == doctest::Approx(1.0));
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(2, 2);
  D(0, 0) = 2.0;
  D(1, 1) = 5.0;
  const auto e = eigen_extremes(D);
  CHECK(e.lambda_min == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(e.lambda_max == doctest::Approx(5.0).epsilon(1e-12));

  Eigen::MatrixXcd R(2, 2);
  R << 1, 1, 1, 1;
  const auto r = eigen_extremes(R);
  CHECK(r.lambda_min == 0.0);  // clamped exactly
  CHECK(r.lambda_max == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("eigen_extremes rejects non-hermitian input") {
  Eigen::MatrixXcd A(2, 2);
  A << 1, 2, 0, 1;
  CHECK_THROWS_WITH_AS(eigen_extremes(A), doctest::Contains("NotHermitian"), Error);
}

TEST_CASE("frame_certificate hand cases") {
  SUBCASE("tight subset") {
    const auto c = frame_certificate(GridSpectrum(4, {0, 2}, 1.0), RowSelection({0, 1}, 4));
    CHECK(c.lambda_min == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c.lambda_max == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c.a_sampling == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(c.a_frame == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(c.A_frame == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(c.is_frame);
  }
  SUBCASE("orthonormal basis anchor") {
    const auto c =
        frame_certificate(GridSpectrum(4, full_range(4), 1.0), RowSelection(full_range(4), 4));
    CHECK(c.a_frame == doctest::Approx(2 * kPi).epsilon(1e-12));
    CHECK(c.A_frame == doctest::Approx(2 * kPi).epsilon(1e-12));
    CHECK(c.normalized_lower == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("rank-deficient selection is not a frame") {
    const auto c = frame_certificate(GridSpectrum(2, {0, 1}, 1.0), RowSelection({0}, 2));
    CHECK(c.lambda_min == 0.0);
    CHECK_FALSE(c.is_frame);
  }
}

TEST_CASE("enumerate_lambda") {
  SUBCASE("integers") {
    const FrequencySet f(RowSelection({0}, 1), 1.0);
    CHECK(f.enumerate(0.0, 5.0) == std::vector<double>{0, 1, 2, 3, 4});
  }
  SUBCASE("two residues mod 4") {
    const FrequencySet f(RowSelection({0, 1}, 4), 1.0);
    CHECK(f.enumerate(0.0, 8.0) == std::vector<double>{0, 1, 4, 5});
  }
  SUBCASE("scaled lattice") {
    const FrequencySet f(RowSelection({0}, 2), 2.0);
    CHECK(f.enumerate(0.0, 2.0) == std::vector<double>{0, 1});
  }
  SUBCASE("negative window") {
    const FrequencySet f(RowSelection({1}, 4), 1.0);
    CHECK(f.enumerate(-4.0, 2.0) == std::vector<double>{-3, 1});
  }
}

TEST_CASE("frequency set separation") {
  CHECK(FrequencySet(RowSelection({0, 1}, 4), 1.0).separation() == doctest::Approx(1.0));
  CHECK(FrequencySet(RowSelection({0}, 2), 2.0).separation() == doctest::Approx(1.0));
  CHECK(FrequencySet(RowSelection({0, 3}, 8), 1.0).separation() == doctest::Approx(3.0));
}

TEST_CASE("inverse_sqrt") {
  SUBCASE("identity") {
    const auto W = inverse_sqrt(Eigen::MatrixXcd::Identity(3, 3));
    CHECK((W - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-12);
  }
  SUBCASE("diagonal") {
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(2, 2);
    D(0, 0) = 4.0;
    D(1, 1) = 9.0;
    const auto W = inverse_sqrt(D);
    CHECK(std::abs(W(0, 0) - 0.5) < 1e-12);
    CHECK(std::abs(W(1, 1) - 1.0 / 3.0) < 1e-12);
  }
  SUBCASE("2x2 spectral decomposition") {
    Eigen::MatrixXcd M(2, 2);
    M << 2, 1, 1, 2;
    const auto W = inverse_sqrt(M);
    // Eigenvalues 1/sqrt(3) on (1,1)/sqrt(2) and 1 on (1,-1)/sqrt(2).
    const double a = (1.0 / std::sqrt(3.0) + 1.0) / 2.0;
    const double b = (1.0 / std::sqrt(3.0) - 1.0) / 2.0;
    CHECK(std::abs(W(0, 0) - a) < 1e-12);
    CHECK(std::abs(W(0, 1) - b) < 1e-12);
    CHECK((W * M * W - Eigen::MatrixXcd::Identity(2, 2)).norm() <= 1e-8);
  }
  SUBCASE("singular input") {
    Eigen::MatrixXcd R(2, 2);
    R << 1, 1, 1, 1;
    CHECK_THROWS_WITH_AS(inverse_sqrt(R), doctest::Contains("SingularOperator"), Error);
  }
}

TEST_CASE("trace identity: tr(G) = |J| * n") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + static_cast<int>(rng.bounded(40));
    const int n = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m)));
    const int js = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m)));
    const auto I = random_subset(m, n, rng);
    const auto J = random_subset(m, js, rng);
    const auto G = gram(fourier_submatrix(m, I, J));
    const double expected = static_cast<double>(J.size()) * static_cast<double>(I.size());
    CHECK(std::abs(std::real(G.trace()) - expected) <= 1e-9 * expected);
    const auto e = eigen_extremes(G);
    CHECK(e.lambda_max <= expected * (1 + 1e-9));           // lambda_max <= n*|J|
    CHECK(e.lambda_max <= static_cast<double>(m) * I.size() * (1 + 1e-9));
  }
}

TEST_CASE("full rows give a tight certificate for any I") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + static_cast<int>(rng.bounded(64));
    const int n = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m)));
    const auto e =
        eigen_extremes(gram(fourier_submatrix(m, random_subset(m, n, rng), full_range(m))));
    CHECK(e.lambda_min == doctest::Approx(static_cast<double>(m)).epsilon(1e-9));
    CHECK(e.lambda_max == doctest::Approx(static_cast<double>(m)).epsilon(1e-9));
  }
}

TEST_CASE("cyclic shifts of I or J leave the spectrum unchanged") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const int m = 3 + static_cast<int>(rng.bounded(30));
    const int n = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m - 1)));
    const int js = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m - 1)));
    const auto I = random_subset(m, n, rng);
    const auto J = random_subset(m, js, rng);
    const int shift = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m - 1)));
    auto shifted = [&](const std::vector<int>& v) {
      std::vector<int> out;
      for (int x : v) out.push_back((x + shift) % m);
      std::sort(out.begin(), out.end());
      return out;
    };
    const auto base = eigen_extremes(gram(fourier_submatrix(m, I, J)));
    const auto si = eigen_extremes(gram(fourier_submatrix(m, shifted(I), J)));
    const auto sj = eigen_extremes(gram(fourier_submatrix(m, I, shifted(J))));
    const double scale = std::max(1.0, base.lambda_max);
    CHECK(std::abs(si.lambda_min - base.lambda_min) <= 1e-9 * scale);
    CHECK(std::abs(si.lambda_max - base.lambda_max) <= 1e-9 * scale);
    CHECK(std::abs(sj.lambda_min - base.lambda_min) <= 1e-9 * scale);
    CHECK(std::abs(sj.lambda_max - base.lambda_max) <= 1e-9 * scale);
  }
}

TEST_CASE("J-monotonicity of both extremes") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 4 + static_cast<int>(rng.bounded(28));
    const int n = 1 + static_cast<int>(rng.bounded(4));
    const auto I = random_subset(m, std::min(n, m), rng);
    const int js = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m - 1)));
    auto J = random_subset(m, js, rng);
    auto J2 = J;
    for (int x = 0; x < m; ++x)
      if (std::find(J2.begin(), J2.end(), x) == J2.end()) {
        J2.push_back(x);
        break;
      }
    std::sort(J2.begin(), J2.end());
    const auto a = eigen_extremes(gram(fourier_submatrix(m, I, J)));
    const auto b = eigen_extremes(gram(fourier_submatrix(m, I, J2)));
    CHECK(a.lambda_min <= b.lambda_min + 1e-9 * std::max(1.0, b.lambda_max));
    CHECK(a.lambda_max <= b.lambda_max + 1e-9 * std::max(1.0, b.lambda_max));
  }
}

TEST_CASE("scale covariance in d") {
  const GridSpectrum g1(8, {0, 3, 5}, 1.0);
  const GridSpectrum g3(8, {0, 3, 5}, 3.0);
  const RowSelection J({0, 2, 4, 6}, 8);
  const auto c1 = frame_certificate(g1, J);
  const auto c3 = frame_certificate(g3, J);
  CHECK(c3.a_frame == doctest::Approx(3.0 * c1.a_frame).epsilon(1e-12));
  CHECK(c3.A_frame == doctest::Approx(3.0 * c1.A_frame).epsilon(1e-12));
  CHECK(c3.normalized_lower == doctest::Approx(c1.normalized_lower).epsilon(1e-12));
  CHECK(c3.normalized_upper == doctest::Approx(c1.normalized_upper).epsilon(1e-12));
}

TEST_CASE("certificate bounds match brute-force quadratic form extremes") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = 2 + static_cast<int>(rng.bounded(7));  // m <= 8
    const int n = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(std::min(m, 4))));
    const int js = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m)));
    const auto I = random_subset(m, n, rng);
    const auto J = random_subset(m, js, rng);
    const auto B = fourier_submatrix(m, I, J);
    const auto e = eigen_extremes(gram(B));
    if (n == 1) {
      const double v = B.col(0).squaredNorm();
      CHECK(e.lambda_min == doctest::Approx(v).epsilon(1e-9));
      CHECK(e.lambda_max == doctest::Approx(v).epsilon(1e-9));
    } else if (n == 2) {
      const auto [lo, hi] = oracle::dense_grid_extremes_c2(B, 1200);
      CHECK(std::abs(e.lambda_min - lo) <= 2e-5 * std::max(1.0, hi));
      CHECK(std::abs(e.lambda_max - hi) <= 2e-5 * std::max(1.0, hi));
    } else {
      const auto [lo, hi] = oracle::power_extremes(gram(B));
      CHECK(std::abs(e.lambda_min - lo) <= 1e-6 * std::max(1.0, hi));
      CHECK(std::abs(e.lambda_max - hi) <= 1e-6 * std::max(1.0, hi));
    }
  }
}

TEST_CASE("gram_spectrum is ascending and consistent with extremes") {
  const GridSpectrum g(8, {0, 3, 5}, 1.0);
  const RowSelection J({0, 2, 4}, 8);
  const auto spec = gram_spectrum(g, J);
  const auto e = eigen_extremes(gram(fourier_submatrix(8, g.cells(), J.rows())));
  REQUIRE(spec.size() == 3);
  CHECK(spec(0) <= spec(1));
  CHECK(spec(1) <= spec(2));
  CHECK(spec(2) == doctest::Approx(e.lambda_max).epsilon(1e-12));
}
