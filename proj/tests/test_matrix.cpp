#include <doctest.h>

#include <cmath>
#include <random>

#include "lossgain/errors.hpp"
#include "lossgain/matrix.hpp"

using namespace lossgain;

namespace {

DenseMatrix random_symmetric(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = u(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

const DenseMatrix kSigmaX = DenseMatrix::from_real(2, 2, {0, 1, 1, 0});
const DenseMatrix kSigmaY = DenseMatrix::from_complex(2, 2, {{0, 0}, {0, -1}, {0, 1}, {0, 0}});
const DenseMatrix kSigmaZ = DenseMatrix::from_real(2, 2, {1, 0, 0, -1});

}  // namespace

TEST_CASE("eig_sym on an already diagonal matrix") {
  const DenseMatrix m = DenseMatrix::from_real(2, 2, {2, 0, 0, 1});
  const EigSym e = eig_sym(m);
  CHECK(e.values[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((e.vectors - DenseMatrix::identity(2)).max_norm() < 1e-14);
}

TEST_CASE("eig_sym of the Landau kinetic matrix, B=2 C=0 gamma=1") {
  // lambda(+-) = (B +- Delta)/2 with Delta = sqrt(C^2 + gamma^2) = 1
  const DenseMatrix m = DenseMatrix::from_real(2, 2, {1.0, 0.5, 0.5, 1.0});
  const EigSym e = eig_sym(m);
  CHECK(e.values[0] == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(e.values[1] == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("eig_sym of the 3x3 tridiagonal p=3 q=1") {
  // lambda_k = p + 2 q cos(k pi / (N+1)), hand-evaluated for N = 3
  DenseMatrix m = DenseMatrix::from_real(3, 3, {3, 1, 0, 1, 3, 1, 0, 1, 3});
  const EigSym e = eig_sym(m);
  CHECK(e.values[0] == doctest::Approx(3.0 + std::sqrt(2.0)).epsilon(1e-13));
  CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(e.values[2] == doctest::Approx(3.0 - std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("eig_sym reconstruction and orthogonality across sizes up to 64") {
  std::mt19937 rng(11u);
  for (std::size_t n : {2u, 3u, 5u, 8u, 17u, 33u, 64u}) {
    const DenseMatrix m = random_symmetric(rng, n);
    const EigSym e = eig_sym(m);
    DenseMatrix lam(n, n);
    for (std::size_t i = 0; i < n; ++i) lam(i, i) = e.values[i];
    const double recon = (e.vectors * lam * e.vectors.transpose() - m).max_norm();
    CHECK(recon <= 1e-12 * std::max(1.0, m.max_norm()));
    const double orth = (e.vectors.transpose() * e.vectors - DenseMatrix::identity(n)).max_norm();
    CHECK(orth <= 1e-12);
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(e.values[i] >= e.values[i + 1]);
  }
}

TEST_CASE("eig_sym sign convention is deterministic") {
  std::mt19937 rng(12u);
  const DenseMatrix m = random_symmetric(rng, 6);
  const EigSym a = eig_sym(m);
  const EigSym b = eig_sym(m);
  CHECK((a.vectors - b.vectors).max_norm() == 0.0);
  for (std::size_t j = 0; j < 6; ++j) {
    double first = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      if (std::abs(a.vectors(i, j)) > 1e-12) {
        first = a.vectors(i, j).real();
        break;
      }
    }
    CHECK(first > 0.0);
  }
}

TEST_CASE("eig_sym rejects non-symmetric input") {
  const DenseMatrix m = DenseMatrix::from_real(2, 2, {0, 1, 0, 0});
  CHECK_THROWS_AS(eig_sym(m), Error);
  const DenseMatrix c = DenseMatrix::from_complex(2, 2, {{1, 0}, {0, 1}, {0, 1}, {1, 0}});
  CHECK_THROWS_AS(eig_sym(c), Error);
}

TEST_CASE("Pauli commutator [sx, sy] = 2i sz") {
  const DenseMatrix lhs = commutator(kSigmaX, kSigmaY);
  const DenseMatrix rhs = Complex{0.0, 2.0} * kSigmaZ;
  CHECK((lhs - rhs).max_norm() < 1e-15);
}

TEST_CASE("commutator is antisymmetric, anticommutator symmetric") {
  std::mt19937 rng(13u);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    DenseMatrix a(4, 4), b(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        a(i, j) = Complex{u(rng), u(rng)};
        b(i, j) = Complex{u(rng), u(rng)};
      }
    CHECK((commutator(a, b) + commutator(b, a)).max_norm() < 1e-14);
    CHECK((anticommutator(a, b) - anticommutator(b, a)).max_norm() < 1e-14);
  }
}

TEST_CASE("commutator shape mismatch") {
  CHECK_THROWS_AS(commutator(DenseMatrix::identity(2), DenseMatrix::identity(3)), Error);
  CHECK_THROWS_AS(anticommutator(DenseMatrix::zero(2, 3), DenseMatrix::zero(3, 2)), Error);
}

TEST_CASE("symmetric/antisymmetric split of M R reassembles D") {
  // brute-force check of D_S = [M,R]/2 and D_A = {M,R}/2 on the Landau matrices
  const DenseMatrix m = DenseMatrix::from_real(2, 2, {1.0, 0.5, 0.5, 1.0});
  const DenseMatrix r = DenseMatrix::from_real(2, 2, {0, 1, -1, 0});
  const DenseMatrix d = m * r;
  const DenseMatrix ds = 0.5 * commutator(m, r);
  const DenseMatrix da = 0.5 * anticommutator(m, r);
  CHECK((ds + da - d).max_norm() < 1e-15);
  CHECK(ds.is_symmetric());
  CHECK(da.is_antisymmetric());
}

TEST_CASE("eig_herm_values agrees with eig_sym on real symmetric input") {
  std::mt19937 rng(14u);
  for (std::size_t n : {3u, 8u, 21u}) {
    const DenseMatrix m = random_symmetric(rng, n);
    const EigSym e = eig_sym(m);
    std::vector<double> hv = eig_herm_values(m);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(hv[i] == doctest::Approx(e.values[n - 1 - i]).epsilon(1e-11));
  }
}

TEST_CASE("eig_herm_values on a complex Hermitian matrix") {
  // sy has eigenvalues -1, +1; a shifted and scaled copy checks the phases
  const DenseMatrix m = DenseMatrix::from_complex(
      2, 2, {{2.0, 0.0}, {0.0, -0.7}, {0.0, 0.7}, {1.0, 0.0}});
  const std::vector<double> ev = eig_herm_values(m);
  // analytic: 1.5 +- sqrt(0.25 + 0.49)
  CHECK(ev[0] == doctest::Approx(1.5 - std::sqrt(0.74)).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(1.5 + std::sqrt(0.74)).epsilon(1e-12));
  CHECK_THROWS_AS(eig_herm_values(DenseMatrix::from_real(2, 2, {0, 1, 0, 0})), Error);
}

TEST_CASE("eig_herm_values handles larger random Hermitian matrices") {
  std::mt19937 rng(15u);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 60;
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = u(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex{u(rng), u(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  const std::vector<double> ev = eig_herm_values(m);
  double tr = 0.0;
  for (double e : ev) tr += e;
  CHECK(tr == doctest::Approx(m.trace().real()).epsilon(1e-10));
  double tr2 = 0.0;
  for (double e : ev) tr2 += e * e;
  CHECK(tr2 == doctest::Approx((m * m).trace().real()).epsilon(1e-10));
}
