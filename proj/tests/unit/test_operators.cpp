#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "becent/operators.hpp"
#include "becent/spectral.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace becent;

TEST_CASE("Josephson builder matches the closed-form matrix elements") {
  SUBCASE("N=1, K=8, EJ=2") {
    const SymTriMatrix t = build_josephson(1, 8.0, 0.0, 2.0);
    REQUIRE(t.dim() == 2);
    CHECK(t.diag[0] == doctest::Approx(1.0));
    CHECK(t.diag[1] == doctest::Approx(1.0));
    CHECK(t.sub[0] == doctest::Approx(-1.0));
  }
  SUBCASE("N=2 pure tunneling") {
    const SymTriMatrix t = build_josephson(2, 0.0, 0.0, 2.0);
    CHECK(t.diag == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(t.sub[0] == doctest::Approx(-std::sqrt(2.0)));
    CHECK(t.sub[1] == doctest::Approx(-std::sqrt(2.0)));
  }
  SUBCASE("N=4 pure interaction against a hand oracle") {
    const SymTriMatrix t = build_josephson(4, 1.0, 0.0, 0.0);
    for (int n = 0; n <= 4; ++n) {
      const double expected = (1.0 / 8.0) * (2.0 * n - 4.0) * (2.0 * n - 4.0);
      CHECK(t.diag[n] == doctest::Approx(expected).epsilon(1e-15));
    }
    for (double s : t.sub) CHECK(s == 0.0);
  }
}

TEST_CASE("Josephson builder validates its parameters") {
  CHECK_THROWS_AS(build_josephson(0, 1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_josephson(4, -1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_josephson(4, 1.0, 0.0, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(build_josephson(4, 1.0, std::nan(""), 1.0), std::invalid_argument);
}

TEST_CASE("zero-bias Josephson matrices are palindromic") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> par(0.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + int(rng() % 30);
    const SymTriMatrix t = build_josephson(n, par(rng), 0.0, par(rng));
    for (int i = 0; i <= n; ++i)
      CHECK(t.diag[i] == doctest::Approx(t.diag[n - i]).epsilon(1e-15));
    for (int i = 0; i < n; ++i)
      CHECK(t.sub[i] == doctest::Approx(t.sub[n - 1 - i]).epsilon(1e-15));
  }
}

TEST_CASE("angular builder matches the ladder matrix elements") {
  SUBCASE("N=1 pure -omega*Jx") {
    const SymTriMatrix t = build_angular(1, 0.0, 2.0);
    CHECK(t.diag == std::vector<double>{0.0, 0.0});
    CHECK(t.sub[0] == doctest::Approx(-1.0));
  }
  SUBCASE("N=2 pure chi*m^2") {
    const SymTriMatrix t = build_angular(2, 4.0, 0.0);
    CHECK(t.diag[0] == doctest::Approx(4.0));
    CHECK(t.diag[1] == doctest::Approx(0.0));
    CHECK(t.diag[2] == doctest::Approx(4.0));
    CHECK(t.sub == std::vector<double>{-0.0, -0.0});
  }
}

TEST_CASE("angular form is the Josephson Hamiltonian with chi = K/2, omega = EJ") {
  // Spectra agree after removing the ground offset of each.
  const SymTriMatrix ang = build_angular(20, 0.1, 1.0);
  const SymTriMatrix jos = build_josephson(20, 0.2, 0.0, 1.0);
  const auto ea = eigh_tridiagonal(ang).eigenvalues;
  const auto ej = eigh_tridiagonal(jos).eigenvalues;
  REQUIRE(ea.size() == ej.size());
  for (std::size_t i = 0; i < ea.size(); ++i)
    CHECK(ea[i] - ea[0] == doctest::Approx(ej[i] - ej[0]).epsilon(1e-10));
}

TEST_CASE("spectrum is invariant under the sign of the Jx coupling") {
  for (int n : {3, 8, 15}) {
    const auto plus = eigh_tridiagonal(build_angular(n, 0.7, 1.3)).eigenvalues;
    const auto minus = eigh_tridiagonal(build_angular(n, 0.7, -1.3)).eigenvalues;
    for (std::size_t i = 0; i < plus.size(); ++i)
      CHECK(plus[i] == doctest::Approx(minus[i]).epsilon(1e-10));
  }
}

TEST_CASE("atom-molecule builder matches the conversion matrix elements") {
  SUBCASE("N_atm=2") {
    const SymTriMatrix t = build_atom_molecule(2, 2.0, 2.0);
    REQUIRE(t.dim() == 2);
    CHECK(t.diag[0] == doctest::Approx(0.0));
    CHECK(t.diag[1] == doctest::Approx(2.0));
    CHECK(t.sub[0] == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("N_atm=4 couplings by hand") {
    const SymTriMatrix t = build_atom_molecule(4, 0.0, 2.0);
    REQUIRE(t.dim() == 3);
    CHECK(t.diag == std::vector<double>{0.0, 0.0, 0.0});
    // <2,1|a'a'b|0,2> = sqrt(1*2) * sqrt(2) = 2, times omega/2
    CHECK(t.sub[0] == doctest::Approx(2.0));
    CHECK(t.sub[1] == doctest::Approx(2.0 * std::sqrt(3.0)));  // (2,1) -> (4,0)
  }
  SUBCASE("N_atm=5 diagonal") {
    const SymTriMatrix t = build_atom_molecule(5, 2.0, 0.0);
    CHECK(t.diag == std::vector<double>{1.0, 3.0, 5.0});
    CHECK(t.sub == std::vector<double>{0.0, 0.0});
  }
  CHECK_THROWS_AS(build_atom_molecule(0, 1.0, 1.0), std::invalid_argument);
}

namespace {

oracle::Dense matmul(const oracle::Dense& a, const oracle::Dense& b) {
  oracle::Dense c(a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < a.dim; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

oracle::Dense from_dense_matrix(const DenseMatrix& m) {
  oracle::Dense d(m.dim);
  d.a = m.data;
  return d;
}

}  // namespace

TEST_CASE("Jz is diagonal with the printed single-particle values") {
  const auto j = angular_momentum_matrices(1);
  CHECK(j.jz.at(0, 0) == doctest::Approx(0.5));   // label (0,1)
  CHECK(j.jz.at(1, 1) == doctest::Approx(-0.5));  // label (1,0)
  CHECK(j.jz.at(0, 1) == 0.0);
}

TEST_CASE("Casimir invariant equals (N/2)(N/2+1) on the identity") {
  for (int n = 1; n <= 12; ++n) {
    const auto j = angular_momentum_matrices(n);
    const auto jx = from_dense_matrix(j.jx);
    const auto y = from_dense_matrix(j.jy_imag);
    const auto jz = from_dense_matrix(j.jz);
    // J^2 = Jx^2 + (iY)^2 + Jz^2 = Jx^2 - Y^2 + Jz^2
    const auto jx2 = matmul(jx, jx);
    const auto y2 = matmul(y, y);
    const auto jz2 = matmul(jz, jz);
    const double casimir = 0.5 * n * (0.5 * n + 1.0);
    for (int r = 0; r <= n; ++r)
      for (int c = 0; c <= n; ++c) {
        const double want = r == c ? casimir : 0.0;
        CHECK(std::abs(jx2.at(r, c) - y2.at(r, c) + jz2.at(r, c) - want) <= 1e-10);
      }
  }
}

TEST_CASE("[Jx, Jy] = i Jz") {
  // With Jy = iY this reads Jx Y - Y Jx = Jz, all real.
  for (int n : {1, 2, 5, 9, 12}) {
    const auto j = angular_momentum_matrices(n);
    const auto jx = from_dense_matrix(j.jx);
    const auto y = from_dense_matrix(j.jy_imag);
    const auto lhs1 = matmul(jx, y);
    const auto lhs2 = matmul(y, jx);
    for (int r = 0; r <= n; ++r)
      for (int c = 0; c <= n; ++c)
        CHECK(std::abs(lhs1.at(r, c) - lhs2.at(r, c) - j.jz.at(r, c)) <= 1e-12);
  }
}

TEST_CASE("apply performs the tridiagonal product") {
  SUBCASE("identity-like matrix") {
    SymTriMatrix id;
    id.diag = {1.0, 1.0, 1.0};
    id.sub = {0.0, 0.0};
    const StateVector psi(dimer_basis(2), {{0.2, 0.1}, {0.5, -0.3}, {0.7, 0.0}});
    const auto y = apply(id, psi);
    for (int i = 0; i < 3; ++i) {
      CHECK(y[i].real() == doctest::Approx(psi.amplitude(i).real()));
      CHECK(y[i].imag() == doctest::Approx(psi.amplitude(i).imag()));
    }
  }
  SUBCASE("N=1 Josephson on (1, 0)") {
    const SymTriMatrix t = build_josephson(1, 8.0, 0.0, 2.0);  // diag [1,1], sub [-1]
    const std::vector<std::complex<double>> x{1.0, 0.0};
    const auto y = apply(t, std::span<const std::complex<double>>(x));
    CHECK(y[0].real() == doctest::Approx(1.0));
    CHECK(y[1].real() == doctest::Approx(-1.0));
  }
  SUBCASE("dimension mismatch is an error") {
    SymTriMatrix id;
    id.diag = {1.0, 1.0};
    id.sub = {0.0};
    const std::vector<std::complex<double>> x{1.0, 0.0, 0.0};
    CHECK_THROWS_AS(apply(id, std::span<const std::complex<double>>(x)),
                    std::invalid_argument);
  }
}

TEST_CASE("expectation values of symmetric matrices are real") {
  std::mt19937 rng(23);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + int(rng() % 20);
    SymTriMatrix t;
    t.diag.resize(n + 1);
    t.sub.resize(n);
    for (auto& d : t.diag) d = gauss(rng);
    for (auto& s : t.sub) s = gauss(rng);
    std::vector<std::complex<double>> amps(n + 1);
    for (auto& a : amps) a = {gauss(rng), gauss(rng)};
    const StateVector psi(dimer_basis(n), amps);
    const auto hpsi = apply(t, psi);
    std::complex<double> e = 0.0;
    for (int i = 0; i <= n; ++i) e += std::conj(psi.amplitude(i)) * hpsi[i];
    CHECK(std::abs(e.imag()) <= 1e-12);
    CHECK(expectation(t, psi) == doctest::Approx(e.real()).epsilon(1e-12));
  }
}
