#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "coherent/error.hpp"
#include "coherent/weyl.hpp"

using namespace coherent;

namespace {

// Hermite functions psi_0 .. psi_n at x by the normalized three-term recurrence.
std::vector<double> hermite_functions(int n, double x) {
  std::vector<double> psi(n + 1);
  psi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (n >= 1) psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int k = 1; k < n; ++k) {
    psi[k + 1] = std::sqrt(2.0 / (k + 1)) * x * psi[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * psi[k - 1];
  }
  return psi;
}

// <m|D(alpha)|n> in the position representation, where
// D(alpha) psi(x) = e^{-i q p / 2} e^{i p x} psi(x - q), q = sqrt2 Re alpha,
// p = sqrt2 Im alpha; trapezoid rule, spectrally accurate for these integrands.
Complex position_oracle(int m, int n, Complex alpha) {
  const double q = std::sqrt(2.0) * alpha.real();
  const double p = std::sqrt(2.0) * alpha.imag();
  const int top = std::max(m, n);
  const double h = 0.01;
  Complex s = 0.0;
  for (double x = -25.0; x <= 25.0; x += h) {
    const auto a = hermite_functions(top, x);
    const auto b = hermite_functions(top, x - q);
    s += a[m] * b[n] * std::polar(1.0, p * x);
  }
  return s * h * std::polar(1.0, -0.5 * q * p);
}

FockVector fock_basis(int n, int truncation) {
  std::vector<Complex> c(truncation + 1, 0.0);
  c[n] = 1.0;
  return {1.0, c};
}

}  // namespace

TEST(Displacement, Examples) {
  const Complex alpha(0.7, -0.4);
  EXPECT_NEAR(std::abs(displacement_element(0, 0, alpha) - std::exp(-0.5 * std::norm(alpha))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(displacement_element(1, 0, 1.0) - std::exp(-0.5)), 0.0, 1e-15);
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) EXPECT_EQ(displacement_element(m, n, 0.0), Complex(m == n ? 1.0 : 0.0));
  }
}

TEST(Displacement, MatchesPositionRepresentation) {
  for (Complex alpha : {Complex(1.0, 0.0), Complex(0.7, -0.4), Complex(-1.3, 2.1)}) {
    for (int m = 0; m <= 6; ++m) {
      for (int n = 0; n <= 6; ++n) {
        EXPECT_NEAR(std::abs(displacement_element(m, n, alpha) - position_oracle(m, n, alpha)), 0.0, 1e-12)
            << "m=" << m << " n=" << n << " alpha=" << alpha;
      }
    }
  }
}

TEST(Displacement, MatrixMatchesElements) {
  const Complex alpha(1.1, 0.6);
  const auto d = displacement_matrix(5, 7, alpha);
  const auto bare = displacement_matrix(5, 7, alpha, false);
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 7; ++n) {
      const Complex e = displacement_element(m, n, alpha);
      EXPECT_NEAR(std::abs(d[m * 8 + n] - e), 0.0, 1e-15);
      EXPECT_NEAR(std::abs(bare[m * 8 + n] * std::exp(-0.5 * std::norm(alpha)) - e), 0.0, 1e-14);
    }
  }
}

TEST(Displacement, LargeIndicesStayFinite) {
  const Complex alpha(6.0, -3.0);
  const auto d = displacement_matrix(150, 150, alpha);
  for (const auto& x : d) ASSERT_TRUE(std::isfinite(x.real()) && std::isfinite(x.imag()));
  // Far off-diagonal entries of a moderate displacement are negligible, not garbage.
  EXPECT_LT(std::abs(displacement_element(150, 0, 0.5)), 1e-100);
}

TEST(Displacement, UnitarityTail) {
  for (Complex alpha : {Complex(0.5, 0.5), Complex(2.0, -1.0), Complex(-3.0, 1.5)}) {
    const double a = std::abs(alpha);
    const int trunc = static_cast<int>(std::ceil(a * a + 10.0 * a + 20.0));
    for (int n : {0, 3, 7}) EXPECT_LE(displacement_column_tail(n, alpha, trunc), 1e-10) << alpha << " n=" << n;
  }
}

TEST(MatrixCoefficient, Examples) {
  const FockVector vac = coherent_fock(1.0, 0.0, 8);
  EXPECT_NEAR(std::abs(matrix_coefficient(vac, vac, 0.0, 0.0) - 1.0), 0.0, 1e-15);
  for (auto [x, y] : {std::pair{1.0, 0.5}, {-2.0, 0.3}, {0.0, 3.0}}) {
    EXPECT_NEAR(std::abs(matrix_coefficient(vac, vac, x, y)), std::exp(-(x * x + y * y) / 4.0), 1e-15);
  }
  EXPECT_NEAR(std::abs(matrix_coefficient(vac, fock_basis(1, 8), 0.0, 0.0)), 0.0, 1e-15);
  EXPECT_THROW(matrix_coefficient(vac, coherent_fock(2.0, 0.0, 8), 0.0, 0.0), IncompatibleError);
}

TEST(MatrixCoefficient, PhaseCovariance) {
  const auto h = random_fock(1.0, 6, 1);
  const auto f = random_fock(1.0, 6, 2);
  std::vector<Complex> rotated(h.coeffs().begin(), h.coeffs().end());
  for (auto& c : rotated) c *= std::polar(1.0, 1.234);
  const FockVector h2(1.0, rotated);
  for (auto [x, y] : {std::pair{0.3, -0.2}, {1.5, 2.0}}) {
    EXPECT_NEAR(std::abs(matrix_coefficient(h, f, x, y)), std::abs(matrix_coefficient(h2, f, x, y)), 1e-14);
    EXPECT_NEAR(std::abs(matrix_coefficient(h, f, x, y)), std::abs(matrix_coefficient(f, h, -x, -y)), 1e-14);
  }
}

TEST(LpMatrixNorm, Examples) {
  const FockVector vac = coherent_fock(1.0, 0.0, 6);
  EXPECT_NEAR(lp_matrix_norm(vac, vac, 4.0), std::pow(0.5, 0.25), 1e-12);
  EXPECT_NEAR(sharp_constant(4.0), std::pow(0.5, 0.25), 1e-15);
  const auto h = random_fock(1.0, 5, 3);
  EXPECT_NEAR(lp_matrix_norm(h, h, 2.0), 1.0, 1e-12);
  // |<1|D(alpha)|0>|^4 = |alpha|^4 e^{-2|alpha|^2}: Int u^2 e^{-2u} du = 1/4.
  const double first = lp_matrix_norm(fock_basis(1, 6), vac, 4.0);
  EXPECT_NEAR(first, std::pow(0.25, 0.25), 1e-12);
  EXPECT_LT(first, sharp_constant(4.0));
  EXPECT_THROW(lp_matrix_norm(vac, vac, 1.5), DomainError);
}

TEST(LpMatrixNorm, ScaleInK) {
  // |k| (2 pi)^-1 dx dy absorbs the k-dependence of the phase-space scaling.
  const auto h = random_fock(3.0, 4, 8);
  const auto f = random_fock(3.0, 4, 9);
  const FockVector h1(1.0, {h.coeffs().begin(), h.coeffs().end()});
  const FockVector f1(1.0, {f.coeffs().begin(), f.coeffs().end()});
  EXPECT_NEAR(lp_matrix_norm(h, f, 4.0), lp_matrix_norm(h1, f1, 4.0), 1e-13);
}

TEST(CoherentFock, RefusesUnresolvedTail) {
  EXPECT_THROW(coherent_fock(1.0, 6.0, 20), DomainError);
  EXPECT_NEAR(norm(coherent_fock(1.0, {1.0, 1.0})), 1.0, 1e-12);
}

TEST(Bargmann, IsometryAndHusimiLink) {
  const auto h = random_fock(1.0, 8, 21);
  const auto F = bargmann_image(h);
  EXPECT_EQ(F.space(), PhaseSpace::plane(1.0));
  EXPECT_NEAR(norm(F), 1.0, 1e-14);
  const FockVector vac = coherent_fock(1.0, 0.0, 8);
  for (Complex alpha : {Complex(0.3, 0.1), Complex(-1.0, 1.4), Complex(2.0, 0.0)}) {
    const double direct =
        std::norm(matrix_coefficient(h, vac, std::sqrt(2.0) * alpha.real(), std::sqrt(2.0) * alpha.imag()));
    EXPECT_NEAR(direct, husimi(F, std::conj(alpha)), 1e-10);
  }
}

// ---- seeded properties ------------------------------------------------------

TEST(Property, SharpnessRandomPairs) {
  for (double p : {3.0, 4.0, 6.0}) {
    for (int i = 0; i < 200; ++i) {
      const auto h = random_fock(1.0, 5, 100 + 2 * i);
      const auto f = random_fock(1.0, 5, 101 + 2 * i);
      EXPECT_LE(lp_matrix_norm(h, f, p), sharp_constant(p) + 1e-8) << "p=" << p << " i=" << i;
    }
  }
}

TEST(Property, CoherentPairsAttainSharpConstant) {
  for (double p : {3.0, 4.0, 6.0}) {
    for (Complex w : {Complex(0.0), Complex(0.5, -0.3)}) {
      const auto c = coherent_fock(1.0, w, 16);
      EXPECT_NEAR(lp_matrix_norm(c, c, p), sharp_constant(p), 1e-8) << "p=" << p << " w=" << w;
    }
  }
}
