#include <gtest/gtest.h>

#include <cmath>

#include "coherent/error.hpp"
#include "coherent/explorer.hpp"

using namespace coherent;

namespace {

const std::vector<PhaseSpace>& spaces() {
  static const std::vector<PhaseSpace> s = {PhaseSpace::plane(1.0), PhaseSpace::disc(3.0), PhaseSpace::sphere(2.0)};
  return s;
}

int full_degree(const PhaseSpace& s, int d) { return s.kind() == Kind::Sphere ? s.sphere_degree() : d; }

}  // namespace

TEST(MaximizeLp, PlaneEvenPExample) {
  const auto r = maximize_lp(PhaseSpace::plane(1.0), 4.0, 10, 20, 1);
  EXPECT_NEAR(r.best_value, 0.5, 1e-6);
  EXPECT_GE(r.coherent_overlap, 1.0 - 1e-5);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.restarts, 20);
  EXPECT_EQ(r.runs.size(), 20u);
  EXPECT_NEAR(r.c_estimate, std::pow(r.best_value, 0.25), 1e-15);
}

TEST(MaximizeLp, P2IsConstantOnTheSphere) {
  for (const auto& s : spaces()) {
    const auto r = maximize_lp(s, 2.0, full_degree(s, 5), 5, 3);
    for (const auto& run : r.runs) EXPECT_NEAR(run.value, 1.0, 1e-10) << describe(s);
  }
}

TEST(MaximizeLp, SphereHalfFullSpace) {
  const auto r = maximize_lp(PhaseSpace::sphere(0.5), 4.0, 1, 10, 2);
  EXPECT_NEAR(r.best_value, 2.0 / 3.0, 1e-8);
}

TEST(MaximizeLp, EvenPNeverExceedsCoherentValue) {
  for (const auto& s : spaces()) {
    for (double p : {4.0, 6.0}) {
      const auto r = maximize_lp(s, p, full_degree(s, 6), 6, 11);
      EXPECT_LE(r.best_value, coherent_value(s, p) + 1e-6) << describe(s) << " p=" << p;
      for (const auto& run : r.runs) EXPECT_LE(run.value, coherent_value(s, p) + 1e-6);
    }
  }
}

TEST(MaximizeLp, DeterministicForFixedSeed) {
  const auto a = maximize_lp(PhaseSpace::disc(2.0), 4.0, 6, 4, 42);
  const auto b = maximize_lp(PhaseSpace::disc(2.0), 4.0, 6, 4, 42);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.best_state, b.best_state);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(MaximizeLp, RejectsBadArguments) {
  EXPECT_THROW(maximize_lp(PhaseSpace::plane(1.0), 1.0, 4, 2, 1), DomainError);
  EXPECT_THROW(maximize_lp(PhaseSpace::plane(1.0), 4.0, 4, 0, 1), DomainError);
  EXPECT_THROW(maximize_lp(PhaseSpace::sphere(1.0), 4.0, 3, 2, 1), DegreeBoundError);
}

TEST(MaximizeFrom, ScaleInvariant) {
  const auto f = random_state(PhaseSpace::plane(1.0), 5, 9);
  std::vector<Complex> scaled(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : scaled) c *= Complex(-3.0, 4.0);
  OptimizerOptions o;
  o.max_iterations = 50;
  const auto a = maximize_from(f, 4.0, o);
  const auto b = maximize_from(AnalyticState(f.space(), scaled), 4.0, o);
  EXPECT_NEAR(a.best_value, b.best_value, 1e-12);
}

TEST(MaximizeFrom, RejectsZeroState) {
  EXPECT_THROW(maximize_from(AnalyticState(PhaseSpace::plane(1.0), {0.0, 0.0}), 4.0), DomainError);
}

TEST(Ascend, ValueNeverDecreases) {
  for (const auto& s : spaces()) {
    const LpObjective obj(s, 4.0, full_degree(s, 6));
    const auto start = orthonormal_coordinates(random_state(s, full_degree(s, 6), 77));
    double prev = obj.value(start);
    for (int k = 1; k <= 25; ++k) {
      auto coords = start;
      OptimizerOptions o;
      o.max_iterations = k;
      const auto rec = ascend(obj, coords, o);
      EXPECT_GE(rec.value, prev - 1e-15) << describe(s) << " k=" << k;
      prev = rec.value;
    }
  }
}

TEST(LpObjective, GradientMatchesCentralDifferences) {
  for (const auto& s : spaces()) {
    for (double p : {4.0, 3.0}) {
      const int d = full_degree(s, 6);
      const LpObjective obj(s, p, d);
      for (int i = 0; i < 20; ++i) {
        const auto x = orthonormal_coordinates(random_state(s, d, 500 + i));
        const auto g = obj.gradient(x);
        const double h = 1e-5;
        double err = 0.0, scale = 0.0;
        for (std::size_t n = 0; n < x.size(); ++n) {
          for (Complex dir : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
            auto xp = x, xm = x;
            xp[n] += h * dir;
            xm[n] -= h * dir;
            const double fd = (obj.value(xp) - obj.value(xm)) / (2.0 * h);
            const double an = dir.real() != 0.0 ? g[n].real() : g[n].imag();
            err = std::max(err, std::fabs(fd - an));
            scale = std::max(scale, std::fabs(an));
          }
        }
        EXPECT_LE(err, 1e-5 * scale) << describe(s) << " p=" << p << " i=" << i;
      }
    }
  }
}

TEST(CoherentOverlap, Examples) {
  for (const auto& s : spaces()) {
    const Complex w0(0.3, -0.2);
    const auto c = coherent_overlap(coherent_state(s, w0));
    EXPECT_NEAR(c.overlap, 1.0, 1e-9) << describe(s);
    EXPECT_NEAR(std::abs(c.w - w0), 0.0, 1e-4) << describe(s);
    const auto v = coherent_overlap(coherent_state(s, 0.0));
    EXPECT_NEAR(v.overlap, 1.0, 1e-12);
    EXPECT_NEAR(std::abs(v.w), 0.0, 1e-4);
  }
  // max_w |w| e^{-|w|^2/2} is e^{-1/2}, reached on |w| = 1.
  const auto z = coherent_overlap(AnalyticState(PhaseSpace::plane(1.0), {0.0, 1.0}));
  EXPECT_NEAR(z.overlap, std::exp(-0.5), 1e-9);
  EXPECT_NEAR(std::abs(z.w), 1.0, 1e-4);
}

TEST(CoherentOverlap, DiscBoundaryIsClamped) {
  // z^n on the Disc peaks at |w|^2 = n / (n + beta), beyond the search radius.
  const auto s = PhaseSpace::disc(1.5);
  const int n = 60;
  std::vector<Complex> c(n + 1, 0.0);
  c[n] = 1.0 / std::sqrt(monomial_norm_sq(s, n));
  const auto r = coherent_overlap(AnalyticState(s, c));
  EXPECT_TRUE(r.clamped);
  EXPECT_LE(std::abs(r.w), kDiscOverlapRadius + 1e-12);
}

TEST(ScanP, Examples) {
  const std::vector<double> ps = {2.0, 4.0, 6.0};
  const auto rows = scan_p(PhaseSpace::plane(1.0), ps, 6, 3, 5);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].result->c_estimate, 1.0, 1e-10);
  EXPECT_NEAR(rows[1].result->c_estimate, std::pow(0.5, 0.25), 1e-6);
  EXPECT_NEAR(rows[2].result->c_estimate, std::pow(1.0 / 3.0, 1.0 / 6.0), 1e-6);
  for (const auto& r : rows) EXPECT_FALSE(r.conjectural);

  const std::vector<double> p2 = {2.0};
  EXPECT_NEAR(scan_p(PhaseSpace::sphere(1.0), p2, 2, 2, 5)[0].result->c_estimate, 1.0, 1e-10);

  const std::vector<double> p3 = {3.0};
  const auto disc = scan_p(PhaseSpace::disc(3.0), p3, 4, 2, 5);
  EXPECT_NEAR(disc[0].coherent_c, std::cbrt(2.0 / 3.5), 1e-14);
  EXPECT_TRUE(disc[0].conjectural);
}

TEST(ScanP, RowErrorsDoNotStopTheScan) {
  const std::vector<double> ps = {1.0, 4.0};
  const auto rows = scan_p(PhaseSpace::plane(1.0), ps, 4, 2, 5);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_FALSE(rows[0].result.has_value());
  EXPECT_TRUE(rows[1].error.empty());
  EXPECT_TRUE(rows[1].result.has_value());
}

TEST(RestartSeed, DistinctAndStable) {
  EXPECT_EQ(restart_seed(1, 3), restart_seed(1, 3));
  EXPECT_NE(restart_seed(1, 3), restart_seed(1, 4));
  EXPECT_NE(restart_seed(1, 3), restart_seed(2, 3));
}
