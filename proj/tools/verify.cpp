#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "coherent/coherent.hpp"

namespace coherent::cli {
namespace {

constexpr int kRandomStates = 200;
constexpr int kKernelSamples = 100;
constexpr int kOracleDegree = 30;
constexpr double kBurbeaSlack = 1e-12;
constexpr double kHeisenbergTolerance = 1e-8;
const Complex kSharedPoint{0.3, 0.2};

VerifyEntry bound(CheckReport r, double slack) {
  r.tolerance = slack;
  const bool ok = r.lhs <= r.rhs + slack;
  return {std::move(r), "bound", ok};
}

VerifyEntry equality(CheckReport r) {
  const bool ok = r.equality_attained;
  return {std::move(r), "equality", ok};
}

std::string label(const PhaseSpace& space, const std::string& what) {
  return describe(space) + ": " + what;
}

/// Random point of the phase space; radius capped so kernels stay moderate.
Complex random_point(const PhaseSpace& space, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double cap = space.kind() == Kind::Disc ? 0.9 : space.kind() == Kind::Plane ? 2.0 : 3.0;
  const double r = cap * std::sqrt(unit(gen));
  const double t = 2.0 * std::numbers::pi * unit(gen);
  return std::polar(r, t);
}

/// Worst sample of a family of bound checks, by rhs - lhs.
CheckReport worst_of(std::vector<CheckReport> reports, const std::string& name) {
  auto it = std::min_element(reports.begin(), reports.end(),
                             [](const CheckReport& a, const CheckReport& b) { return a.gap < b.gap; });
  CheckReport r = *it;
  std::ostringstream os;
  os << name << " (worst of " << reports.size() << ")";
  r.label = os.str();
  return r;
}

PhaseSpace partner(const PhaseSpace& space, int i) {
  return i % 2 == 0 ? space : space.with_beta(space.beta() + 0.5);
}

void quadrature_oracle(const PhaseSpace& space, std::vector<VerifyEntry>& out) {
  const int top = space.kind() == Kind::Sphere ? std::min(kOracleDegree, space.sphere_degree())
                                               : kOracleDegree;
  const QuadratureGrid grid = build_grid(space, 1.0, kDefaultRadialOrder, 2 * top + 4);
  double worst = 0.0;
  for (int n = 0; n <= top; ++n) {
    const double closed = monomial_norm_sq(space, n);
    const double quad = integrate(grid, [&](Complex z) { return std::norm(std::pow(z, n)); });
    worst = std::max(worst, std::fabs(quad - closed) / closed);
  }
  out.push_back(bound(make_report(label(space, "monomial norms vs q=1 quadrature, max rel err"), worst,
                                  0.0, 0.0),
                      1e-10));
}

void normalization(const PhaseSpace& space, int degree, std::uint64_t seed, const GridOptions& grid,
                   std::vector<VerifyEntry>& out) {
  double worst = 0.0;
  for (int i = 0; i < kKernelSamples; ++i) {
    const AnalyticState f = random_state(space, degree, restart_seed(seed, i));
    worst = std::max(worst, std::fabs(lp_functional(f, 2.0, grid) - 1.0));
  }
  out.push_back(bound(make_report(label(space, "|Lambda_2 - 1| over random states"), worst, 0.0, 0.0),
                      kNormalizationTolerance));
}

void reproducing(const PhaseSpace& space, int degree, std::uint64_t seed, std::vector<VerifyEntry>& out) {
  std::mt19937_64 gen(restart_seed(seed, 1000));
  double worst = 0.0;
  for (int i = 0; i < kKernelSamples; ++i) {
    const AnalyticState f = random_state(space, degree, restart_seed(seed, 1000 + i));
    const Complex w = random_point(space, gen);
    const Complex via_kernel = inner_product(f, kernel_state(space, w, std::max(degree, kDefaultTruncation)));
    const double scale = norm(f) * std::sqrt(std::abs(kernel_value(space, std::norm(w))));
    worst = std::max(worst, std::abs(via_kernel - evaluate(f, w)) / scale);
  }
  out.push_back(bound(make_report(label(space, "reproducing identity, scaled max error"), worst, 0.0, 0.0),
                      1e-10));
}

void burbea(const PhaseSpace& space, int degree, std::uint64_t seed, std::vector<VerifyEntry>& out) {
  std::vector<CheckReport> reports;
  for (int i = 0; i < kRandomStates; ++i) {
    const PhaseSpace other = partner(space, i);
    const int other_degree = other.kind() == Kind::Sphere ? std::min(degree, other.sphere_degree()) : degree;
    reports.push_back(burbea_check(random_state(space, degree, restart_seed(seed, 2000 + i)),
                                   random_state(other, other_degree, restart_seed(seed, 3000 + i))));
  }
  out.push_back(bound(worst_of(std::move(reports), label(space, "Burbea product bound, random pairs")),
                      kBurbeaSlack));
  for (int i = 0; i < 2; ++i) {
    const PhaseSpace other = partner(space, i);
    CheckReport r = burbea_check(coherent_state(space, kSharedPoint), coherent_state(other, kSharedPoint));
    r.label = label(space, "Burbea equality, coherent pair at shared w, beta' = " + format_double(other.beta()));
    out.push_back(equality(std::move(r)));
  }
}

void power_bounds(const PhaseSpace& space, int degree, std::uint64_t seed, const GridOptions& grid,
                  std::vector<VerifyEntry>& out) {
  for (int n : {2, 3}) {
    const QuadratureGrid g = lp_grid(space, 2.0 * n, degree, grid);
    std::vector<CheckReport> reports;
    double cross = 0.0;
    for (int i = 0; i < kRandomStates; ++i) {
      CheckReport r = power_bound_check(random_state(space, degree, restart_seed(seed, 4000 + 10 * i + n)), n, g);
      cross = std::max(cross, std::fabs(r.lhs - *r.cross_check) / r.rhs);
      reports.push_back(std::move(r));
    }
    const std::string tag = "n=" + std::to_string(n);
    out.push_back(bound(worst_of(std::move(reports), label(space, "power bound " + tag + ", random states")),
                        kEqualityTolerance));
    out.push_back(bound(make_report(label(space, "power bound " + tag + ", quadrature vs ||f^n|| route"),
                                    cross, 0.0, 0.0),
                        kEqualityTolerance));
    CheckReport eq = power_bound_check(coherent_state(space, kSharedPoint), n, grid);
    eq.label = label(space, "power bound " + tag + ", coherent equality");
    out.push_back(equality(std::move(eq)));
  }
}

void heisenberg(std::uint64_t seed, const GridOptions& grid, std::vector<VerifyEntry>& out) {
  constexpr double k = 1.0;
  constexpr int truncation = 6;
  for (double p : {2.0, 4.0, 6.0}) {
    const std::string tag = "p=" + format_double(p);
    const FockVector vac = coherent_fock(k, 0.0, truncation);
    CheckReport r = make_report("Heisenberg " + tag + ", coherent h = f at w = 0",
                                lp_matrix_norm(vac, vac, p, grid), sharp_constant(p), kHeisenbergTolerance);
    out.push_back(equality(std::move(r)));

    const FockVector shifted = coherent_fock(k, kSharedPoint, 16);
    r = make_report("Heisenberg " + tag + ", coherent h = f at w = 0.3+0.2i",
                    lp_matrix_norm(shifted, shifted, p, grid), sharp_constant(p), kHeisenbergTolerance);
    out.push_back(equality(std::move(r)));
  }
  // p = 2 is an identity for every pair, so the random sweep starts at 3.
  for (double p : {3.0, 4.0, 6.0}) {
    std::vector<CheckReport> reports;
    for (int i = 0; i < kRandomStates; ++i) {
      const FockVector h = random_fock(k, truncation, restart_seed(seed, 5000 + 2 * i));
      const FockVector f = random_fock(k, truncation, restart_seed(seed, 5001 + 2 * i));
      reports.push_back(make_report("", lp_matrix_norm(h, f, p, grid), sharp_constant(p), kHeisenbergTolerance));
    }
    out.push_back(bound(worst_of(std::move(reports), "Heisenberg p=" + format_double(p) + ", random pairs"),
                        kHeisenbergTolerance));
  }

  // |(h, D(alpha) 0)|^2 against the Husimi function of the Bargmann image.
  const FockVector h = random_fock(k, truncation, restart_seed(seed, 6000));
  const AnalyticState image = bargmann_image(h);
  const FockVector vac = coherent_fock(k, 0.0, truncation);
  std::mt19937_64 gen(restart_seed(seed, 6001));
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Complex alpha = random_point(PhaseSpace::plane(1.0), gen);
    const double direct = std::norm(matrix_coefficient(h, vac, std::sqrt(2.0) * alpha.real(),
                                                       std::sqrt(2.0) * alpha.imag()));
    worst = std::max(worst, std::fabs(direct - husimi(image, std::conj(alpha))));
  }
  out.push_back(bound(make_report("Heisenberg matrix coefficient vs Bargmann Husimi, max error", worst, 0.0, 0.0),
                      1e-10));
}

}  // namespace

std::vector<VerifyEntry> run_verification(const PhaseSpace& space, std::optional<int> degree,
                                          std::uint64_t seed, const GridOptions& grid) {
  int d = degree.value_or(6);
  if (space.kind() == Kind::Sphere) d = std::min(d, space.sphere_degree());
  if (d < 0) throw DomainError("degree", "degree must be >= 0");

  std::vector<VerifyEntry> out;
  quadrature_oracle(space, out);
  normalization(space, d, seed, grid, out);
  reproducing(space, d, seed, out);
  burbea(space, d, seed, out);
  power_bounds(space, d, seed, grid, out);
  if (space.kind() == Kind::Plane) heisenberg(seed, grid, out);
  return out;
}

}  // namespace coherent::cli
