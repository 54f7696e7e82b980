#include "coherent/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coherent/error.hpp"

namespace coherent {
namespace {

void require_unit(const AnalyticState& f) {
  const double nf = norm(f);
  if (!(std::fabs(nf - 1.0) <= kNormalizationTolerance)) {
    std::ostringstream os;
    os << "expected a unit vector, got norm " << nf;
    throw NormalizationError("f", os.str());
  }
}

void check_p(const PhaseSpace& space, double p) {
  if (!(p >= 2.0) || !std::isfinite(p)) throw DomainError("p", "p must be >= 2");
  if (space.kind() == Kind::Disc && !(space.beta() * p / 2.0 > 1.0)) {
    throw DivergentIntegralError("p", "disc L^p integral diverges unless beta p / 2 > 1");
  }
}

}  // namespace

CheckReport make_report(std::string label, double lhs, double rhs, double tolerance) {
  CheckReport r;
  r.label = std::move(label);
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = rhs - lhs;
  r.tolerance = tolerance;
  r.equality_attained = std::fabs(r.gap) <= tolerance;
  return r;
}

bool is_even_integer(double p) noexcept {
  return std::fabs(p / 2.0 - std::round(p / 2.0)) <= 1e-12;
}

QuadratureGrid lp_grid(const PhaseSpace& space, double p, int degree, const GridOptions& options) {
  const double q = p / 2.0;
  const int factor = is_even_integer(p) ? 1 : 2;
  const int integrand_degree = static_cast<int>(std::ceil(q * std::max(degree, 0) - 1e-9));
  const int radial = options.radial_order > 0 ? options.radial_order : factor * kDefaultRadialOrder;
  const int angular =
      options.angular_order > 0 ? options.angular_order : factor * (2 * integrand_degree + 4);
  return build_grid(space, q, radial, angular);
}

double husimi(const AnalyticState& f, Complex z) {
  require_unit(f);
  const Complex v = evaluate(f, z);
  return std::norm(v) * inverse_kernel_power(f.space(), std::norm(z), 1.0);
}

double lp_integral(const AnalyticState& f, double p, const QuadratureGrid& grid) {
  if (grid.space() != f.space()) {
    throw IncompatibleError("grid", "grid and state live in different spaces");
  }
  if (std::fabs(grid.kernel_power() - p / 2.0) > 1e-12) {
    throw IncompatibleError("grid", "grid kernel power must equal p / 2");
  }
  const double q = p / 2.0;
  const bool even = is_even_integer(p);
  const int n = static_cast<int>(std::lround(q));
  std::vector<double> values;
  values.reserve(grid.size());
  for (const Complex& z : grid.nodes()) {
    const double a = std::norm(evaluate(f, z));
    double v;
    if (even) {
      v = 1.0;
      for (int k = 0; k < n; ++k) v *= a;
    } else {
      v = std::pow(a, q);
    }
    values.push_back(v);
  }
  return integrate_values(grid, std::span<const double>(values));
}

double lp_functional(const AnalyticState& f, double p, const GridOptions& options) {
  check_p(f.space(), p);
  return lp_functional(f, p, lp_grid(f.space(), p, f.degree(), options));
}

double lp_functional(const AnalyticState& f, double p, const QuadratureGrid& grid) {
  check_p(f.space(), p);
  require_unit(f);
  return lp_integral(f, p, grid);
}

double coherent_value(const PhaseSpace& space, double p) {
  check_p(space, p);
  const double b = space.beta();
  switch (space.kind()) {
    case Kind::Plane: return 2.0 / p;
    case Kind::Disc: return (b - 1.0) / (b * p / 2.0 - 1.0);
    case Kind::Sphere: return (2.0 * b + 1.0) / (b * p + 1.0);
  }
  return 0.0;
}

CheckReport burbea_check(const AnalyticState& f, const AnalyticState& h) {
  const AnalyticState fh = multiply(f, h);
  const double lhs = norm(fh);
  const double rhs = norm(f) * norm(h);
  std::ostringstream label;
  label << "burbea " << describe(f.space()) << " x " << describe(h.space());
  return make_report(label.str(), lhs, rhs, kEqualityTolerance * std::max(rhs, 1e-300));
}

CheckReport power_bound_check(const AnalyticState& f, int n, const GridOptions& options) {
  if (n < 1) throw DomainError("n", "power bound needs n >= 1");
  return power_bound_check(f, n, lp_grid(f.space(), 2.0 * n, f.degree(), options));
}

CheckReport power_bound_check(const AnalyticState& f, int n, const QuadratureGrid& grid) {
  if (n < 1) throw DomainError("n", "power bound needs n >= 1");
  check_p(f.space(), 2.0 * n);
  require_unit(f);
  const PhaseSpace& space = f.space();
  const double ratio = dimension(space) / dimension(space.with_beta(n * space.beta()));
  const double lhs = lp_integral(f, 2.0 * n, grid);
  const double power_norm = norm(power(f, n));
  std::ostringstream label;
  label << "power_bound " << describe(space) << " n=" << n;
  CheckReport r = make_report(label.str(), lhs, ratio, kEqualityTolerance * ratio);
  r.cross_check = power_norm * power_norm * ratio;
  return r;
}

}  // namespace coherent
