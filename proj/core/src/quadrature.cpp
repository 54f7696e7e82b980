#include "coherent/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "coherent/compensated_sum.hpp"
#include "coherent/error.hpp"
#include "coherent/gauss_rules.hpp"

namespace coherent {
namespace {

struct RadialRule {
  std::vector<double> u;  // |z|^2 at each radial node
  std::vector<double> w;  // weight of the u-integral, including measure and k^-q
  int exact_u_degree = 0; // polynomial residuals in u up to this degree are exact
};

// Snap exponents that are integral up to rounding (q beta from p / 2, etc.).
double snap_integer(double x) {
  const double r = std::round(x);
  return std::fabs(x - r) <= 1e-12 * std::max(1.0, std::fabs(x)) ? r : x;
}

RadialRule plane_rule(double qb, int order) {
  // Int_0^inf e^{-qb u} G(u) du = (1/qb) Int_0^inf e^{-t} G(t/qb) dt.
  const GaussRule g = gauss_laguerre(order, 0.0);
  RadialRule r;
  r.exact_u_degree = 2 * order - 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    r.u.push_back(g.nodes[i] / qb);
    r.w.push_back(g.weights[i] / qb);
  }
  return r;
}

RadialRule disc_rule(double qb, int order) {
  // density (1-u)^-2 times k^-q = (1-u)^{qb} gives (1-u)^{qb-2}.
  if (!(qb > 1.0)) {
    throw DivergentIntegralError(
        "q", "disc integral diverges at the boundary unless q * beta > 1");
  }
  const GaussRule g = gauss_jacobi_unit(order, qb - 2.0, 0.0);
  RadialRule r;
  r.exact_u_degree = 2 * order - 1;
  r.u = g.nodes;
  r.w = g.weights;
  return r;
}

RadialRule sphere_rule(double qb, int order) {
  // (1+u)^{-2} (1+u)^{-2qb} du = s^{2qb} ds with s = 1/(1+u). A residual u^a
  // becomes s^{2qb-a} (1-s)^a, a polynomial in s for a <= floor(2qb) times
  // s^{frac(2qb)}; the fractional power goes into the Jacobi weight.
  const double gamma = snap_integer(2.0 * qb);
  const double whole = std::floor(gamma);
  const double frac = gamma - whole;
  const int poly_degree = static_cast<int>(whole);
  if (poly_degree > 2 * order - 1) {
    throw DomainError("radial_order",
                      "sphere grid needs 2 * radial_order - 1 >= floor(2 q beta) = " +
                          std::to_string(poly_degree));
  }
  const GaussRule g = gauss_jacobi_unit(order, 0.0, frac);
  RadialRule r;
  r.exact_u_degree = poly_degree;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double s = g.nodes[i];
    r.u.push_back((1.0 - s) / s);
    r.w.push_back(g.weights[i] * std::pow(s, whole));
  }
  return r;
}

}  // namespace

QuadratureGrid build_grid(const PhaseSpace& space, double q, int radial_order,
                          int angular_order) {
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("q", "kernel power must be positive");
  if (radial_order < 1) throw DomainError("radial_order", "radial_order must be >= 1");
  if (angular_order < 1) throw DomainError("angular_order", "angular_order must be >= 1");

  const double qb = q * space.beta();
  RadialRule radial;
  switch (space.kind()) {
    case Kind::Plane: radial = plane_rule(qb, radial_order); break;
    case Kind::Disc: radial = disc_rule(qb, radial_order); break;
    case Kind::Sphere: radial = sphere_rule(qb, radial_order); break;
  }

  QuadratureGrid grid(space, q);
  grid.radial_order_ = radial_order;
  grid.angular_order_ = angular_order;
  // a = b terms need the radial rule; a != b terms vanish when |a - b| < M.
  grid.exact_degree_ = std::min(2 * radial.exact_u_degree, angular_order - 1);

  // dg = (1/pi) density dx dy = density du dtheta / (2 pi); the angular mean
  // absorbs the 1 / (2 pi).
  const double scale = dimension(space) / angular_order;
  const std::size_t total = radial.u.size() * static_cast<std::size_t>(angular_order);
  grid.nodes_.reserve(total);
  grid.weights_.reserve(total);
  for (std::size_t r = 0; r < radial.u.size(); ++r) {
    const double rho = std::sqrt(radial.u[r]);
    for (int a = 0; a < angular_order; ++a) {
      const double theta = 2.0 * std::numbers::pi * a / angular_order;
      grid.nodes_.push_back(std::polar(rho, theta));
      grid.weights_.push_back(scale * radial.w[r]);
    }
  }
  return grid;
}

Complex integrate_values(const QuadratureGrid& grid, std::span<const Complex> values) {
  if (values.size() != grid.size()) {
    throw DomainError("values", "value count does not match grid size");
  }
  const auto weights = grid.weights();
  ComplexCompensatedSum acc;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const Complex v = values[j];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericError(j, "non-finite integrand at node " + std::to_string(j));
    }
    acc.add(weights[j] * v);
  }
  return acc.result();
}

double integrate_values(const QuadratureGrid& grid, std::span<const double> values) {
  if (values.size() != grid.size()) {
    throw DomainError("values", "value count does not match grid size");
  }
  const auto weights = grid.weights();
  CompensatedSum acc;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (!std::isfinite(values[j])) {
      throw NumericError(j, "non-finite integrand at node " + std::to_string(j));
    }
    acc.add(weights[j] * values[j]);
  }
  return acc.result();
}

}  // namespace coherent
