#pragma once

#include <complex>
#include <span>
#include <vector>

#include "coherent/phase_space.hpp"

namespace coherent {

inline constexpr int kDefaultRadialOrder = 64;

/// Product rule for weighted invariant integrals
///
///   integrate(grid, g)  ~=  dim(beta) * Int_Delta g(z) k_beta(|z|^2)^(-q) dg(z).
///
/// The weight k_beta^(-q) and the measure density are folded into the node
/// weights, so callers pass only the smooth residual factor g. The radial
/// variable is u = |z|^2; the angular part is the uniform M-point rule.
///
/// Nodes are stored radial-major: node r * angular_order + a sits at
/// sqrt(u_r) e^{2 pi i a / M}.
class QuadratureGrid {
 public:
  const PhaseSpace& space() const noexcept { return space_; }
  double kernel_power() const noexcept { return q_; }
  int radial_order() const noexcept { return radial_order_; }
  int angular_order() const noexcept { return angular_order_; }
  /// Every z^a conj(z)^b with a + b <= exact_degree() integrates exactly
  /// (up to rounding).
  int exact_degree() const noexcept { return exact_degree_; }

  std::span<const Complex> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  friend QuadratureGrid build_grid(const PhaseSpace&, double, int, int);

 private:
  QuadratureGrid(PhaseSpace space, double q) : space_(space), q_(q) {}

  PhaseSpace space_;
  double q_;
  int radial_order_ = 0;
  int angular_order_ = 0;
  int exact_degree_ = 0;
  std::vector<Complex> nodes_;
  std::vector<double> weights_;
};

/// Builds the product grid. Radial rules in u = |z|^2:
///   Plane   generalized Gauss-Laguerre, weight e^{-q beta u};
///   Disc    Gauss-Jacobi on [0, 1], weight (1 - u)^{q beta - 2};
///   Sphere  Gauss-Jacobi in s = 1 / (1 + u) on (0, 1], weight s^{2 q beta}.
/// Throws DivergentIntegralError when the weight is not integrable
/// (Disc with q beta <= 1) and DomainError for bad orders.
QuadratureGrid build_grid(const PhaseSpace& space, double q, int radial_order,
                          int angular_order);

/// Sum_j w_j values[j] in node order with compensated accumulation.
/// Throws NumericError naming the first node whose value is not finite.
Complex integrate_values(const QuadratureGrid& grid, std::span<const Complex> values);
double integrate_values(const QuadratureGrid& grid, std::span<const double> values);

/// Gathers g at every node, then reduces in fixed order.
template <class F>
auto integrate(const QuadratureGrid& grid, F&& g) {
  using R = std::decay_t<decltype(g(Complex{}))>;
  std::vector<R> values;
  values.reserve(grid.size());
  for (const Complex& z : grid.nodes()) values.push_back(static_cast<R>(g(z)));
  return integrate_values(grid, std::span<const R>(values));
}

}  // namespace coherent
