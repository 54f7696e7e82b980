#pragma once

#include <optional>
#include <string>

#include "coherent/analytic_state.hpp"
#include "coherent/quadrature.hpp"

namespace coherent {

/// Relative tolerance used to declare an inequality tight.
inline constexpr double kEqualityTolerance = 1e-10;
/// Allowed deviation of ||f|| from 1 for functions that take unit vectors.
inline constexpr double kNormalizationTolerance = 1e-10;

/// One instance of an inequality lhs <= rhs.
struct CheckReport {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // rhs - lhs
  bool equality_attained = false;  // |gap| <= tolerance
  double tolerance = 0.0;
  /// Same lhs via an independent route, when the check computes one.
  std::optional<double> cross_check;
};

CheckReport make_report(std::string label, double lhs, double rhs, double tolerance);

/// Radial/angular orders for L^p integrals; zero selects the default.
struct GridOptions {
  int radial_order = 0;
  int angular_order = 0;
};

/// True when p is an even integer, i.e. |f|^p is a polynomial in z, conj(z).
bool is_even_integer(double p) noexcept;

/// Grid with q = p / 2 sized for |f|^p with deg f = degree. Defaults:
/// radial 64, angular 2 * ceil(degree * p / 2) + 4, both doubled when p is
/// not an even integer.
QuadratureGrid lp_grid(const PhaseSpace& space, double p, int degree,
                       const GridOptions& options = {});

/// P(z) = |f(z)|^2 k_beta(|z|^2)^-1 for a unit vector f.
/// Throws NormalizationError when ||f|| deviates from 1 by more than 1e-10.
double husimi(const AnalyticState& f, Complex z);

/// dim(beta) Int |f|^p k_beta^{-p/2} dg on a q = p/2 grid, with no
/// normalization requirement (homogeneous of degree p in f).
double lp_integral(const AnalyticState& f, double p, const QuadratureGrid& grid);

/// Lambda_p(f) = dim(beta) Int P^{p/2} dg for a unit vector f; the C(p)
/// candidate is Lambda_p^{1/p}. Requires p >= 2 and, on the Disc,
/// beta p / 2 > 1.
double lp_functional(const AnalyticState& f, double p, const GridOptions& options = {});
double lp_functional(const AnalyticState& f, double p, const QuadratureGrid& grid);

/// Lambda_p of any coherent state, in closed form: 2/p (Plane),
/// (beta - 1)/(beta p/2 - 1) (Disc), (2 beta + 1)/(beta p + 1) (Sphere).
double coherent_value(const PhaseSpace& space, double p);

/// ||f h||_{beta+beta'} <= ||f||_beta ||h||_beta'.
CheckReport burbea_check(const AnalyticState& f, const AnalyticState& h);

/// dim(beta) Int P^n dg <= dim(beta) / dim(n beta) for a unit vector f.
/// lhs comes from quadrature; cross_check holds ||f^n||^2 dim(beta)/dim(n beta).
CheckReport power_bound_check(const AnalyticState& f, int n, const GridOptions& options = {});
CheckReport power_bound_check(const AnalyticState& f, int n, const QuadratureGrid& grid);

}  // namespace coherent
