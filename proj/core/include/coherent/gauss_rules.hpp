#pragma once

#include <vector>

namespace coherent {

/// A one-dimensional Gaussian rule: sum_i weights[i] * g(nodes[i]) integrates
/// polynomials of degree <= 2 * size() - 1 exactly against its weight function.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Generalized Gauss-Laguerre rule for x^alpha e^-x on [0, inf). alpha > -1.
GaussRule gauss_laguerre(int order, double alpha = 0.0);

/// Gauss-Jacobi rule on [0, 1] for (1 - u)^a u^b. a, b > -1.
GaussRule gauss_jacobi_unit(int order, double a, double b = 0.0);

}  // namespace coherent
