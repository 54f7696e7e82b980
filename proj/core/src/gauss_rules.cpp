#include "coherent/gauss_rules.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "coherent/error.hpp"

namespace coherent {
namespace {

// Three-term recurrence of the monic orthogonal polynomials
//   pi_{k+1}(x) = (x - alpha_k) pi_k(x) - beta_k pi_{k-1}(x)
// plus the zeroth moment mu0 of the weight.
struct Recurrence {
  std::vector<double> alpha;  // k = 0 .. n-1
  std::vector<double> beta;   // k = 0 .. n-1, beta[0] unused
  double mu0 = 0.0;
};

constexpr double kRescale = 1e150;

// Monic pi_n and its derivative at x, jointly rescaled (only the ratio is used).
double newton_ratio(const Recurrence& rec, int n, double x) {
  double p_prev = 0.0, p = 1.0;
  double d_prev = 0.0, d = 0.0;
  for (int k = 0; k < n; ++k) {
    const double b = k == 0 ? 0.0 : rec.beta[k];
    const double p_next = (x - rec.alpha[k]) * p - b * p_prev;
    const double d_next = p + (x - rec.alpha[k]) * d - b * d_prev;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    if (std::fabs(p) > kRescale || std::fabs(d) > kRescale) {
      p /= kRescale;
      p_prev /= kRescale;
      d /= kRescale;
      d_prev /= kRescale;
    }
  }
  return p / d;
}

// Christoffel number 1 / sum_{k<n} p_k(x)^2 with p_k orthonormal. All terms
// are positive, so the weight keeps full relative accuracy even when tiny.
double christoffel_weight(const Recurrence& rec, int n, double x) {
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(rec.mu0);
  double sum = p * p;
  double log_scale = 0.0;  // true p_k = stored * exp(log_scale)
  for (int k = 0; k + 1 < n; ++k) {
    const double sb_next = std::sqrt(rec.beta[k + 1]);
    const double sb = k == 0 ? 0.0 : std::sqrt(rec.beta[k]);
    const double p_next = ((x - rec.alpha[k]) * p - sb * p_prev) / sb_next;
    p_prev = p;
    p = p_next;
    sum += p * p;
    if (std::fabs(p) > kRescale) {
      p /= kRescale;
      p_prev /= kRescale;
      sum /= kRescale * kRescale;
      log_scale += std::log(kRescale);
    }
  }
  return std::exp(-2.0 * log_scale) / sum;
}

GaussRule golub_welsch(const Recurrence& rec, int n) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag[k] = rec.alpha[k];
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(rec.beta[k]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError(0, "tridiagonal eigensolver failed to converge");
  }

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[i];
    for (int it = 0; it < 8; ++it) {
      const double dx = newton_ratio(rec, n, x);
      x -= dx;
      if (std::fabs(dx) <= 4e-16 * std::fabs(x)) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = christoffel_weight(rec, n, x);
  }
  return rule;
}

void check_order(int order) {
  if (order < 1) throw DomainError("radial_order", "quadrature order must be >= 1");
}

}  // namespace

GaussRule gauss_laguerre(int order, double alpha) {
  check_order(order);
  if (!(alpha > -1.0)) throw DivergentIntegralError("alpha", "Laguerre weight needs alpha > -1");
  Recurrence rec;
  rec.alpha.resize(order);
  rec.beta.resize(order);
  for (int k = 0; k < order; ++k) {
    rec.alpha[k] = 2.0 * k + alpha + 1.0;
    rec.beta[k] = k * (k + alpha);
  }
  rec.mu0 = std::tgamma(alpha + 1.0);
  return golub_welsch(rec, order);
}

GaussRule gauss_jacobi_unit(int order, double a, double b) {
  check_order(order);
  if (!(a > -1.0) || !(b > -1.0)) {
    throw DivergentIntegralError("alpha", "Jacobi weight needs exponents > -1");
  }
  // Standard Jacobi recurrence on [-1, 1] for (1-x)^a (1+x)^b, then shifted
  // to u = (1 + x) / 2.
  Recurrence rec;
  rec.alpha.resize(order);
  rec.beta.resize(order);
  const double s = a + b;
  for (int k = 0; k < order; ++k) {
    double ak;
    if (k == 0) {
      ak = (b - a) / (s + 2.0);
    } else {
      ak = (b * b - a * a) / ((2.0 * k + s) * (2.0 * k + s + 2.0));
    }
    rec.alpha[k] = 0.5 * (1.0 + ak);
    double bk = 0.0;
    if (k == 1) {
      bk = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
    } else if (k > 1) {
      const double t = 2.0 * k + s;
      bk = 4.0 * k * (k + a) * (k + b) * (k + s) / (t * t * (t + 1.0) * (t - 1.0));
    }
    rec.beta[k] = 0.25 * bk;
  }
  rec.mu0 = std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(s + 2.0));
  return golub_welsch(rec, order);
}

}  // namespace coherent
