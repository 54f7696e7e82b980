#include "coherent/analytic_state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "coherent/compensated_sum.hpp"
#include "coherent/error.hpp"

namespace coherent {
namespace {

// ||z^n||^2 / ||z^{n-1}||^2.
double norm_ratio(const PhaseSpace& space, int n) {
  const double b = space.beta();
  switch (space.kind()) {
    case Kind::Plane: return n / b;
    case Kind::Disc: return n / (n - 1 + b);
    case Kind::Sphere: return n / (2.0 * b - n + 1.0);
  }
  return 0.0;
}

void check_degree(const PhaseSpace& space, int n) {
  if (n < 0) throw DegreeBoundError("n", "monomial degree must be >= 0");
  if (space.kind() == Kind::Sphere && n > space.sphere_degree()) {
    throw DegreeBoundError("n", "sphere states have degree <= 2 beta = " +
                                    std::to_string(space.sphere_degree()));
  }
}

void require_same_space(const AnalyticState& f, const AnalyticState& h) {
  if (f.space() != h.space()) {
    throw IncompatibleError("space", "states live in different spaces: " +
                                         describe(f.space()) + " vs " + describe(h.space()));
  }
}

int effective_truncation(const PhaseSpace& space, int truncation) {
  if (space.kind() == Kind::Sphere) return space.sphere_degree();
  if (truncation < 0) throw DomainError("truncation", "truncation degree must be >= 0");
  return truncation;
}

// conj(w)^n / ||z^n||^2 * scale for n = 0 .. degree.
std::vector<Complex> kernel_coefficients(const PhaseSpace& space, Complex w, int degree,
                                         double scale) {
  std::vector<Complex> c(degree + 1);
  c[0] = scale;
  const Complex wbar = std::conj(w);
  for (int n = 1; n <= degree; ++n) c[n] = c[n - 1] * wbar / norm_ratio(space, n);
  return c;
}

}  // namespace

AnalyticState::AnalyticState(PhaseSpace space, std::vector<Complex> coeffs)
    : space_(space), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("coeffs", "a state needs at least one coefficient");
  if (space_.kind() == Kind::Sphere && degree() > space_.sphere_degree()) {
    throw DegreeBoundError("coeffs", "sphere states have degree <= 2 beta = " +
                                         std::to_string(space_.sphere_degree()));
  }
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("coeffs", "coefficients must be finite");
    }
  }
}

Complex kernel_value(const PhaseSpace& space, Complex a) {
  const double b = space.beta();
  switch (space.kind()) {
    case Kind::Plane: return std::exp(b * a);
    case Kind::Disc:
      if (!(std::abs(a) < 1.0)) {
        throw DomainError("a", "disc kernel (1 - a)^-beta requires |a| < 1");
      }
      return std::pow(1.0 - a, -b);
    case Kind::Sphere: {
      Complex result = 1.0;
      const Complex base = 1.0 + a;
      for (int k = 0; k < space.sphere_degree(); ++k) result *= base;
      return result;
    }
  }
  return 0.0;
}

double monomial_norm_sq(const PhaseSpace& space, int n) {
  check_degree(space, n);
  double m = 1.0;
  for (int k = 1; k <= n; ++k) m *= norm_ratio(space, k);
  return m;
}

std::vector<double> gram_diagonal(const PhaseSpace& space, int max_degree) {
  check_degree(space, max_degree);
  std::vector<double> m(max_degree + 1);
  m[0] = 1.0;
  for (int k = 1; k <= max_degree; ++k) m[k] = m[k - 1] * norm_ratio(space, k);
  return m;
}

Complex inner_product(const AnalyticState& f, const AnalyticState& h) {
  require_same_space(f, h);
  const int top = std::min(f.degree(), h.degree());
  const auto gram = gram_diagonal(f.space(), top);
  ComplexCompensatedSum acc;
  for (int n = 0; n <= top; ++n) acc.add(f.coeffs()[n] * std::conj(h.coeffs()[n]) * gram[n]);
  return acc.result();
}

double norm(const AnalyticState& f) {
  const auto gram = gram_diagonal(f.space(), f.degree());
  CompensatedSum acc;
  for (int n = 0; n <= f.degree(); ++n) acc.add(std::norm(f.coeffs()[n]) * gram[n]);
  return std::sqrt(acc.result());
}

AnalyticState normalized(const AnalyticState& f) {
  const double nf = norm(f);
  if (!(nf > 0.0)) throw DomainError("f", "cannot normalize the zero state");
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  for (Complex& x : c) x /= nf;
  return {f.space(), std::move(c)};
}

Complex evaluate(const AnalyticState& f, Complex z) {
  if (!f.space().contains(z)) throw DomainError("z", "point lies outside the phase space");
  Complex acc = 0.0;
  for (int n = f.degree(); n >= 0; --n) acc = acc * z + f.coeffs()[n];
  return acc;
}

AnalyticState kernel_state(const PhaseSpace& space, Complex w, int truncation) {
  if (!space.contains(w)) throw DomainError("w", "kernel point lies outside the phase space");
  return {space, kernel_coefficients(space, w, effective_truncation(space, truncation), 1.0)};
}

double coherent_truncation_tail(const PhaseSpace& space, Complex w, int truncation) {
  if (!space.contains(w)) throw DomainError("w", "coherent point lies outside the phase space");
  const int top = effective_truncation(space, truncation);
  if (space.kind() == Kind::Sphere) return 0.0;
  // term_n = x^n / ||z^n||^2 / k(x): Poisson (Plane) or negative-binomial
  // (Disc) probabilities in n.
  const double x = std::norm(w);
  double term = inverse_kernel_power(space, x, 1.0);
  double tail = 0.0;
  for (int n = 1; n < 1'000'000; ++n) {
    term *= x / norm_ratio(space, n);
    if (n > top) {
      tail += term;
      // Past the mode the terms decay geometrically.
      const double next_ratio = x / norm_ratio(space, n + 1);
      if (next_ratio < 1.0 && term <= 1e-18 * std::max(tail, 1e-300)) break;
      if (term == 0.0 && next_ratio < 1.0) break;
    }
  }
  return tail;
}

AnalyticState coherent_state(const PhaseSpace& space, Complex w, int truncation) {
  const int top = effective_truncation(space, truncation);
  const double tail = coherent_truncation_tail(space, w, top);
  if (tail > kCoherentTailTolerance) {
    throw DomainError("w", "coherent state at |w| = " + std::to_string(std::abs(w)) +
                               " loses " + std::to_string(tail) +
                               " of its norm at truncation degree " + std::to_string(top));
  }
  const double scale = inverse_kernel_power(space, std::norm(w), 0.5);
  return {space, kernel_coefficients(space, w, top, scale)};
}

AnalyticState multiply(const AnalyticState& f, const AnalyticState& h) {
  if (f.space().kind() != h.space().kind()) {
    throw IncompatibleError("space", "cannot multiply states of different kinds");
  }
  const PhaseSpace target = f.space().with_beta(f.space().beta() + h.space().beta());
  std::vector<Complex> c(f.coeffs().size() + h.coeffs().size() - 1, 0.0);
  for (int i = 0; i <= f.degree(); ++i) {
    for (int j = 0; j <= h.degree(); ++j) c[i + j] += f.coeffs()[i] * h.coeffs()[j];
  }
  return {target, std::move(c)};
}

AnalyticState power(const AnalyticState& f, int n) {
  if (n < 1) throw DomainError("n", "power requires n >= 1");
  AnalyticState result = f;
  for (int k = 1; k < n; ++k) result = multiply(result, f);
  return result;
}

AnalyticState random_state(const PhaseSpace& space, int max_degree, std::uint64_t seed) {
  check_degree(space, max_degree);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<Complex> a(max_degree + 1);
  for (Complex& x : a) {
    const double re = normal(gen);
    const double im = normal(gen);
    x = {re, im};
  }
  return normalized(from_orthonormal_coordinates(space, a));
}

std::vector<Complex> orthonormal_coordinates(const AnalyticState& f) {
  const auto gram = gram_diagonal(f.space(), f.degree());
  std::vector<Complex> a(f.coeffs().size());
  for (std::size_t n = 0; n < a.size(); ++n) a[n] = f.coeffs()[n] * std::sqrt(gram[n]);
  return a;
}

AnalyticState from_orthonormal_coordinates(const PhaseSpace& space,
                                           std::span<const Complex> coords) {
  if (coords.empty()) throw DomainError("coeffs", "a state needs at least one coefficient");
  const auto gram = gram_diagonal(space, static_cast<int>(coords.size()) - 1);
  std::vector<Complex> c(coords.size());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = coords[n] / std::sqrt(gram[n]);
  return {space, std::move(c)};
}

}  // namespace coherent
