#include "coherent/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "coherent/compensated_sum.hpp"
#include "coherent/error.hpp"

namespace coherent {
namespace {

constexpr double kRescale = 1e150;

std::vector<double> log_factorials(int n) {
  std::vector<double> lf(n + 1, 0.0);
  for (int j = 1; j <= n; ++j) lf[j] = lf[j - 1] + std::log(static_cast<double>(j));
  return lf;
}

// Walks one diagonal m - n = +-d of the displacement matrix. For k = 0 .. count-1
// emits the entry with the smaller index equal to k:
//   sqrt(k!/(k+d)!) |alpha|^d [e^{-x/2}] L_k^{(d)}(x) * phase.
template <class Emit>
void walk_diagonal(int d, int count, double x, double log_abs_alpha, Complex phase,
                   bool include_envelope, const std::vector<double>& lf, Emit&& emit) {
  const double base = d * log_abs_alpha - (include_envelope ? 0.5 * x : 0.0);
  // Running magnitude sqrt(k!/(k+d)!) |alpha|^d [e^{-x/2}]; the log form takes
  // over once it or the Laguerre value leaves the comfortable double range.
  const double log_c0 = base - 0.5 * lf[d];
  const bool direct = std::fabs(log_c0) < 300.0;
  double c = direct ? std::exp(log_c0) : 0.0;
  double l_prev = 0.0;
  double l = 1.0;
  double log_scale = 0.0;
  for (int k = 0; k < count; ++k) {
    if (k == 1) {
      l_prev = l;
      l = (1.0 + d - x) * l_prev;
    } else if (k > 1) {
      const double next = ((2.0 * (k - 1) + 1.0 + d - x) * l - (k - 1 + d) * l_prev) / k;
      l_prev = l;
      l = next;
    }
    if (k > 0) c *= std::sqrt(static_cast<double>(k) / (k + d));
    if (std::fabs(l) > kRescale) {
      l /= kRescale;
      l_prev /= kRescale;
      log_scale += std::log(kRescale);
    }
    Complex value = 0.0;
    if (direct && log_scale == 0.0 && c > 1e-290) {
      value = (c * l) * phase;
    } else if (l != 0.0) {
      const double log_mag = base + 0.5 * (lf[k] - lf[k + d]) + std::log(std::fabs(l)) + log_scale;
      value = (l < 0.0 ? -1.0 : 1.0) * std::exp(log_mag) * phase;
    }
    emit(k, value);
  }
}

void require_same_k(const FockVector& h, const FockVector& f) {
  if (std::fabs(std::fabs(h.k()) - std::fabs(f.k())) > 1e-14 * std::fabs(h.k())) {
    throw IncompatibleError("k", "vectors belong to representations with different |k|");
  }
}

}  // namespace

FockVector::FockVector(double k, std::vector<Complex> coeffs) : k_(k), coeffs_(std::move(coeffs)) {
  if (!(std::fabs(k) > 0.0) || !std::isfinite(k)) {
    throw DomainError("k", "representation parameter must be finite and nonzero");
  }
  if (coeffs_.empty()) throw DomainError("coeffs", "a Fock vector needs at least one coefficient");
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("coeffs", "coefficients must be finite");
    }
  }
}

double norm(const FockVector& v) {
  CompensatedSum acc;
  for (const Complex& c : v.coeffs()) acc.add(std::norm(c));
  return std::sqrt(acc.result());
}

std::vector<Complex> displacement_matrix(int rows, int cols, Complex alpha, bool include_envelope) {
  if (rows < 0 || cols < 0) throw DomainError("m", "Fock indices must be >= 0");
  const int nr = rows + 1;
  const int nc = cols + 1;
  std::vector<Complex> out(static_cast<std::size_t>(nr) * nc, 0.0);
  if (alpha == Complex(0.0, 0.0)) {
    for (int i = 0; i < std::min(nr, nc); ++i) out[static_cast<std::size_t>(i) * nc + i] = 1.0;
    return out;
  }
  const double x = std::norm(alpha);
  const double log_abs = 0.5 * std::log(x);
  const double theta = std::arg(alpha);
  const auto lf = log_factorials(rows + cols + 1);

  // m = k + d, n = k: phase e^{i d theta}.
  for (int d = 0; d <= rows; ++d) {
    const int count = std::min(rows - d, cols) + 1;
    if (count <= 0) continue;
    walk_diagonal(d, count, x, log_abs, std::polar(1.0, d * theta), include_envelope, lf,
                  [&](int k, Complex v) { out[static_cast<std::size_t>(k + d) * nc + k] = v; });
  }
  // m = k, n = k + d: sqrt(m!/n!) (-conj alpha)^d e^{-x/2} L_m^{(d)}(x).
  for (int d = 1; d <= cols; ++d) {
    const int count = std::min(cols - d, rows) + 1;
    if (count <= 0) continue;
    walk_diagonal(d, count, x, log_abs, std::polar(1.0, d * (std::numbers::pi - theta)),
                  include_envelope, lf,
                  [&](int k, Complex v) { out[static_cast<std::size_t>(k) * nc + k + d] = v; });
  }
  return out;
}

Complex displacement_element(int m, int n, Complex alpha) {
  if (m < 0 || n < 0) throw DomainError("m", "Fock indices must be >= 0");
  if (alpha == Complex(0.0, 0.0)) return m == n ? 1.0 : 0.0;
  const double x = std::norm(alpha);
  const int d = std::abs(m - n);
  const int k = std::min(m, n);
  const double theta = m >= n ? d * std::arg(alpha) : d * (std::numbers::pi - std::arg(alpha));
  const auto lf = log_factorials(m + n + 1);
  Complex result = 0.0;
  walk_diagonal(d, k + 1, x, 0.5 * std::log(x), std::polar(1.0, theta), true, lf,
                [&](int j, Complex v) {
                  if (j == k) result = v;
                });
  return result;
}

Complex phase_point(double k, double x, double y) noexcept {
  return std::sqrt(std::fabs(k) / 2.0) * Complex(x, y);
}

Complex matrix_coefficient(const FockVector& h, const FockVector& f, double x, double y) {
  require_same_k(h, f);
  const int rows = h.truncation();
  const int cols = f.truncation();
  const auto d = displacement_matrix(rows, cols, phase_point(h.k(), x, y), true);
  ComplexCompensatedSum acc;
  for (int m = 0; m <= rows; ++m) {
    Complex row = 0.0;
    for (int n = 0; n <= cols; ++n) row += d[static_cast<std::size_t>(m) * (cols + 1) + n] * f.coeffs()[n];
    acc.add(std::conj(h.coeffs()[m]) * row);
  }
  return acc.result();
}

double sharp_constant(double p) { return std::pow(2.0 / p, 1.0 / p); }

double lp_matrix_norm(const FockVector& h, const FockVector& f, double p, const GridOptions& options) {
  require_same_k(h, f);
  if (!(p >= 2.0) || !std::isfinite(p)) {
    throw DomainError("p", "matrix-coefficient L^p norms are taken for p >= 2");
  }
  const int rows = h.truncation();
  const int cols = f.truncation();
  // In alpha the measure is pi^-1 d^2 alpha and |(h, D f)|^p carries
  // e^{-p|alpha|^2/2}: exactly the Plane beta = 1 weight with q = p/2.
  const QuadratureGrid grid = lp_grid(PhaseSpace::plane(1.0), p, rows + cols, options);
  const bool even = is_even_integer(p);
  const int half = static_cast<int>(std::lround(p / 2.0));
  std::vector<double> values;
  values.reserve(grid.size());
  for (const Complex& alpha : grid.nodes()) {
    const auto d = displacement_matrix(rows, cols, alpha, false);
    Complex s = 0.0;
    for (int m = 0; m <= rows; ++m) {
      Complex row = 0.0;
      for (int n = 0; n <= cols; ++n) row += d[static_cast<std::size_t>(m) * (cols + 1) + n] * f.coeffs()[n];
      s += std::conj(h.coeffs()[m]) * row;
    }
    const double a = std::norm(s);
    double v = 1.0;
    if (even) {
      for (int j = 0; j < half; ++j) v *= a;
    } else {
      v = std::pow(a, p / 2.0);
    }
    values.push_back(v);
  }
  return std::pow(integrate_values(grid, std::span<const double>(values)), 1.0 / p);
}

FockVector coherent_fock(double k, Complex w, int truncation) {
  const PhaseSpace unit_plane = PhaseSpace::plane(1.0);
  const double tail = coherent_truncation_tail(unit_plane, w, truncation);
  if (tail > kCoherentTailTolerance) {
    throw DomainError("w", "coherent Fock vector at |w| = " + std::to_string(std::abs(w)) +
                               " is not resolved at truncation " + std::to_string(truncation));
  }
  std::vector<Complex> c(truncation + 1);
  c[0] = std::exp(-0.5 * std::norm(w));
  for (int n = 1; n <= truncation; ++n) c[n] = c[n - 1] * w / std::sqrt(static_cast<double>(n));
  return {k, std::move(c)};
}

FockVector random_fock(double k, int truncation, std::uint64_t seed) {
  if (truncation < 0) throw DomainError("truncation", "truncation must be >= 0");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<Complex> c(truncation + 1);
  for (Complex& x : c) {
    const double re = normal(gen);
    const double im = normal(gen);
    x = {re, im};
  }
  const FockVector raw(k, c);
  const double nv = norm(raw);
  for (Complex& x : c) x /= nv;
  return {k, std::move(c)};
}

AnalyticState bargmann_image(const FockVector& h) {
  const PhaseSpace space = PhaseSpace::plane(1.0);
  return from_orthonormal_coordinates(space, h.coeffs());
}

double displacement_column_tail(int n, Complex alpha, int truncation) {
  const auto d = displacement_matrix(truncation, n, alpha, true);
  CompensatedSum acc;
  for (int m = 0; m <= truncation; ++m) acc.add(std::norm(d[static_cast<std::size_t>(m) * (n + 1) + n]));
  return 1.0 - acc.result();
}

}  // namespace coherent
