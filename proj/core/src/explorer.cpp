#include "coherent/explorer.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <cmath>
#include <limits>
#include <numbers>

#include "coherent/compensated_sum.hpp"
#include "coherent/error.hpp"

namespace coherent {
namespace {

double euclidean_norm(std::span<const Complex> v) {
  CompensatedSum acc;
  for (const Complex& x : v) acc.add(std::norm(x));
  return std::sqrt(acc.result());
}

double real_dot(std::span<const Complex> a, std::span<const Complex> b) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add((std::conj(a[i]) * b[i]).real());
  return acc.result();
}

// (|f|^2)^{p/2} with a multiplication chain when p is an even integer.
double modulus_power(double modulus_sq, double p) {
  if (is_even_integer(p)) {
    double v = 1.0;
    for (long k = std::lround(p / 2.0); k > 0; --k) v *= modulus_sq;
    return v;
  }
  return std::pow(modulus_sq, p / 2.0);
}

void normalize_in_place(std::vector<Complex>& v) {
  const double n = euclidean_norm(v);
  for (Complex& x : v) x /= n;
}

// Nelder-Mead minimization in two dimensions.
using Point = std::array<double, 2>;

template <class F>
std::pair<Point, double> nelder_mead(F&& f, Point start, double step) {
  std::array<Point, 3> s = {start, Point{start[0] + step, start[1]}, Point{start[0], start[1] + step}};
  std::array<double, 3> v = {f(s[0]), f(s[1]), f(s[2])};
  for (int it = 0; it < 2000; ++it) {
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] < v[b]; });
    const int best = idx[0], mid = idx[1], worst = idx[2];
    const double size = std::max(std::hypot(s[mid][0] - s[best][0], s[mid][1] - s[best][1]),
                                 std::hypot(s[worst][0] - s[best][0], s[worst][1] - s[best][1]));
    if (v[worst] - v[best] <= 1e-16 && size <= 1e-10) break;
    if (size <= 1e-13) break;

    const Point c = {(s[best][0] + s[mid][0]) / 2.0, (s[best][1] + s[mid][1]) / 2.0};
    auto along = [&](double t) {
      return Point{c[0] + t * (s[worst][0] - c[0]), c[1] + t * (s[worst][1] - c[1])};
    };
    const Point r = along(-1.0);
    const double vr = f(r);
    if (vr < v[best]) {
      const Point e = along(-2.0);
      const double ve = f(e);
      if (ve < vr) {
        s[worst] = e;
        v[worst] = ve;
      } else {
        s[worst] = r;
        v[worst] = vr;
      }
    } else if (vr < v[mid]) {
      s[worst] = r;
      v[worst] = vr;
    } else {
      const Point k = vr < v[worst] ? along(-0.5) : along(0.5);
      const double vk = f(k);
      if (vk < std::min(vr, v[worst])) {
        s[worst] = k;
        v[worst] = vk;
      } else {
        for (int i : {mid, worst}) {
          s[i] = {s[best][0] + 0.5 * (s[i][0] - s[best][0]), s[best][1] + 0.5 * (s[i][1] - s[best][1])};
          v[i] = f(s[i]);
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (v[i] < v[best]) best = i;
  }
  return {s[best], v[best]};
}

OptimizationResult summarize(const PhaseSpace& space, double p, std::vector<RestartRecord> runs,
                             const std::vector<std::vector<Complex>>& finals) {
  int best = 0;
  for (int r = 1; r < static_cast<int>(runs.size()); ++r) {
    if (runs[r].value > runs[best].value) best = r;
  }
  AnalyticState state = from_orthonormal_coordinates(space, finals[best]);
  const CoherentOverlap ov = coherent_overlap(state);
  OptimizationResult res{.space = space,
                         .p = p,
                         .best_value = runs[best].value,
                         .c_estimate = std::pow(runs[best].value, 1.0 / p),
                         .best_state = std::move(state),
                         .coherent_overlap = ov.overlap,
                         .nearest_w = ov.w,
                         .overlap_clamped = ov.clamped,
                         .restarts = static_cast<int>(runs.size()),
                         .best_restart = best,
                         .iterations = {},
                         .runs = {},
                         .converged = runs[best].converged};
  for (const auto& r : runs) res.iterations.push_back(r.iterations);
  res.runs = std::move(runs);
  return res;
}

void check_lp_domain(const PhaseSpace& space, double p) {
  if (!(p >= 2.0) || !std::isfinite(p)) throw DomainError("p", "p must be >= 2");
  if (space.kind() == Kind::Disc && !(space.beta() * p / 2.0 > 1.0)) {
    throw DivergentIntegralError("p", "disc L^p integral diverges unless beta p / 2 > 1");
  }
}

constexpr int kRadialHeadroom = 4;
constexpr std::size_t kLbfgsMemory = 8;

}  // namespace

LpObjective::LpObjective(const PhaseSpace& space, double p, int max_degree, const GridOptions& options)
    : p_(p), degree_(max_degree), grid_([&] {
        check_lp_domain(space, p);
        if (max_degree < 0) throw DomainError("degree", "max_degree must be >= 0");
        if (space.kind() == Kind::Sphere && max_degree > space.sphere_degree()) {
          throw DegreeBoundError("degree", "sphere states have degree <= 2 beta");
        }
        GridOptions o = options;
        // For even p on the Plane and Disc, |f|^p is a polynomial of u-degree
        // (p/2) max_degree; a Gauss rule a few nodes past exactness integrates it
        // to rounding at a fraction of the default cost.
        if (o.radial_order == 0 && is_even_integer(p) && space.kind() != Kind::Sphere) {
          const int u_degree = static_cast<int>(std::lround(p / 2.0)) * max_degree;
          o.radial_order = std::min(kDefaultRadialOrder, u_degree / 2 + 1 + kRadialHeadroom);
        }
        return lp_grid(space, p, max_degree, o);
      }()) {
  const auto gram = gram_diagonal(space, degree_);
  const std::size_t width = static_cast<std::size_t>(degree_) + 1;
  basis_re_.resize(grid_.size() * width);
  basis_im_.resize(grid_.size() * width);
  for (std::size_t j = 0; j < grid_.size(); ++j) {
    const Complex z = grid_.nodes()[j];
    Complex zn = 1.0;
    for (std::size_t n = 0; n < width; ++n) {
      const Complex e = zn / std::sqrt(gram[n]);
      basis_re_[j * width + n] = e.real();
      basis_im_[j * width + n] = e.imag();
      zn *= z;
    }
  }
}

std::vector<Complex> LpObjective::field(std::span<const Complex> coords) const {
  const std::size_t width = static_cast<std::size_t>(degree_) + 1;
  if (coords.size() != width) throw DomainError("coeffs", "coordinate vector has the wrong length");
  // Real arithmetic throughout: std::complex products would route through
  // the NaN-recovering __muldc3.
  std::vector<Complex> f(grid_.size());
  for (std::size_t j = 0; j < grid_.size(); ++j) {
    const double* br = &basis_re_[j * width];
    const double* bi = &basis_im_[j * width];
    double sr = 0.0, si = 0.0;
    for (std::size_t n = 0; n < width; ++n) {
      const double cr = coords[n].real(), ci = coords[n].imag();
      sr += cr * br[n] - ci * bi[n];
      si += cr * bi[n] + ci * br[n];
    }
    f[j] = {sr, si};
  }
  return f;
}

double LpObjective::value(std::span<const Complex> coords) const {
  const auto f = field(coords);
  std::vector<double> values(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) values[j] = modulus_power(std::norm(f[j]), p_);
  return integrate_values(grid_, std::span<const double>(values));
}

std::vector<Complex> LpObjective::gradient(std::span<const Complex> coords) const {
  const auto f = field(coords);
  const std::size_t width = static_cast<std::size_t>(degree_) + 1;
  const auto weights = grid_.weights();
  std::vector<double> gr(width, 0.0), gi(width, 0.0);
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double a = std::norm(f[j]);
    const double factor = a > 0.0 || p_ == 2.0 ? modulus_power(a, p_ - 2.0) : 0.0;
    const double scale = weights[j] * p_ * factor;
    const double sr = scale * f[j].real(), si = scale * f[j].imag();
    const double* br = &basis_re_[j * width];
    const double* bi = &basis_im_[j * width];
    // s * conj(b)
    for (std::size_t n = 0; n < width; ++n) {
      gr[n] += sr * br[n] + si * bi[n];
      gi[n] += si * br[n] - sr * bi[n];
    }
  }
  std::vector<Complex> g(width);
  for (std::size_t n = 0; n < width; ++n) g[n] = {gr[n], gi[n]};
  return g;
}

CoherentOverlap coherent_overlap(const AnalyticState& f) {
  const double nf = norm(f);
  if (!(std::fabs(nf - 1.0) <= kNormalizationTolerance)) {
    throw NormalizationError("f", "coherent_overlap expects a unit vector");
  }
  const PhaseSpace& space = f.space();
  const bool disc = space.kind() == Kind::Disc;
  auto clamp = [&](Point p) {
    Complex w(p[0], p[1]);
    if (disc && std::abs(w) > kDiscOverlapRadius) w *= kDiscOverlapRadius / std::abs(w);
    return w;
  };
  auto overlap_at = [&](Complex w) {
    const double h = std::norm(evaluate(f, w)) * inverse_kernel_power(space, std::norm(w), 1.0);
    return std::sqrt(h);
  };
  auto objective = [&](Point p) { return -overlap_at(clamp(p)); };

  double ring = 0.0, step = 0.0;
  switch (space.kind()) {
    case Kind::Plane:
      ring = std::sqrt(std::max(1, f.degree()) / (2.0 * space.beta()));
      step = 0.5 / std::sqrt(space.beta());
      break;
    case Kind::Disc:
      ring = 0.5;
      step = 0.1;
      break;
    case Kind::Sphere:
      ring = 1.0;
      step = 0.5;
      break;
  }

  CoherentOverlap best{Complex(0.0, 0.0), -1.0, false};
  for (int s = 0; s < 9; ++s) {
    Point start = {0.0, 0.0};
    if (s > 0) {
      const double theta = 2.0 * std::numbers::pi * (s - 1) / 8.0;
      start = {ring * std::cos(theta), ring * std::sin(theta)};
    }
    const auto [pt, val] = nelder_mead(objective, start, step);
    if (-val > best.overlap) {
      best.w = clamp(pt);
      best.overlap = -val;
    }
  }
  best.clamped = disc && std::abs(best.w) >= kDiscOverlapRadius - 1e-9;
  best.overlap = std::min(best.overlap, 1.0);
  return best;
}

RestartRecord ascend(const LpObjective& objective, std::vector<Complex>& coords,
                     const OptimizerOptions& options) {
  const double start_norm = euclidean_norm(coords);
  if (!(start_norm > 0.0)) throw DomainError("start", "cannot optimize from the zero state");
  normalize_in_place(coords);

  const double p = objective.p();
  RestartRecord rec;
  double value = objective.value(coords);
  // Step 1 / (p Lambda) along the gradient lands on g / |g|, the fixed-point
  // map of a convex functional on the sphere. It seeds the quasi-Newton scale.
  const double power_step = 1.0 / (p * value);
  const std::size_t dim = coords.size();
  std::vector<Complex> tangent(dim), prev_tangent(dim), prev_coords(dim), candidate(dim), dir(dim);

  // Limited-memory BFGS pairs for -Lambda, carried between tangent spaces by
  // orthogonal projection.
  std::deque<std::pair<std::vector<Complex>, std::vector<Complex>>> memory;
  auto project = [&](std::vector<Complex>& v) {
    const double r = real_dot(coords, v);
    for (std::size_t n = 0; n < dim; ++n) v[n] -= r * coords[n];
  };

  int it = 0;
  for (;; ++it) {
    const auto g = objective.gradient(coords);
    const double radial = real_dot(coords, g);
    for (std::size_t n = 0; n < dim; ++n) tangent[n] = g[n] - radial * coords[n];
    const double gnorm = euclidean_norm(tangent);
    rec.gradient_norm = gnorm;
    if (gnorm < options.gradient_tolerance) {
      rec.converged = true;
      break;
    }
    if (it >= options.max_iterations) break;

    if (it > 0) {
      std::vector<Complex> s(dim), y(dim);
      for (std::size_t n = 0; n < dim; ++n) {
        s[n] = coords[n] - prev_coords[n];
        y[n] = prev_tangent[n] - tangent[n];
      }
      project(s);
      project(y);
      if (real_dot(s, y) > 1e-12 * euclidean_norm(s) * euclidean_norm(y)) {
        memory.emplace_back(std::move(s), std::move(y));
        if (memory.size() > kLbfgsMemory) memory.pop_front();
      }
    }

    bool accepted = false;
    for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
      if (attempt == 1) {
        if (memory.empty()) break;
        memory.clear();
      }
      dir = tangent;
      if (memory.empty()) {
        for (auto& d : dir) d *= power_step;
      } else {
        std::vector<double> alpha(memory.size());
        for (std::size_t i = memory.size(); i-- > 0;) {
          const auto& [s, y] = memory[i];
          alpha[i] = real_dot(s, dir) / real_dot(s, y);
          for (std::size_t n = 0; n < dim; ++n) dir[n] -= alpha[i] * y[n];
        }
        const auto& [s_last, y_last] = memory.back();
        const double gamma = real_dot(s_last, y_last) / real_dot(y_last, y_last);
        for (auto& d : dir) d *= gamma;
        for (std::size_t i = 0; i < memory.size(); ++i) {
          const auto& [s, y] = memory[i];
          const double b = real_dot(y, dir) / real_dot(s, y);
          for (std::size_t n = 0; n < dim; ++n) dir[n] += (alpha[i] - b) * s[n];
        }
        project(dir);
      }
      const double slope = real_dot(tangent, dir);
      if (!(slope > 0.0)) continue;

      double t = 1.0;
      for (int bt = 0; bt < 60; ++bt) {
        for (std::size_t n = 0; n < dim; ++n) candidate[n] = coords[n] + t * dir[n];
        normalize_in_place(candidate);
        const double cv = objective.value(candidate);
        if (cv >= value + 1e-4 * t * slope) {
          prev_coords = coords;
          prev_tangent = tangent;
          coords.swap(candidate);
          value = cv;
          accepted = true;
          break;
        }
        t *= 0.5;
      }
    }
    if (!accepted) break;  // no ascent left at working precision
  }
  rec.iterations = it;
  rec.value = value;
  return rec;
}

std::uint64_t restart_seed(std::uint64_t seed, int restart) noexcept {
  // splitmix64 finalizer over (seed, restart)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(restart) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

OptimizationResult maximize_lp(const PhaseSpace& space, double p, int max_degree, int restarts,
                               std::uint64_t seed, const OptimizerOptions& options) {
  if (restarts < 1) throw DomainError("restarts", "restarts must be >= 1");
  const LpObjective objective(space, p, max_degree, options.grid);

  std::vector<RestartRecord> runs;
  std::vector<std::vector<Complex>> finals;
  for (int r = 0; r < restarts; ++r) {
    std::vector<Complex> coords(max_degree + 1, 0.0);
    if (r == 0) {
      coords[0] = 1.0;
    } else {
      coords = orthonormal_coordinates(random_state(space, max_degree, restart_seed(seed, r)));
    }
    RestartRecord rec = ascend(objective, coords, options);
    rec.restart = r;
    runs.push_back(rec);
    finals.push_back(std::move(coords));
  }
  return summarize(space, p, std::move(runs), finals);
}

OptimizationResult maximize_from(const AnalyticState& start, double p, const OptimizerOptions& options) {
  const LpObjective objective(start.space(), p, start.degree(), options.grid);
  std::vector<Complex> coords = orthonormal_coordinates(start);
  RestartRecord rec = ascend(objective, coords, options);
  std::vector<std::vector<Complex>> finals{std::move(coords)};
  return summarize(start.space(), p, {rec}, finals);
}

std::vector<ScanRow> scan_p(const PhaseSpace& space, std::span<const double> p_values,
                            int max_degree, int restarts, std::uint64_t seed,
                            const OptimizerOptions& options) {
  std::vector<ScanRow> rows;
  for (double p : p_values) {
    ScanRow row;
    row.p = p;
    row.conjectural = !is_even_integer(p);
    row.coherent_value = std::numeric_limits<double>::quiet_NaN();
    row.coherent_c = std::numeric_limits<double>::quiet_NaN();
    try {
      row.coherent_value = coherent_value(space, p);
      row.coherent_c = std::pow(row.coherent_value, 1.0 / p);
      row.result = maximize_lp(space, p, max_degree, restarts, seed, options);
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace coherent
