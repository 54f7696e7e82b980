#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coherent/analytic_state.hpp"
#include "coherent/functionals.hpp"
#include "coherent/quadrature.hpp"

namespace coherent {

/// Lambda_p restricted to polynomials of degree <= max_degree, written in the
/// orthonormal coordinates a_n = c_n ||z^n|| so that the unit sphere of H_beta
/// is the Euclidean unit sphere of C^{max_degree+1}.
class LpObjective {
 public:
  LpObjective(const PhaseSpace& space, double p, int max_degree, const GridOptions& options = {});

  const PhaseSpace& space() const noexcept { return grid_.space(); }
  double p() const noexcept { return p_; }
  int max_degree() const noexcept { return degree_; }
  const QuadratureGrid& grid() const noexcept { return grid_; }

  /// dim(beta) Int |f|^p k^{-p/2} dg; homogeneous of degree p, no normalization.
  double value(std::span<const Complex> coords) const;
  /// dLambda/dRe(a_n) + i dLambda/dIm(a_n)
  ///   = sum_j w_j p |f(z_j)|^{p-2} f(z_j) conj(e_n(z_j)).
  std::vector<Complex> gradient(std::span<const Complex> coords) const;

 private:
  std::vector<Complex> field(std::span<const Complex> coords) const;

  double p_;
  int degree_;
  QuadratureGrid grid_;
  // Node-major split storage of e_n(z_j) = z_j^n / ||z^n||.
  std::vector<double> basis_re_;
  std::vector<double> basis_im_;
};

struct OptimizerOptions {
  int max_iterations = 5000;
  double gradient_tolerance = 1e-8;
  GridOptions grid;
};

struct RestartRecord {
  int restart = 0;
  double value = 0.0;
  int iterations = 0;
  double gradient_norm = 0.0;
  bool converged = false;
};

/// Outcome of coherent_overlap: argmax w and max_w |(f, coherent_state(w))|.
struct CoherentOverlap {
  Complex w;
  double overlap = 0.0;
  bool clamped = false;  // Disc optimum pushed against |w| = 0.95
};

struct OptimizationResult {
  PhaseSpace space;
  double p = 0.0;
  double best_value = 0.0;
  double c_estimate = 0.0;  // best_value^{1/p}
  AnalyticState best_state;
  double coherent_overlap = 0.0;
  Complex nearest_w;
  bool overlap_clamped = false;
  int restarts = 0;
  int best_restart = 0;
  std::vector<int> iterations;  // per restart
  std::vector<RestartRecord> runs;
  bool converged = false;  // the winning restart met the gradient tolerance
};

/// Largest overlap radius searched on the Disc.
inline constexpr double kDiscOverlapRadius = 0.95;

/// max_w |(f, coherent_state(w))| = max_w |f(w)| k_beta(|w|^2)^{-1/2}, by
/// Nelder-Mead in (Re w, Im w) from 9 fixed starts. Requires ||f|| = 1.
CoherentOverlap coherent_overlap(const AnalyticState& f);

/// Projected gradient ascent of Lambda_p on the unit sphere from `start`,
/// with backtracking line search and renormalization after every step.
/// Throws DomainError for the zero state.
RestartRecord ascend(const LpObjective& objective, std::vector<Complex>& coords,
                     const OptimizerOptions& options = {});

/// Best of `restarts` ascents; restart 0 starts at the vacuum (the coherent
/// state at w = 0), the rest at seeded random states. Ties go to the lower
/// restart index.
OptimizationResult maximize_lp(const PhaseSpace& space, double p, int max_degree, int restarts,
                               std::uint64_t seed, const OptimizerOptions& options = {});

/// Single ascent from a caller-supplied state (any nonzero scale).
OptimizationResult maximize_from(const AnalyticState& start, double p,
                                 const OptimizerOptions& options = {});

struct ScanRow {
  double p = 0.0;
  double coherent_value = 0.0;  // closed form, NaN when p is out of domain
  double coherent_c = 0.0;      // coherent_value^{1/p}
  bool conjectural = false;     // p is not an even integer
  std::optional<OptimizationResult> result;
  std::string error;            // set when the row failed
};

/// maximize_lp for each p; failures are recorded per row and the scan continues.
std::vector<ScanRow> scan_p(const PhaseSpace& space, std::span<const double> p_values,
                            int max_degree, int restarts, std::uint64_t seed,
                            const OptimizerOptions& options = {});

/// Deterministic per-restart seed derived from the run seed.
std::uint64_t restart_seed(std::uint64_t seed, int restart) noexcept;

}  // namespace coherent
