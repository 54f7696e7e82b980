#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coherent/phase_space.hpp"

namespace coherent {

/// Truncation degree used for Plane and Disc coherent states.
inline constexpr int kDefaultTruncation = 40;
/// Largest normalization defect tolerated in a truncated coherent state.
inline constexpr double kCoherentTailTolerance = 1e-10;

/// A polynomial f(z) = sum_n coeffs[n] z^n viewed as an element of H_beta.
///
/// On the Sphere H_beta is exactly the polynomials of degree <= 2 beta; on
/// the Plane and Disc the polynomials are a dense subspace and are the only
/// elements represented here.
class AnalyticState {
 public:
  /// Throws DegreeBoundError when a Sphere state exceeds degree 2 beta, and
  /// DomainError for empty or non-finite coefficients.
  AnalyticState(PhaseSpace space, std::vector<Complex> coeffs);

  const PhaseSpace& space() const noexcept { return space_; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  /// Index of the last stored coefficient (not of the last nonzero one).
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  friend bool operator==(const AnalyticState&, const AnalyticState&) = default;

 private:
  PhaseSpace space_;
  std::vector<Complex> coeffs_;
};

/// k_beta(a): exp(beta a), (1 - a)^-beta (principal branch), (1 + a)^{2 beta}.
/// Throws DomainError on the Disc when |a| >= 1.
Complex kernel_value(const PhaseSpace& space, Complex a);

/// ||z^n||^2_beta in closed form: n!/beta^n, n! Gamma(beta)/Gamma(n + beta),
/// 1/binomial(2 beta, n). Evaluated as a running product of Gamma-function
/// ratios, so no factorial is ever formed.
double monomial_norm_sq(const PhaseSpace& space, int n);

/// monomial_norm_sq(space, n) for n = 0 .. max_degree.
std::vector<double> gram_diagonal(const PhaseSpace& space, int max_degree);

/// (f, h) = sum_n f_n conj(h_n) ||z^n||^2. Linear in f. Throws
/// IncompatibleError when the spaces differ.
Complex inner_product(const AnalyticState& f, const AnalyticState& h);
double norm(const AnalyticState& f);
AnalyticState normalized(const AnalyticState& f);

/// Horner evaluation; throws DomainError for z outside the phase space.
Complex evaluate(const AnalyticState& f, Complex z);

/// Unnormalized reproducing kernel at w: coefficients conj(w)^n / ||z^n||^2,
/// so that inner_product(f, kernel_state(w)) == f(w). Sphere uses the full
/// degree 2 beta; Plane and Disc stop at `truncation`.
AnalyticState kernel_state(const PhaseSpace& space, Complex w,
                           int truncation = kDefaultTruncation);

/// Normalized coherent state k_beta(conj(w) z) / k_beta(|w|^2)^{1/2}.
/// Plane and Disc expansions are truncated at `truncation` and refused with
/// DomainError when the discarded normalization mass exceeds
/// kCoherentTailTolerance.
AnalyticState coherent_state(const PhaseSpace& space, Complex w,
                             int truncation = kDefaultTruncation);

/// 1 - ||truncated coherent state||^2, summed directly over the discarded terms.
double coherent_truncation_tail(const PhaseSpace& space, Complex w, int truncation);

/// Pointwise product in H_{beta + beta'}; kinds must agree.
AnalyticState multiply(const AnalyticState& f, const AnalyticState& h);
/// f^n in H_{n beta}; power(f, 1) == f.
AnalyticState power(const AnalyticState& f, int n);

/// Seeded random unit vector of degree max_degree. Coordinates in the
/// orthonormal basis z^n / ||z^n|| are i.i.d. complex standard normal.
AnalyticState random_state(const PhaseSpace& space, int max_degree, std::uint64_t seed);

/// Coordinates a_n = c_n ||z^n|| in the orthonormal monomial basis, and back.
std::vector<Complex> orthonormal_coordinates(const AnalyticState& f);
AnalyticState from_orthonormal_coordinates(const PhaseSpace& space,
                                           std::span<const Complex> coords);

}  // namespace coherent
