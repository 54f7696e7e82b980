#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coherent/analytic_state.hpp"
#include "coherent/functionals.hpp"

namespace coherent {

/// Default Fock-space truncation for Heisenberg-group vectors.
inline constexpr int kDefaultFockTruncation = 64;

/// Vector of L^2(R) written in the orthonormal Fock (Hermite) basis, carrying
/// the representation parameter k of U_k. Only |k| matters.
class FockVector {
 public:
  FockVector(double k, std::vector<Complex> coeffs);

  double k() const noexcept { return k_; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  double k_;
  std::vector<Complex> coeffs_;
};

double norm(const FockVector& v);

/// <m| D(alpha) |n> for the displacement operator D(alpha) = exp(alpha a^+ - conj(alpha) a).
/// Computed as sqrt(n!/m!) alpha^{m-n} e^{-|alpha|^2/2} L_n^{(m-n)}(|alpha|^2)
/// for m >= n (and by symmetry otherwise), assembled in log-magnitude form.
Complex displacement_element(int m, int n, Complex alpha);

/// All <m|D(alpha)|n> for m <= rows, n <= cols, row-major ((rows+1) x (cols+1)).
/// With include_envelope = false the common factor e^{-|alpha|^2/2} is left out,
/// leaving a polynomial in alpha and conj(alpha).
std::vector<Complex> displacement_matrix(int rows, int cols, Complex alpha,
                                         bool include_envelope = true);

/// Phase-space point alpha = sqrt(|k|/2) (x + i y) that carries
/// |k| (2 pi)^-1 dx dy onto pi^-1 d^2 alpha.
Complex phase_point(double k, double x, double y) noexcept;

/// (h, U_k(x, y, t) f) up to the unimodular central phase:
/// sum_{m,n} conj(h_m) f_n <m|D(alpha)|n>. Throws IncompatibleError on k mismatch.
Complex matrix_coefficient(const FockVector& h, const FockVector& f, double x, double y);

/// (2/p)^{1/p}.
double sharp_constant(double p);

/// (|k| (2 pi)^-1 Int |(h, U_k f)|^p dx dy)^{1/p}, by Gauss-Laguerre x uniform
/// angle quadrature in the alpha plane with e^{-p|alpha|^2/2} in the weights.
/// Requires p >= 2 (DomainError otherwise).
double lp_matrix_norm(const FockVector& h, const FockVector& f, double p,
                      const GridOptions& options = {});

/// Glauber coherent state D(w)|0> truncated at `truncation`; refuses w whose
/// Poisson tail beyond the truncation exceeds kCoherentTailTolerance.
FockVector coherent_fock(double k, Complex w, int truncation = kDefaultFockTruncation);

/// Seeded unit vector with i.i.d. complex standard normal Fock coordinates.
FockVector random_fock(double k, int truncation, std::uint64_t seed);

/// Bargmann image F(z) = sum_n h_n z^n / sqrt(n!) in H_1 on the Plane, an
/// isometry with |(h, D(alpha)|0>)|^2 = husimi(F, conj(alpha)) for unit h.
AnalyticState bargmann_image(const FockVector& h);

/// 1 - sum_{m <= truncation} |<m|D(alpha)|n>|^2.
double displacement_column_tail(int n, Complex alpha, int truncation);

}  // namespace coherent
