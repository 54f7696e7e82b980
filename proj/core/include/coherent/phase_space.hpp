#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace coherent {

using Complex = std::complex<double>;

/// The three homogeneous phase spaces: the complex plane (Heisenberg group),
/// the open unit disc (SU(1,1)) and the Riemann sphere in its stereographic
/// chart (SU(2)).
enum class Kind { Plane, Disc, Sphere };

std::string_view to_string(Kind kind) noexcept;
/// Parses "plane" | "disc" | "sphere"; throws DomainError otherwise.
Kind kind_from_string(std::string_view name);

/// A phase space together with its representation parameter beta.
///
/// Construction validates beta: Plane needs beta > 0, Disc beta > 1 and
/// Sphere a positive half-integer (2 beta integral to within 1e-12; the
/// stored value is snapped to the exact half-integer).
class PhaseSpace {
 public:
  PhaseSpace(Kind kind, double beta);

  static PhaseSpace plane(double beta) { return {Kind::Plane, beta}; }
  static PhaseSpace disc(double beta) { return {Kind::Disc, beta}; }
  static PhaseSpace sphere(double beta) { return {Kind::Sphere, beta}; }

  Kind kind() const noexcept { return kind_; }
  double beta() const noexcept { return beta_; }

  /// Same kind, different parameter.
  PhaseSpace with_beta(double beta) const { return {kind_, beta}; }

  /// True when z lies in the open domain (always true off the Disc).
  bool contains(Complex z) const noexcept;

  /// Sphere only: 2 beta, the top polynomial degree of H_beta.
  int sphere_degree() const noexcept;

  friend bool operator==(const PhaseSpace&, const PhaseSpace&) = default;

 private:
  Kind kind_;
  double beta_;
};

std::string describe(const PhaseSpace& space);

/// Generalized dimension: beta (Plane), beta - 1 (Disc), 2 beta + 1 (Sphere).
double dimension(const PhaseSpace& space) noexcept;

/// Density of the invariant measure with respect to dx dy:
/// 1/pi, (1/pi)(1 - |z|^2)^-2, (1/pi)(1 + |z|^2)^-2.
/// Throws DomainError for Disc points with |z| >= 1.
double measure_density(const PhaseSpace& space, Complex z);

/// k_beta(u)^(-q) for real u = |z|^2 >= 0, evaluated without forming
/// k_beta(u) (which overflows on the Plane long before its inverse underflows).
double inverse_kernel_power(const PhaseSpace& space, double u, double q);

}  // namespace coherent
