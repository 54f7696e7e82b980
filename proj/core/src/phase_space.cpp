#include "coherent/phase_space.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "coherent/error.hpp"

namespace coherent {

std::string_view to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::Plane: return "plane";
    case Kind::Disc: return "disc";
    case Kind::Sphere: return "sphere";
  }
  return "unknown";
}

Kind kind_from_string(std::string_view name) {
  if (name == "plane") return Kind::Plane;
  if (name == "disc") return Kind::Disc;
  if (name == "sphere") return Kind::Sphere;
  throw DomainError("space", "unknown phase space '" + std::string(name) +
                                 "' (expected plane, disc or sphere)");
}

PhaseSpace::PhaseSpace(Kind kind, double beta) : kind_(kind), beta_(beta) {
  if (!std::isfinite(beta)) throw DomainError("beta", "beta must be finite");
  switch (kind) {
    case Kind::Plane:
      if (beta <= 0.0) throw DomainError("beta", "plane requires beta > 0");
      break;
    case Kind::Disc:
      if (beta <= 1.0) throw DomainError("beta", "disc requires beta > 1");
      break;
    case Kind::Sphere: {
      const double twice = 2.0 * beta;
      const double rounded = std::round(twice);
      if (rounded < 1.0 || std::fabs(twice - rounded) > 1e-12) {
        throw DomainError("beta", "sphere requires a positive half-integer beta");
      }
      beta_ = rounded / 2.0;
      break;
    }
  }
}

bool PhaseSpace::contains(Complex z) const noexcept {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return kind_ != Kind::Disc || std::norm(z) < 1.0;
}

int PhaseSpace::sphere_degree() const noexcept {
  return static_cast<int>(std::lround(2.0 * beta_));
}

std::string describe(const PhaseSpace& space) {
  std::ostringstream os;
  os << to_string(space.kind()) << "(beta=" << space.beta() << ")";
  return os.str();
}

double dimension(const PhaseSpace& space) noexcept {
  switch (space.kind()) {
    case Kind::Plane: return space.beta();
    case Kind::Disc: return space.beta() - 1.0;
    case Kind::Sphere: return 2.0 * space.beta() + 1.0;
  }
  return 0.0;
}

double measure_density(const PhaseSpace& space, Complex z) {
  const double u = std::norm(z);
  switch (space.kind()) {
    case Kind::Plane: return std::numbers::inv_pi;
    case Kind::Disc:
      if (!(u < 1.0)) throw DomainError("z", "point lies outside the unit disc");
      return std::numbers::inv_pi / ((1.0 - u) * (1.0 - u));
    case Kind::Sphere: return std::numbers::inv_pi / ((1.0 + u) * (1.0 + u));
  }
  return 0.0;
}

double inverse_kernel_power(const PhaseSpace& space, double u, double q) {
  const double b = space.beta();
  switch (space.kind()) {
    case Kind::Plane: return std::exp(-q * b * u);
    case Kind::Disc:
      if (!(u < 1.0)) throw DomainError("z", "point lies outside the unit disc");
      return std::pow(1.0 - u, q * b);
    case Kind::Sphere: return std::pow(1.0 + u, -2.0 * q * b);
  }
  return 0.0;
}

}  // namespace coherent
