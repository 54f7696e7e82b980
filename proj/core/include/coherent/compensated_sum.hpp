#pragma once

#include <complex>
#include <span>

namespace coherent {

/// Neumaier-compensated accumulator. Adding the same values in the same
/// order always yields the same bits, independent of how the values were
/// produced.
class CompensatedSum {
 public:
  void add(double value) noexcept;
  double result() const noexcept { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(std::complex<double> value) noexcept {
    re_.add(value.real());
    im_.add(value.imag());
  }
  std::complex<double> result() const noexcept { return {re_.result(), im_.result()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

double compensated_sum(std::span<const double> values) noexcept;

}  // namespace coherent
