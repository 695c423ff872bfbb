#pragma once

#include <complex>

namespace cvdj {

using Complex = std::complex<double>;

/// Support box of erf_complex. Outside it the bare value is either not
/// representable or not needed; callers that pair erf with a Gaussian
/// envelope go through erf_scaled instead.
struct ErfSupportBox {
  static constexpr double max_abs_re = 30.0;
  static constexpr double max_abs_im = 12.0;

  static constexpr bool contains(Complex z) noexcept {
    return (z.real() <= max_abs_re && z.real() >= -max_abs_re) &&
           (z.imag() <= max_abs_im && z.imag() >= -max_abs_im);
  }
};

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
///
/// Upper half plane: Weideman's 40-term rational approximation for |z| < 8,
/// Laplace continued fraction beyond. The lower half plane goes through
/// w(z) = 2 exp(-z^2) - w(-z), which overflows for large |Im z|.
Complex faddeeva(Complex z);

/// Error function of a complex argument, accurate to 1e-12 relative to
/// max(1, |erf z|) inside ErfSupportBox.
///
/// Throws std::out_of_range outside the support box.
Complex erf_complex(Complex z);

/// exp(-x^2 / (2 s^2)) * erf((a s^2 + i x) / (sqrt(2) s)), evaluated without
/// forming the erf factor when it would overflow.
///
/// Every erf difference in the position-space wavefunctions has this shape
/// (a is a momentum bin edge, s the input width). Throws std::domain_error
/// for s <= 0.
Complex erf_scaled(double a, double x, double s);

}  // namespace cvdj
