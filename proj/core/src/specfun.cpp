#include "cvdj/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cvdj {
namespace {

constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;

// Below this modulus erf is summed from its Maclaurin series. The real-axis
// cancellation loss there is about e^{|z|^2} / (sqrt(pi) |z|) ~ 1e2.
constexpr double kSeriesRadius = 2.5;

// Crossover between the rational approximation and the continued fraction.
constexpr double kContinuedFractionRadius = 8.0;
constexpr int kContinuedFractionTerms = 20;

constexpr int kWeidemanTerms = 40;

Complex erf_series(Complex z) {
  const Complex z2 = z * z;
  Complex term = z;
  Complex sum = z;
  for (int n = 1; n < 200; ++n) {
    term *= -z2 / static_cast<double>(n);
    const Complex contrib = term / static_cast<double>(2 * n + 1);
    sum += contrib;
    if (std::abs(contrib) <= 1e-17 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

struct WeidemanTable {
  double L;
  std::array<double, kWeidemanTerms> coeff;  // coeff[n-1] multiplies Z^{n-1}
};

// Coefficients of the expansion of (L^2 + t^2) e^{-t^2} in the
// Malmquist-Takenaka basis, from a direct cosine transform on 2M points.
WeidemanTable make_weideman_table() {
  constexpr int N = kWeidemanTerms;
  constexpr int M = 2 * N;
  constexpr int M2 = 2 * M;
  WeidemanTable table{};
  table.L = std::sqrt(N / std::numbers::sqrt2);

  std::array<double, M> f{};
  for (int k = 0; k < M; ++k) {
    const double theta = k * std::numbers::pi / M;
    const double t = table.L * std::tan(theta / 2.0);
    f[k] = std::exp(-t * t) * (table.L * table.L + t * t);
  }
  for (int n = 1; n <= N; ++n) {
    double acc = f[0];
    for (int k = 1; k < M; ++k) {
      acc += 2.0 * f[k] * std::cos(std::numbers::pi * k * n / M);
    }
    table.coeff[n - 1] = acc / M2;
  }
  return table;
}

const WeidemanTable& weideman_table() {
  static const WeidemanTable table = make_weideman_table();
  return table;
}

// Upper half plane, |z| < 8.
Complex faddeeva_rational(Complex z) {
  const auto& tab = weideman_table();
  const Complex iz{-z.imag(), z.real()};
  const Complex denom = tab.L - iz;
  const Complex Z = (tab.L + iz) / denom;
  Complex p = tab.coeff[kWeidemanTerms - 1];
  for (int n = kWeidemanTerms - 2; n >= 0; --n) p = p * Z + tab.coeff[n];
  return 2.0 * p / (denom * denom) + std::numbers::inv_sqrtpi / denom;
}

// Upper half plane, |z| >= 8.
Complex faddeeva_continued_fraction(Complex z) {
  Complex t = z;
  for (int k = kContinuedFractionTerms; k >= 1; --k) t = z - (0.5 * k) / t;
  return Complex{0.0, std::numbers::inv_sqrtpi} / t;
}

Complex faddeeva_upper(Complex z) {
  if (std::abs(z) < kContinuedFractionRadius) return faddeeva_rational(z);
  return faddeeva_continued_fraction(z);
}

}  // namespace

Complex faddeeva(Complex z) {
  if (z.imag() >= 0.0) return faddeeva_upper(z);
  return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
}

Complex erf_complex(Complex z) {
  if (!ErfSupportBox::contains(z)) {
    std::ostringstream msg;
    msg << "erf_complex: argument " << z << " outside support box |Re z| <= "
        << ErfSupportBox::max_abs_re
        << ", |Im z| <= " << ErfSupportBox::max_abs_im << "; use erf_scaled";
    throw std::out_of_range(msg.str());
  }
  if (std::abs(z) <= kSeriesRadius) return erf_series(z);
  // erf(z) = 1 - exp(-z^2) w(iz) with Im(iz) = Re z >= 0; odd symmetry
  // covers the left half plane.
  const double sign = z.real() >= 0.0 ? 1.0 : -1.0;
  const Complex zr = sign * z;
  const Complex izr{-zr.imag(), zr.real()};
  return sign * (1.0 - std::exp(-zr * zr) * faddeeva_upper(izr));
}

Complex erf_scaled(double a, double x, double s) {
  if (!(s > 0.0)) {
    std::ostringstream msg;
    msg << "erf_scaled: width s must be positive, got " << s;
    throw std::domain_error(msg.str());
  }
  const Complex w = Complex{a * s * s, x} / (std::numbers::sqrt2 * s);
  const double envelope = std::exp(-x * x / (2.0 * s * s));
  if (std::abs(w) <= kSeriesRadius) return envelope * erf_series(w);

  // With w' = sign(a) w, exp(-w'^2) * envelope = exp(-a^2 s^2 / 2 - i a x),
  // which is bounded; the growing factor never appears.
  const double sign = a >= 0.0 ? 1.0 : -1.0;
  const Complex wr = sign * w;
  const Complex iwr{-wr.imag(), wr.real()};
  const Complex phase = std::exp(Complex{-0.5 * a * a * s * s, -a * x});
  return sign * (envelope - phase * faddeeva_upper(iwr));
}

}  // namespace cvdj
