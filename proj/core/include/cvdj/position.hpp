#pragma once

#include <vector>

#include "cvdj/encoding.hpp"
#include "cvdj/oracle_string.hpp"
#include "cvdj/specfun.hpp"

namespace cvdj {

/// An encoded state phi_z(x; sigma, P): string plus encoding parameters.
struct WaveSpec {
  OracleString z;
  EncodingParams params;

  /// Throws std::domain_error if z.size() != params.n().
  WaveSpec(OracleString z, EncodingParams params);
};

/// The N+1 enveloped edge values E_j = erf_scaled(theta_j, x, sigma) at one
/// position x. Every string's modulation term at x is a signed sum of
/// consecutive differences of these, so brute-force scans over strings
/// evaluate them once per x.
class EdgeValues {
 public:
  /// Throws std::domain_error for sigma <= 0.
  EdgeValues(const EncodingParams& params, double x);

  double x() const noexcept { return x_; }
  const std::vector<Complex>& values() const noexcept { return edges_; }

  /// exp(-x^2 / (2 sigma^2)) M_z(x).
  Complex scaled_modulation(const OracleString& z) const;

 private:
  double x_;
  std::vector<Complex> edges_;
};

/// M_z(x) = sum_j (-1)^{z_j} [erf((theta_j s^2 + ix)/(sqrt2 s)) - erf((theta_{j-1} s^2 + ix)/(sqrt2 s))].
///
/// Grows like exp(x^2 / (2 sigma^2)); returns inf components once that is
/// not representable. Use scaled_modulation_term for comparisons.
Complex modulation_term(const WaveSpec& spec, double x);

/// exp(-x^2 / (2 sigma^2)) M_z(x), always finite.
Complex scaled_modulation_term(const WaveSpec& spec, double x);

/// eta / (2 pi^{1/4} sqrt(sigma)).
double position_prefactor(const EncodingParams& params);

/// phi_3(x): the encoded state after the inverse transform back to position.
Complex position_wave(const WaveSpec& spec, double x);

/// A_k(x) = erf((2Pk/N s^2 - ix)/(sqrt2 s)) - erf((2P(k-1)/N s^2 - ix)/(sqrt2 s)),
/// 1 <= k <= N/2. Overflows like modulation_term at large x / sigma.
Complex a_k(int k, double x, const EncodingParams& params);

/// exp(-x^2 / (2 sigma^2)) A_k(x).
Complex scaled_a_k(int k, double x, const EncodingParams& params);

struct Phasor {
  double magnitude;
  double angle;  ///< in (-pi, pi]
};

/// Polar form R_k exp(i phi_k) of the k-th wavefunction term, envelope and
/// eta prefactor included.
Phasor phasor(int k, double x, const EncodingParams& params);

/// sigma -> 0 limit: sin(Px/N)/(sqrt(P pi) x) sum_j (-1)^{z_j} exp(i (N - (2j+1)) P x / N),
/// the position dual of the top-hat encoding. Unit norm on the real line.
Complex orthogonal_position_wave(const OracleString& z, double x, double half_width);

}  // namespace cvdj
