#pragma once

#include "cvdj/oracle_string.hpp"

namespace cvdj {

/// Momentum-space encoding parameters: N bits spread over [-P, P) and an
/// input Gaussian of position standard deviation sigma (natural oscillator
/// units). sigma = exp(-zeta) with zeta the squeezing parameter.
class EncodingParams {
 public:
  /// Throws std::domain_error unless n is even and >= 2, half_width > 0
  /// and sigma >= 0.
  EncodingParams(int n, double half_width, double sigma);

  int n() const noexcept { return n_; }
  double half_width() const noexcept { return half_width_; }
  double sigma() const noexcept { return sigma_; }
  /// zeta = -ln(sigma); +inf at sigma = 0.
  double squeezing() const noexcept;

  EncodingParams with_sigma(double sigma) const { return {n_, half_width_, sigma}; }

 private:
  int n_;
  double half_width_;
  double sigma_;
};

/// Scale-free coordinates delta_bar = P delta and sigma_bar = P sigma.
struct NormalizedParams {
  double delta_bar;
  double sigma_bar;

  /// Throws std::domain_error unless both are strictly positive.
  NormalizedParams(double delta_bar, double sigma_bar);

  double delta(double half_width) const noexcept { return delta_bar / half_width; }
  double sigma(double half_width) const noexcept { return sigma_bar / half_width; }
};

/// Bin-edge lattice theta_j = P (2j - N) / N for 0 <= j <= N.
double theta(int j, const EncodingParams& params);

/// 1 iff p lies in the half-open bin [theta_i, theta_{i+1}).
int momentum_bin(int i, double p, const EncodingParams& params);

/// Index of the bin containing p, or -1 outside [-P, P).
int bin_index(double p, const EncodingParams& params);

/// f_z(p) = sum_i (-1)^{z_i} bin_i(p); zero outside [-P, P).
int square_wave(const OracleString& z, double p, const EncodingParams& params);

/// Momentum amplitude of the squeezed vacuum, sqrt(sigma) exp(-p^2 sigma^2 / 2) / pi^{1/4}.
double momentum_gaussian(double p, const EncodingParams& params);

/// 1 / sqrt(erf(P sigma)); restores unit norm after truncation to [-P, P].
double normalization_eta(const EncodingParams& params);

/// eta f_z(p) phi1(p): the oracle-modulated, truncated momentum amplitude.
double encoded_momentum(const OracleString& z, double p, const EncodingParams& params);

/// Orthogonal top-hat encoding f_z(p) / sqrt(2P).
double tophat_momentum(const OracleString& z, double p, double half_width);

}  // namespace cvdj
