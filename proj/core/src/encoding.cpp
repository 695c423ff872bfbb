#include "cvdj/encoding.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cvdj {
namespace {

void require_match(const OracleString& z, const EncodingParams& params) {
  if (static_cast<int>(z.size()) != params.n()) {
    std::ostringstream msg;
    msg << "string length " << z.size() << " does not match N = " << params.n();
    throw std::domain_error(msg.str());
  }
}

void require_positive_sigma(const EncodingParams& params, const char* what) {
  if (!(params.sigma() > 0.0)) {
    throw std::domain_error(std::string(what) + ": sigma must be positive");
  }
}

}  // namespace

EncodingParams::EncodingParams(int n, double half_width, double sigma)
    : n_(n), half_width_(half_width), sigma_(sigma) {
  if (n < 2 || n % 2 != 0) {
    throw std::domain_error("EncodingParams: N must be even and >= 2, got " + std::to_string(n));
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::domain_error("EncodingParams: P must be positive and finite");
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::domain_error("EncodingParams: sigma must be non-negative and finite");
  }
}

double EncodingParams::squeezing() const noexcept {
  if (sigma_ == 0.0) return std::numeric_limits<double>::infinity();
  return -std::log(sigma_);
}

NormalizedParams::NormalizedParams(double delta_bar_in, double sigma_bar_in)
    : delta_bar(delta_bar_in), sigma_bar(sigma_bar_in) {
  if (!(delta_bar > 0.0) || !(sigma_bar > 0.0)) {
    std::ostringstream msg;
    msg << "NormalizedParams: delta_bar and sigma_bar must be positive, got (" << delta_bar
        << ", " << sigma_bar << ")";
    throw std::domain_error(msg.str());
  }
}

double theta(int j, const EncodingParams& params) {
  if (j < 0 || j > params.n()) {
    throw std::domain_error("theta: index " + std::to_string(j) + " outside [0, " +
                            std::to_string(params.n()) + "]");
  }
  return params.half_width() * (2.0 * j - params.n()) / params.n();
}

int momentum_bin(int i, double p, const EncodingParams& params) {
  if (i < 0 || i >= params.n()) return 0;
  return (p >= theta(i, params) && p < theta(i + 1, params)) ? 1 : 0;
}

int bin_index(double p, const EncodingParams& params) {
  const double P = params.half_width();
  if (!(p >= -P && p < P)) return -1;
  // The float estimate can be off by one at an edge; settle it against the
  // same theta values momentum_bin uses so the tiling stays exact.
  int i = static_cast<int>(std::floor((p + P) * params.n() / (2.0 * P)));
  if (i >= params.n()) i = params.n() - 1;
  if (i < 0) i = 0;
  while (i > 0 && p < theta(i, params)) --i;
  while (i + 1 < params.n() && p >= theta(i + 1, params)) ++i;
  return i;
}

int square_wave(const OracleString& z, double p, const EncodingParams& params) {
  require_match(z, params);
  const int i = bin_index(p, params);
  return i < 0 ? 0 : z.sign(static_cast<std::size_t>(i));
}

double momentum_gaussian(double p, const EncodingParams& params) {
  require_positive_sigma(params, "momentum_gaussian");
  const double s = params.sigma();
  return std::exp(-0.5 * p * p * s * s) * std::sqrt(s) / std::pow(std::numbers::pi, 0.25);
}

double normalization_eta(const EncodingParams& params) {
  const double ps = params.half_width() * params.sigma();
  if (!(ps > 0.0)) {
    throw std::domain_error("normalization_eta: P sigma must be positive");
  }
  return 1.0 / std::sqrt(std::erf(ps));
}

double encoded_momentum(const OracleString& z, double p, const EncodingParams& params) {
  const double eta = normalization_eta(params);
  const int f = square_wave(z, p, params);
  if (f == 0) return 0.0;
  return eta * f * momentum_gaussian(p, params);
}

double tophat_momentum(const OracleString& z, double p, double half_width) {
  const EncodingParams params(static_cast<int>(z.size()), half_width, 0.0);
  return square_wave(z, p, params) / std::sqrt(2.0 * half_width);
}

}  // namespace cvdj
