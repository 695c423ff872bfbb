#include "cvdj/position.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cvdj {
namespace {

void require_positive_sigma(const EncodingParams& params) {
  if (!(params.sigma() > 0.0)) {
    throw std::domain_error("position-space evaluation needs sigma > 0");
  }
}

void require_k(int k, const EncodingParams& params) {
  if (k < 1 || k > params.n() / 2) {
    std::ostringstream msg;
    msg << "phasor index k = " << k << " outside [1, " << params.n() / 2 << "]";
    throw std::domain_error(msg.str());
  }
}

Complex unscale(Complex scaled, double x, double sigma) {
  if (scaled == Complex{}) return scaled;
  return scaled * std::exp(x * x / (2.0 * sigma * sigma));
}

}  // namespace

WaveSpec::WaveSpec(OracleString z_in, EncodingParams params_in)
    : z(std::move(z_in)), params(params_in) {
  if (static_cast<int>(z.size()) != params.n()) {
    std::ostringstream msg;
    msg << "WaveSpec: string length " << z.size() << " != N = " << params.n();
    throw std::domain_error(msg.str());
  }
}

EdgeValues::EdgeValues(const EncodingParams& params, double x) : x_(x) {
  require_positive_sigma(params);
  edges_.reserve(static_cast<std::size_t>(params.n()) + 1);
  for (int j = 0; j <= params.n(); ++j) {
    edges_.push_back(erf_scaled(theta(j, params), x, params.sigma()));
  }
}

Complex EdgeValues::scaled_modulation(const OracleString& z) const {
  if (z.size() + 1 != edges_.size()) {
    throw std::domain_error("EdgeValues: string length does not match N");
  }
  Complex sum{};
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Complex diff = edges_[i + 1] - edges_[i];
    sum += z.bit(i) ? -diff : diff;
  }
  return sum;
}

Complex scaled_modulation_term(const WaveSpec& spec, double x) {
  return EdgeValues(spec.params, x).scaled_modulation(spec.z);
}

Complex modulation_term(const WaveSpec& spec, double x) {
  return unscale(scaled_modulation_term(spec, x), x, spec.params.sigma());
}

double position_prefactor(const EncodingParams& params) {
  require_positive_sigma(params);
  return normalization_eta(params) /
         (2.0 * std::pow(std::numbers::pi, 0.25) * std::sqrt(params.sigma()));
}

Complex position_wave(const WaveSpec& spec, double x) {
  return position_prefactor(spec.params) * scaled_modulation_term(spec, x);
}

Complex scaled_a_k(int k, double x, const EncodingParams& params) {
  require_k(k, params);
  require_positive_sigma(params);
  const double step = 2.0 * params.half_width() / params.n();
  const double s = params.sigma();
  // The -ix argument is the complex conjugate branch: erf_scaled(a, -x, s).
  return erf_scaled(step * k, -x, s) - erf_scaled(step * (k - 1), -x, s);
}

Complex a_k(int k, double x, const EncodingParams& params) {
  return unscale(scaled_a_k(k, x, params), x, params.sigma());
}

Phasor phasor(int k, double x, const EncodingParams& params) {
  const Complex term = position_prefactor(params) * scaled_a_k(k, x, params);
  double angle = std::arg(term);
  if (angle <= -std::numbers::pi) angle = std::numbers::pi;
  return {std::abs(term), angle};
}

Complex orthogonal_position_wave(const OracleString& z, double x, double half_width) {
  if (!(half_width > 0.0)) {
    throw std::domain_error("orthogonal_position_wave: P must be positive");
  }
  const auto n = static_cast<int>(z.size());
  const double P = half_width;
  const double u = P * x / n;
  const double sinc = std::abs(u) < 1e-8 ? 1.0 - u * u / 6.0 : std::sin(u) / u;
  const double envelope = (P / n) * sinc / std::sqrt(P * std::numbers::pi);
  Complex sum{};
  for (int i = 0; i < n; ++i) {
    const double phase = (n - (2 * i + 1)) * P * x / n;
    sum += static_cast<double>(z.sign(static_cast<std::size_t>(i))) *
           Complex{std::cos(phase), std::sin(phase)};
  }
  return envelope * sum;
}

}  // namespace cvdj
