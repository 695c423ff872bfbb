#include "cvdj/measure.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cvdj/parallel.hpp"

namespace cvdj {
namespace {

using WindowRule = boost::math::quadrature::gauss_kronrod<double, 61>;
using PanelRule = boost::math::quadrature::gauss<double, 20>;

constexpr unsigned kMaxDepth = 20;
constexpr double kRelTolerance = 1e-13;

void require_window(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    std::ostringstream msg;
    msg << "detection window half-width must be positive and finite, got " << delta;
    throw std::domain_error(msg.str());
  }
}

// Bisection on single GK61 panels. Boost's own recursion compares the
// unscaled panel error with a width-scaled tolerance and never terminates
// on short intervals, so only its non-adaptive rule is used here.
template <class Density>
ProbabilityResult adaptive_integral(Density& density, double a, double b, unsigned depth) {
  double unscaled_error = 0.0;
  const double value = WindowRule::integrate(density, a, b, 0, 0.0, &unscaled_error);
  const double error = unscaled_error * 0.5 * (b - a);
  if (depth == 0 || error <= kRelTolerance * std::abs(value)) return {value, error};
  const double mid = 0.5 * (a + b);
  const auto left = adaptive_integral(density, a, mid, depth - 1);
  const auto right = adaptive_integral(density, mid, b, depth - 1);
  return {left.value + right.value, left.est_error + right.est_error};
}

// |phi|^2 is even in x for every string (M_z(-x) = conj M_z(x)), so the
// window integral is twice the half-window integral.
template <class Density>
ProbabilityResult window_integral(Density&& density, double delta) {
  const auto half = adaptive_integral(density, 0.0, delta, kMaxDepth);
  return {2.0 * half.value, 2.0 * half.est_error};
}

// Whole-period cut-offs used by the full-line extrapolation.
constexpr std::array<int, 4> kPeriodCounts{8, 16, 32, 64};
constexpr std::array<int, 3> kTailExponents{1, 3, 5};

ProbabilityResult extrapolate_tail(const std::array<double, 4>& partial) {
  std::array<double, 4> level = partial;
  std::size_t count = level.size();
  double previous_best = level[count - 1];
  for (int exponent : kTailExponents) {
    const double factor = std::ldexp(1.0, exponent);
    previous_best = level[count - 1];
    for (std::size_t i = 0; i + 1 < count; ++i) {
      level[i] = (factor * level[i + 1] - level[i]) / (factor - 1.0);
    }
    --count;
  }
  return {level[0], std::abs(level[0] - previous_best)};
}

}  // namespace

ProbabilityResult detection_probability(const WaveSpec& spec, double delta) {
  require_window(delta);
  const double prefactor = position_prefactor(spec.params);
  return window_integral(
      [&](double x) { return std::norm(prefactor * scaled_modulation_term(spec, x)); }, delta);
}

ProbabilityResult orthogonal_detection_probability(const OracleString& z, double half_width,
                                                   double delta) {
  require_window(delta);
  return window_integral(
      [&](double x) { return std::norm(orthogonal_position_wave(z, x, half_width)); }, delta);
}

std::vector<ProbabilityResult> total_probabilities(const EncodingParams& params,
                                                   std::span<const OracleString> strings) {
  for (const auto& z : strings) {
    if (static_cast<int>(z.size()) != params.n()) {
      throw std::domain_error("total_probabilities: string length does not match N");
    }
  }
  const double prefactor = position_prefactor(params);
  const double P = params.half_width();
  const double period = std::numbers::pi * params.n() / P;
  // Panel width in normalized units: resolve both the fastest oscillation
  // (period pi / P) and the Gaussian scale sigma.
  const double panel_bar = std::min(0.5, 0.5 * P * params.sigma());
  const auto per_period = static_cast<std::size_t>(std::ceil(period * P / panel_bar));
  const double h = period / static_cast<double>(per_period);
  const std::size_t panels = per_period * static_cast<std::size_t>(kPeriodCounts.back());
  const std::size_t m = strings.size();

  const auto& nodes = PanelRule::abscissa();
  const auto& weights = PanelRule::weights();

  std::vector<double> panel_sums(panels * m, 0.0);
  parallel_for(panels, [&](std::size_t q) {
    const double centre = (static_cast<double>(q) + 0.5) * h;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      for (double side : {-1.0, 1.0}) {
        if (side < 0.0 && nodes[k] == 0.0) continue;
        const double x = centre + side * nodes[k] * 0.5 * h;
        const EdgeValues edges(params, x);
        const double w = weights[k] * 0.5 * h;
        for (std::size_t s = 0; s < m; ++s) {
          panel_sums[q * m + s] += w * std::norm(prefactor * edges.scaled_modulation(strings[s]));
        }
      }
    }
  });

  std::vector<ProbabilityResult> out;
  out.reserve(m);
  for (std::size_t s = 0; s < m; ++s) {
    std::array<double, 4> partial{};
    double running = 0.0;
    std::size_t q = 0;
    for (std::size_t level = 0; level < kPeriodCounts.size(); ++level) {
      const std::size_t stop = per_period * static_cast<std::size_t>(kPeriodCounts[level]);
      for (; q < stop; ++q) running += panel_sums[q * m + s];
      partial[level] = 2.0 * running;
    }
    out.push_back(extrapolate_tail(partial));
  }
  return out;
}

ProbabilityResult total_probability(const WaveSpec& spec) {
  return total_probabilities(spec.params, std::span<const OracleString>(&spec.z, 1)).front();
}

SeparationPair separations(const EncodingParams& params, double delta) {
  require_window(delta);
  const int n = params.n();
  if (n % 4 != 0) {
    throw std::domain_error("separations: N must be divisible by 4 for the SB pair, got " +
                            std::to_string(n));
  }
  const double pc =
      detection_probability({canonical(StringClass::Constant, n).first, params}, delta).value;
  const double pab =
      detection_probability({canonical(StringClass::AntisymBalanced, n).first, params}, delta)
          .value;
  const double psb =
      detection_probability({canonical(StringClass::SymBalanced, n).first, params}, delta).value;
  return {std::abs(pc - pab), std::abs(pc - psb)};
}

double success_probability_sharp(const EncodingParams& params, double delta) {
  const auto pair = separations(params, delta);
  return std::min(pair.delta_ab, pair.delta_sb);
}

double success_probability_orthogonal(double half_width, int n) {
  if (!(half_width > 0.0)) throw std::domain_error("success_probability_orthogonal: P must be positive");
  const auto c = canonical(StringClass::Constant, n).first;
  const auto ab = canonical(StringClass::AntisymBalanced, n).first;
  const double delta = std::numbers::pi / (2.0 * half_width);
  const double pc = orthogonal_detection_probability(c, half_width, delta).value;
  const double pab = orthogonal_detection_probability(ab, half_width, delta).value;
  return std::abs(pc - pab);
}

EdgeDerivative edge_density_derivative(const EncodingParams& params, double delta) {
  require_window(delta);
  const int n = params.n();
  if (n % 4 != 0) {
    throw std::domain_error("edge_density_derivative: N must be divisible by 4, got " +
                            std::to_string(n));
  }
  const auto c = canonical(StringClass::Constant, n).first;
  const auto ab = canonical(StringClass::AntisymBalanced, n).first;
  const auto sb = canonical(StringClass::SymBalanced, n).first;

  const EdgeValues edges(params, delta);
  const double prefactor = position_prefactor(params);
  const double rho_c = std::norm(prefactor * edges.scaled_modulation(c));
  const double rho_ab = std::norm(prefactor * edges.scaled_modulation(ab));
  const double rho_sb = std::norm(prefactor * edges.scaled_modulation(sb));

  const double pc = detection_probability({c, params}, delta).value;
  const double pab = detection_probability({ab, params}, delta).value;
  const double psb = detection_probability({sb, params}, delta).value;
  const double sign_ab = pc >= pab ? 1.0 : -1.0;
  const double sign_sb = pc >= psb ? 1.0 : -1.0;
  return {2.0 * sign_ab * (rho_c - rho_ab), 2.0 * sign_sb * (rho_c - rho_sb)};
}

}  // namespace cvdj
