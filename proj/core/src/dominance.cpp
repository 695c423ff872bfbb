#include "cvdj/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cvdj/parallel.hpp"

namespace cvdj {
namespace {

constexpr double kCrossoverTolerance = 1e-13;
constexpr int kSincGridPoints = 801;

void require_brute_force(const EncodingParams& params, const char* where) {
  if (params.n() > kMaxBruteForceBits) {
    std::ostringstream msg;
    msg << where << ": brute force limited to N <= " << kMaxBruteForceBits << ", got N = "
        << params.n();
    throw std::domain_error(msg.str());
  }
  if (!(params.sigma() > 0.0)) {
    throw std::domain_error(std::string(where) + ": sigma must be positive");
  }
}

struct Winner {
  std::size_t index;
  double enveloped;
};

// Strings are in lexicographic order, so strict > keeps the smallest on ties.
Winner argmax(const EdgeValues& edges, const std::vector<OracleString>& strings) {
  Winner best{0, -1.0};
  for (std::size_t i = 0; i < strings.size(); ++i) {
    const double m = std::abs(edges.scaled_modulation(strings[i]));
    if (m > best.enveloped) best = {i, m};
  }
  return best;
}

double unscaled_magnitude(double enveloped, double x, double sigma) {
  return enveloped * std::exp(x * x / (2.0 * sigma * sigma));
}

}  // namespace

DominantString dominant_string(double x, const EncodingParams& params) {
  require_brute_force(params, "dominant_string");
  const auto strings = enumerate_balanced(params.n());
  const EdgeValues edges(params, x);
  const auto best = argmax(edges, strings);
  const auto& z = strings[best.index];
  return {z, classify(z), unscaled_magnitude(best.enveloped, x, params.sigma()), best.enveloped};
}

double crossover_approx(const EncodingParams& params) {
  const double P = params.half_width();
  const double s2 = params.sigma() * params.sigma();
  const double denom = 4.0 - P * P * s2;
  if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
  return P * s2 / denom;
}

DominanceReport verify_dominance(const EncodingParams& params, double x_max, int n_points) {
  require_brute_force(params, "verify_dominance");
  if (!(x_max > 0.0) || !std::isfinite(x_max)) {
    throw std::domain_error("verify_dominance: x_max must be positive and finite");
  }
  if (n_points < 2) throw std::domain_error("verify_dominance: need at least 2 grid points");
  if (params.n() % 4 != 0) {
    throw std::domain_error("verify_dominance: N must be divisible by 4 for the SB class");
  }

  const auto strings = enumerate_balanced(params.n());
  const auto points = static_cast<std::size_t>(n_points);
  DominanceReport report;
  report.x_grid.resize(points);
  for (std::size_t i = 0; i < points; ++i) {
    report.x_grid[i] = x_max * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  report.argmax_class.resize(points);

  const auto sb = canonical(StringClass::SymBalanced, params.n()).first;
  const auto ab = canonical(StringClass::AntisymBalanced, params.n()).first;
  std::vector<double> gap(points);
  parallel_for(points, [&](std::size_t i) {
    const EdgeValues edges(params, report.x_grid[i]);
    report.argmax_class[i] = classify(strings[argmax(edges, strings).index]);
    gap[i] = std::abs(edges.scaled_modulation(sb)) - std::abs(edges.scaled_modulation(ab));
  });

  report.sb_ab_only = std::all_of(report.argmax_class.begin(), report.argmax_class.end(),
                                  [](StringClass c) {
                                    return c == StringClass::SymBalanced ||
                                           c == StringClass::AntisymBalanced;
                                  });
  int changes = 0;
  for (std::size_t i = 0; i + 1 < points; ++i) {
    if (report.argmax_class[i] != report.argmax_class[i + 1]) ++changes;
  }
  report.single_crossover = changes == 1 &&
                            report.argmax_class.front() == StringClass::SymBalanced &&
                            report.argmax_class.back() == StringClass::AntisymBalanced;

  auto gap_at = [&](double x) {
    const EdgeValues edges(params, x);
    return std::abs(edges.scaled_modulation(sb)) - std::abs(edges.scaled_modulation(ab));
  };
  for (std::size_t i = 0; i + 1 < points; ++i) {
    if (gap[i] > 0.0 && gap[i + 1] <= 0.0) {
      double lo = report.x_grid[i];
      double hi = report.x_grid[i + 1];
      if (gap[i + 1] == 0.0) {
        report.x_c_numeric = hi;
      } else {
        while (hi - lo > kCrossoverTolerance * std::max(1.0, hi)) {
          const double mid = 0.5 * (lo + hi);
          (gap_at(mid) > 0.0 ? lo : hi) = mid;
        }
        report.x_c_numeric = 0.5 * (lo + hi);
      }
      report.crossover_found = true;
      break;
    }
  }
  report.x_c_approx = crossover_approx(params);
  return report;
}

bool lemma2_check(const EncodingParams& params) {
  require_brute_force(params, "lemma2_check");
  if (params.n() % 4 != 0) return false;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= params.n() / 2; ++k) {
    const double value = scaled_a_k(k, 0.0, params).real();
    if (!(value < previous)) return false;
    previous = value;
  }
  return dominant_string(0.0, params).cls == StringClass::SymBalanced;
}

Lemma3Result lemma3_decomposition(double x, const EncodingParams& params) {
  require_brute_force(params, "lemma3_decomposition");
  if (!(x > 0.0)) throw std::domain_error("lemma3_decomposition: x must be positive");
  const int half = params.n() / 2;
  Lemma3Result out{};
  out.sb_available = params.n() % 4 == 0;

  double real_sum = 0.0;
  double imag_sum = 0.0;
  for (int k = 1; k <= half; ++k) {
    const Complex a = scaled_a_k(k, x, params);
    real_sum += (2 * k <= half ? 1.0 : -1.0) * a.real();
    imag_sum += a.imag();
  }
  out.max_real = out.sb_available ? 2.0 * real_sum : std::numeric_limits<double>::quiet_NaN();
  out.max_imag = 2.0 * imag_sum;

  const auto strings = enumerate_balanced(params.n());
  const EdgeValues edges(params, x);
  out.brute_force_max = argmax(edges, strings).enveloped;
  const double claimed =
      out.sb_available ? std::max(std::abs(out.max_real), std::abs(out.max_imag))
                       : std::abs(out.max_imag);
  out.mismatch = std::abs(out.brute_force_max - claimed);
  return out;
}

double sinc_limit_check(const OracleString& z, double half_width, double sigma_small) {
  if (!(sigma_small > 0.0 && sigma_small <= 0.05)) {
    throw std::domain_error("sinc_limit_check: sigma_small must lie in (0, 0.05]");
  }
  const WaveSpec spec(z, EncodingParams(static_cast<int>(z.size()), half_width, sigma_small));
  const double x_max = std::numbers::pi / half_width;
  double sum = 0.0;
  for (int i = 0; i < kSincGridPoints; ++i) {
    const double x = -x_max + 2.0 * x_max * i / (kSincGridPoints - 1);
    const double diff =
        std::abs(position_wave(spec, x)) - std::abs(orthogonal_position_wave(z, x, half_width));
    sum += diff * diff;
  }
  return std::sqrt(sum / kSincGridPoints);
}

}  // namespace cvdj
