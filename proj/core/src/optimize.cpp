#include "cvdj/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "cvdj/parallel.hpp"
#include "cvdj/position.hpp"

namespace cvdj {
namespace {

constexpr double kDeltaMax = 6.0;
constexpr double kDeltaStep = 0.01;
constexpr double kInnerTolerance = 1e-10;

constexpr double kSimultaneousLo = 1.5;
constexpr double kSimultaneousHi = 3.0;
constexpr double kSimultaneousStep = 0.05;

constexpr double kOptimumLo = 0.5;
constexpr double kOptimumHi = 2.11;
constexpr double kOptimumStep = 0.05;
constexpr double kOuterTolerance = 1e-10;
constexpr double kEqualizeTarget = 1e-9;

struct BranchStrings {
  OracleString constant;
  OracleString target;
};

BranchStrings branch_strings(Branch branch) {
  const auto cls = branch == Branch::AB ? StringClass::AntisymBalanced : StringClass::SymBalanced;
  return {canonical(StringClass::Constant, kOptimizerBits).first,
          canonical(cls, kOptimizerBits).first};
}

std::string_view branch_name(Branch branch) { return branch == Branch::AB ? "AB" : "SB"; }

// Bisection on [lo, hi] given f(lo) and f(hi) of opposite sign.
double bisect(const std::function<double(double)>& f, double lo, double hi, double f_lo,
              double tolerance) {
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
  const auto count = static_cast<std::size_t>(std::llround((hi - lo) / step));
  std::vector<double> grid(count + 1);
  for (std::size_t i = 0; i <= count; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

double signed_separation(const EncodingParams& params, const BranchStrings& s, double delta) {
  return detection_probability({s.constant, params}, delta).value -
         detection_probability({s.target, params}, delta).value;
}

}  // namespace

EncodingParams normalized_encoding(double sigma_bar) {
  return EncodingParams(kOptimizerBits, 1.0, sigma_bar);
}

SeparationPair normalized_separations(const NormalizedParams& point) {
  return separations(normalized_encoding(point.sigma_bar), point.delta_bar);
}

double stationary_delta(double sigma_bar, Branch branch) {
  if (!(sigma_bar >= 0.2 && sigma_bar <= 5.0)) {
    std::ostringstream msg;
    msg << "stationary_delta: sigma_bar must lie in [0.2, 5], got " << sigma_bar;
    throw std::domain_error(msg.str());
  }
  const auto params = normalized_encoding(sigma_bar);
  const auto strings = branch_strings(branch);
  const double prefactor = position_prefactor(params);

  // d(delta) = |phi_C(delta)|^2 - |phi_z(delta)|^2; the separation derivative
  // is 2 sign(Pr_C - Pr_z) d.
  auto density_gap = [&](double delta) {
    const EdgeValues edges(params, delta);
    return std::norm(prefactor * edges.scaled_modulation(strings.constant)) -
           std::norm(prefactor * edges.scaled_modulation(strings.target));
  };

  const auto grid = uniform_grid(kDeltaStep, kDeltaMax, kDeltaStep);
  std::vector<std::pair<double, double>> table;
  table.reserve(grid.size());
  for (double d : grid) table.emplace_back(d, density_gap(d));

  double best_delta = 0.0;
  double best_value = -1.0;
  for (std::size_t i = 0; i + 1 < table.size(); ++i) {
    const auto [a, fa] = table[i];
    const auto [b, fb] = table[i + 1];
    if (fa == 0.0 || (fa > 0.0) == (fb > 0.0)) continue;
    const double root = bisect(density_gap, a, b, fa, kInnerTolerance);
    const double sep = signed_separation(params, strings, root);
    // |Delta| has a local maximum where sign(Delta) d falls through zero.
    const double sign = sep >= 0.0 ? 1.0 : -1.0;
    if (!(sign * fa > 0.0 && sign * fb < 0.0)) continue;
    if (std::abs(sep) > best_value) {
      best_value = std::abs(sep);
      best_delta = root;
    }
  }
  if (best_value < 0.0) {
    std::ostringstream msg;
    msg << "stationary_delta: no local maximum of Delta_" << branch_name(branch)
        << " in (0, " << kDeltaMax << "] at sigma_bar = " << sigma_bar;
    throw RootNotFound(msg.str(), std::move(table));
  }
  return best_delta;
}

SimultaneousPoint find_simultaneous_stationary() {
  auto gap = [](double sigma_bar) {
    return stationary_delta(sigma_bar, Branch::AB) - stationary_delta(sigma_bar, Branch::SB);
  };
  const auto grid = uniform_grid(kSimultaneousLo, kSimultaneousHi, kSimultaneousStep);
  std::vector<std::pair<double, double>> table;
  for (double s : grid) {
    table.emplace_back(s, gap(s));
    if (table.size() < 2) continue;
    const auto [a, fa] = table[table.size() - 2];
    const auto [b, fb] = table.back();
    if (fa == 0.0 || (fa > 0.0) == (fb > 0.0)) continue;

    const double sigma_bar = bisect(gap, a, b, fa, kOuterTolerance);
    const double d_ab = stationary_delta(sigma_bar, Branch::AB);
    const double d_sb = stationary_delta(sigma_bar, Branch::SB);
    // A jump of either branch between local maxima also flips the sign;
    // only a genuine crossing closes the gap.
    if (std::abs(d_ab - d_sb) > 1e-6) continue;
    const double delta_bar = 0.5 * (d_ab + d_sb);
    return {delta_bar, sigma_bar, normalized_separations({delta_bar, sigma_bar})};
  }
  throw RootNotFound("find_simultaneous_stationary: AB and SB stationary windows never coincide "
                     "for sigma_bar in [1.5, 3]",
                     std::move(table));
}

OptimumReport find_optimum() {
  auto g = [](double sigma_bar) {
    const double d = stationary_delta(sigma_bar, Branch::AB);
    const auto pair = normalized_separations({d, sigma_bar});
    return pair.delta_ab - pair.delta_sb;
  };
  const auto grid = uniform_grid(kOptimumLo, kOptimumHi, kOptimumStep);
  std::vector<std::pair<double, double>> table;
  table.reserve(grid.size());
  for (double s : grid) table.emplace_back(s, g(s));

  std::vector<std::size_t> brackets;
  for (std::size_t i = 0; i + 1 < table.size(); ++i) {
    const double fa = table[i].second;
    const double fb = table[i + 1].second;
    if (fa == 0.0 || (fa > 0.0) != (fb > 0.0)) brackets.push_back(i);
  }
  if (brackets.empty()) {
    throw RootNotFound("find_optimum: Delta_AB - Delta_SB has no sign change for sigma_bar in "
                       "[0.5, 2.11]",
                       std::move(table));
  }

  OptimumReport report{};
  if (brackets.size() > 1) {
    std::ostringstream msg;
    msg << "g(sigma_bar) changes sign " << brackets.size()
        << " times on [0.5, 2.11]; reporting the smallest root";
    report.warnings.push_back(msg.str());
  }

  double lo = table[brackets.front()].first;
  double hi = table[brackets.front() + 1].first;
  double f_lo = table[brackets.front()].second;
  double sigma_bar = f_lo == 0.0 ? lo : 0.5 * (lo + hi);
  if (f_lo != 0.0) {
    while (hi - lo > kOuterTolerance) {
      sigma_bar = 0.5 * (lo + hi);
      const double f_mid = g(sigma_bar);
      if (std::abs(f_mid) <= kEqualizeTarget) break;
      if ((f_mid > 0.0) == (f_lo > 0.0)) {
        lo = sigma_bar;
        f_lo = f_mid;
      } else {
        hi = sigma_bar;
      }
      sigma_bar = 0.5 * (lo + hi);
    }
  }

  const double delta_bar = stationary_delta(sigma_bar, Branch::AB);
  const auto params = normalized_encoding(sigma_bar);
  const auto pair = separations(params, delta_bar);
  report.delta_bar = delta_bar;
  report.sigma_bar = sigma_bar;
  report.pr_success = std::min(pair.delta_ab, pair.delta_sb);
  report.resid_stationarity = std::abs(edge_density_derivative(params, delta_bar).d_ab);
  report.resid_equalize = std::abs(pair.delta_ab - pair.delta_sb);
  return report;
}

std::vector<SweepRow> sweep(std::span<const NormalizedParams> grid) {
  if (grid.empty()) throw std::domain_error("sweep: grid must not be empty");
  for (const auto& p : grid) {
    if (!(p.delta_bar > 0.0) || !(p.sigma_bar > 0.0)) {
      throw std::domain_error("sweep: grid entries must be positive");
    }
  }
  std::vector<SweepRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const auto pair = normalized_separations(grid[i]);
    rows[i] = {grid[i].delta_bar, grid[i].sigma_bar, pair.delta_ab, pair.delta_sb,
               std::min(pair.delta_ab, pair.delta_sb)};
  });
  return rows;
}

}  // namespace cvdj
