#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cvdj/encoding.hpp"
#include "cvdj/measure.hpp"

namespace cvdj {

/// The optimizer works in normalized coordinates (P = 1) with N fixed at 8.
inline constexpr int kOptimizerBits = 8;

enum class Branch { AB, SB };

/// A bracketing search found no sign change. sweep() holds the coarse
/// (abscissa, value) table that was scanned.
class RootNotFound : public std::runtime_error {
 public:
  RootNotFound(const std::string& what, std::vector<std::pair<double, double>> sweep)
      : std::runtime_error(what), sweep_(std::move(sweep)) {}

  const std::vector<std::pair<double, double>>& sweep() const noexcept { return sweep_; }

 private:
  std::vector<std::pair<double, double>> sweep_;
};

/// Encoding parameters for normalized coordinates: N = 8, P = 1, sigma = sigma_bar.
EncodingParams normalized_encoding(double sigma_bar);

/// (Delta_AB, Delta_SB) at (delta_bar, sigma_bar).
SeparationPair normalized_separations(const NormalizedParams& point);

/// The window delta_bar in (0, 6] that maximizes the chosen separation at
/// fixed sigma_bar in [0.2, 5]: every sign change of the edge density
/// difference is bracketed on a 0.01 grid and bisected, and the local
/// maximum with the largest separation wins.
double stationary_delta(double sigma_bar, Branch branch);

struct SimultaneousPoint {
  double delta_bar;
  double sigma_bar;
  SeparationPair separations;
};

/// sigma_bar in [1.5, 3] where the AB and SB stationary windows coincide.
SimultaneousPoint find_simultaneous_stationary();

struct OptimumReport {
  double delta_bar;
  double sigma_bar;
  double pr_success;
  double resid_stationarity;  ///< |dDelta_AB/d delta| at the solution
  double resid_equalize;      ///< |Delta_AB - Delta_SB| at the solution
  std::vector<std::string> warnings;
};

/// Maximizes Delta_AB along its stationary curve subject to
/// Delta_AB = Delta_SB, by bisection on sigma_bar in [0.5, 2.11].
OptimumReport find_optimum();

struct SweepRow {
  double delta_bar;
  double sigma_bar;
  double delta_ab;
  double delta_sb;
  double pr_min;
};

/// One row per grid point, in input order.
std::vector<SweepRow> sweep(std::span<const NormalizedParams> grid);

}  // namespace cvdj
