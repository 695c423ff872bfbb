#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvdj/dominance.hpp"
#include "cvdj/optimize.hpp"

namespace cvdj::harness {

enum class Subcommand { Verify, Figures, Optimize, Sweep, Dominance };
enum class OutputFormat { Table, Csv, Json };
enum class Figure { Fig2, Fig3, Fig4 };

struct RunConfig {
  Subcommand subcommand = Subcommand::Verify;
  int n = 8;
  double p = 1.0;
  std::optional<double> sigma;
  std::optional<double> delta;
  /// File for optimize/sweep/dominance (stdout when empty); directory for figures.
  std::string output_path;
  /// Per-subcommand default when unset.
  std::optional<OutputFormat> format;
  Figure figure = Figure::Fig2;
  /// Sweep axes in normalized units; defaults to 10 points on [1, 3] each.
  std::vector<double> delta_bars;
  std::vector<double> sigma_bars;
  double x_max = 4.0;
  int points = 201;
  bool corrupt_tolerance = false;
};

/// Flag combinations that cannot be run. Maps to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

void validate(const RunConfig& config);

/// Dispatches on config.subcommand. Throws UsageError for invalid flags.
int run(const RunConfig& config, std::ostream& out);

int cmd_verify(const RunConfig& config, std::ostream& out);
/// Writes CSV files under config.output_path and lists them on log.
std::vector<std::filesystem::path> cmd_figures(const RunConfig& config, std::ostream& log);
void cmd_optimize(const RunConfig& config, std::ostream& out);
void cmd_sweep(const RunConfig& config, std::ostream& out);
void cmd_dominance(const RunConfig& config, std::ostream& out);

/// Header delta_bar,sigma_bar,delta_AB,delta_SB,pr_min then one row each.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
std::string dominance_json(const DominanceReport& report, const EncodingParams& params);

}  // namespace cvdj::harness
