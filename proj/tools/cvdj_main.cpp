#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "harness/commands.hpp"

using cvdj::harness::Figure;
using cvdj::harness::OutputFormat;
using cvdj::harness::RunConfig;
using cvdj::harness::Subcommand;

namespace {

void add_common(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--n", config.n, "Number of oracle bits")->capture_default_str();
  cmd->add_option("--p", config.p, "Momentum half-width P")->capture_default_str();
  cmd->add_option("--out", config.output_path, "Output file (directory for figures)");
}

const std::map<std::string, OutputFormat> kFormats{
    {"table", OutputFormat::Table}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

void add_format(CLI::App* cmd, RunConfig& config) {
  cmd->add_option_function<std::string>(
         "--format", [&config](const std::string& v) { config.format = kFormats.at(v); },
         "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian continuous-variable Deutsch-Jozsa toolkit"};
  app.require_subcommand(1);
  RunConfig config;

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_flag("--corrupt-tolerance", config.corrupt_tolerance)->group("");

  auto* figures = app.add_subcommand("figures", "Write figure data as CSV");
  std::string which = "fig2";
  figures->add_option("which", which, "fig2, fig3 or fig4")
      ->check(CLI::IsMember({"fig2", "fig3", "fig4"}))
      ->capture_default_str();
  add_common(figures, config);
  figures->add_option("--x-max", config.x_max, "fig2 grid upper end")->capture_default_str();
  figures->add_option("--points", config.points, "fig2 grid size")->capture_default_str();

  auto* optimize = app.add_subcommand("optimize", "Find the equalized optimum");
  add_common(optimize, config);
  add_format(optimize, config);

  auto* sweep = app.add_subcommand("sweep", "Tabulate separations over a grid");
  add_common(sweep, config);
  add_format(sweep, config);
  sweep->add_option("--sigma", config.sigma, "Single sigma (scaled by P)");
  sweep->add_option("--delta", config.delta, "Single delta (scaled by P)");
  sweep->add_option("--delta-bars", config.delta_bars, "Normalized window grid")->delimiter(',');
  sweep->add_option("--sigma-bars", config.sigma_bars, "Normalized width grid")->delimiter(',');

  auto* dominance = app.add_subcommand("dominance", "Brute-force dominance scan");
  add_common(dominance, config);
  add_format(dominance, config);
  dominance->add_option("--sigma", config.sigma, "Gaussian width")->required();
  dominance->add_option("--x-max", config.x_max, "Grid upper end")->capture_default_str();
  dominance->add_option("--points", config.points, "Grid size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cvdj::harness::kExitUsage;
  }

  if (verify->parsed()) config.subcommand = Subcommand::Verify;
  if (figures->parsed()) {
    config.subcommand = Subcommand::Figures;
    config.figure = which == "fig2" ? Figure::Fig2 : which == "fig3" ? Figure::Fig3 : Figure::Fig4;
  }
  if (optimize->parsed()) config.subcommand = Subcommand::Optimize;
  if (sweep->parsed()) config.subcommand = Subcommand::Sweep;
  if (dominance->parsed()) config.subcommand = Subcommand::Dominance;

  try {
    return cvdj::harness::run(config, std::cout);
  } catch (const cvdj::harness::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return cvdj::harness::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cvdj::harness::kExitFailure;
  }
}
