#include "harness/commands.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cvdj/measure.hpp"
#include "cvdj/position.hpp"
#include "harness/acceptance.hpp"
#include "harness/format.hpp"

namespace cvdj::harness {
namespace {

constexpr std::array<double, 4> kFig2Sigmas{0.4, 0.6, 0.8, 1.0};
constexpr std::array<double, 4> kFig3SigmaBars{1.67, 2.11, 2.5, 3.0};

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[i] = lo + (hi - lo) * i / (count - 1);
  return v;
}

OutputFormat format_or(const RunConfig& config, OutputFormat fallback) {
  return config.format.value_or(fallback);
}

template <class Write>
void to_target(const std::string& path, std::ostream& out, Write&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  write(file);
  if (!file) throw std::runtime_error("write failed: " + path);
}

std::filesystem::path write_file(const std::filesystem::path& path,
                                 const std::function<void(std::ostream&)>& write) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write(file);
  if (!file) throw std::runtime_error("write failed: " + path.string());
  return path;
}

std::string sigma_tag(double sigma) {
  std::ostringstream os;
  os << sigma;
  return os.str();
}

nlohmann::json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

std::vector<std::filesystem::path> figure2(const RunConfig& config,
                                           const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  const auto strings = enumerate_balanced(config.n);
  const auto xs = linspace(0.0, config.x_max, config.points);
  for (double sigma : kFig2Sigmas) {
    const EncodingParams params(config.n, config.p, sigma);
    files.push_back(write_file(dir / ("fig2_sigma_" + sigma_tag(sigma) + ".csv"),
                               [&](std::ostream& os) {
      os << "x,string,class,bold,abs_m\n";
      for (double x : xs) {
        const EdgeValues edges(params, x);
        const double grow = std::exp(x * x / (2.0 * sigma * sigma));
        for (const auto& z : strings) {
          const auto cls = classify(z);
          const bool bold = cls == StringClass::SymBalanced || cls == StringClass::AntisymBalanced;
          const std::string s = z.str();
          write_csv_row(os, {x, s, short_name(cls), static_cast<long long>(bold),
                             std::abs(edges.scaled_modulation(z)) * grow});
        }
      }
    }));
  }
  return files;
}

std::vector<std::filesystem::path> figure3(const RunConfig& config,
                                           const std::filesystem::path& dir) {
  if (config.n != kOptimizerBits) {
    throw UsageError("figures fig3: stationary windows are defined for --n 8 only");
  }
  std::vector<std::filesystem::path> files;
  const double P = config.p;
  const auto xs = linspace(-6.0 / P, 6.0 / P, 601);
  const auto c = canonical(StringClass::Constant, config.n).first;
  const auto ab = canonical(StringClass::AntisymBalanced, config.n).first;
  const auto sb = canonical(StringClass::SymBalanced, config.n).first;
  for (double sigma_bar : kFig3SigmaBars) {
    const EncodingParams params(config.n, P, sigma_bar / P);
    files.push_back(write_file(dir / ("fig3_sigma_" + sigma_tag(sigma_bar) + ".csv"),
                               [&](std::ostream& os) {
      os << "x,density_AB,density_SB,density_C\n";
      for (double x : xs) {
        write_csv_row(os, {x, std::norm(position_wave({ab, params}, x)),
                           std::norm(position_wave({sb, params}, x)),
                           std::norm(position_wave({c, params}, x))});
      }
    }));
  }
  files.push_back(write_file(dir / "fig3_verticals.csv", [&](std::ostream& os) {
    os << "sigma_bar,delta_AB,delta_SB,optimal\n";
    for (std::size_t i = 0; i < kFig3SigmaBars.size(); ++i) {
      const double s = kFig3SigmaBars[i];
      write_csv_row(os, {s, stationary_delta(s, Branch::AB) / P,
                         stationary_delta(s, Branch::SB) / P, static_cast<long long>(i == 0)});
    }
  }));
  return files;
}

std::vector<std::filesystem::path> figure4(const RunConfig& config,
                                           const std::filesystem::path& dir) {
  const double P = config.p;
  const auto optimum = find_optimum();
  const EncodingParams params(config.n, P, optimum.sigma_bar / P);
  const auto c = canonical(StringClass::Constant, config.n).first;
  std::vector<std::filesystem::path> files;
  files.push_back(write_file(dir / "fig4_momentum.csv", [&](std::ostream& os) {
    os << "p,gaussian,tophat\n";
    for (double p : linspace(-1.5 * P, 1.5 * P, 601)) {
      write_csv_row(os, {p, encoded_momentum(c, p, params), tophat_momentum(c, p, P)});
    }
  }));
  files.push_back(write_file(dir / "fig4_position.csv", [&](std::ostream& os) {
    os << "x,density_gaussian,density_orthogonal\n";
    for (double x : linspace(-8.0 / P, 8.0 / P, 801)) {
      write_csv_row(os, {x, std::norm(position_wave({c, params}, x)),
                         std::norm(orthogonal_position_wave(c, x, P))});
    }
  }));
  files.push_back(write_file(dir / "fig4_windows.csv", [&](std::ostream& os) {
    os << "encoding,delta\n";
    write_csv_row(os, {std::string_view("orthogonal"), std::numbers::pi / (2.0 * P)});
    write_csv_row(os, {std::string_view("gaussian"), optimum.delta_bar / P});
  }));
  return files;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.n < 2 || config.n % 2 != 0) throw UsageError("--n must be even and >= 2");
  if (!(config.p > 0.0) || !std::isfinite(config.p)) throw UsageError("--p must be positive");
  if (config.sigma && !(*config.sigma > 0.0)) throw UsageError("--sigma must be positive");
  if (config.delta && !(*config.delta > 0.0)) throw UsageError("--delta must be positive");
  for (double v : config.delta_bars) {
    if (!(v > 0.0)) throw UsageError("--delta-bars entries must be positive");
  }
  for (double v : config.sigma_bars) {
    if (!(v > 0.0)) throw UsageError("--sigma-bars entries must be positive");
  }
  switch (config.subcommand) {
    case Subcommand::Verify:
      if (config.format && *config.format != OutputFormat::Table) {
        throw UsageError("verify prints a table; --format is not supported");
      }
      break;
    case Subcommand::Figures:
      if (config.format && *config.format != OutputFormat::Csv) {
        throw UsageError("figures writes csv only");
      }
      if (config.n > kMaxBruteForceBits || config.n % 4 != 0) {
        throw UsageError("figures needs --n divisible by 4 and <= 12");
      }
      if (config.points < 2 || !(config.x_max > 0.0)) {
        throw UsageError("--points must be >= 2 and --x-max positive");
      }
      break;
    case Subcommand::Optimize:
      if (config.n != kOptimizerBits) throw UsageError("optimize runs at --n 8");
      break;
    case Subcommand::Sweep:
      if (config.n != kOptimizerBits) throw UsageError("sweep runs at --n 8");
      if (config.format == OutputFormat::Table) throw UsageError("sweep writes csv or json");
      break;
    case Subcommand::Dominance:
      if (!config.sigma) throw UsageError("dominance requires --sigma");
      if (config.n > kMaxBruteForceBits || config.n % 4 != 0) {
        throw UsageError("dominance needs --n divisible by 4 and <= 12");
      }
      if (config.points < 2 || !(config.x_max > 0.0)) {
        throw UsageError("--points must be >= 2 and --x-max positive");
      }
      if (config.format == OutputFormat::Table) throw UsageError("dominance writes json or csv");
      break;
  }
}

int run(const RunConfig& config, std::ostream& out) {
  validate(config);
  switch (config.subcommand) {
    case Subcommand::Verify:
      return cmd_verify(config, out);
    case Subcommand::Figures:
      cmd_figures(config, out);
      return kExitPass;
    case Subcommand::Optimize:
      cmd_optimize(config, out);
      return kExitPass;
    case Subcommand::Sweep:
      cmd_sweep(config, out);
      return kExitPass;
    case Subcommand::Dominance:
      cmd_dominance(config, out);
      return kExitPass;
  }
  return kExitUsage;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  AcceptanceOptions options;
  options.corrupt_tolerance = config.corrupt_tolerance;
  const auto rows = run_acceptance(options);
  print_results(out, rows);
  const bool ok = all_pass(rows);
  int failures = 0;
  for (const auto& r : rows) failures += (!r.informational && !r.pass) ? 1 : 0;
  out << (ok ? "all criteria passed" : std::to_string(failures) + " check(s) failed") << '\n';
  return ok ? kExitPass : kExitFailure;
}

std::vector<std::filesystem::path> cmd_figures(const RunConfig& config, std::ostream& log) {
  const std::filesystem::path dir = config.output_path.empty() ? "figures" : config.output_path;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> files;
  switch (config.figure) {
    case Figure::Fig2: files = figure2(config, dir); break;
    case Figure::Fig3: files = figure3(config, dir); break;
    case Figure::Fig4: files = figure4(config, dir); break;
  }
  for (const auto& f : files) log << f.string() << '\n';
  return files;
}

void cmd_optimize(const RunConfig& config, std::ostream& out) {
  const auto report = find_optimum();
  const double P = config.p;
  to_target(config.output_path, out, [&](std::ostream& os) {
    switch (format_or(config, OutputFormat::Table)) {
      case OutputFormat::Table: {
        const auto row = [&](const std::string& label, const std::string& value) {
          os << label << std::string(label.size() < 20 ? 20 - label.size() : 1, ' ') << value
             << '\n';
        };
        const std::string tag = "(P=" + format_double(P) + ")";
        row("delta_bar", format_fixed(report.delta_bar, 6));
        row("sigma_bar", format_fixed(report.sigma_bar, 6));
        row("delta " + tag, format_fixed(report.delta_bar / P, 6));
        row("sigma " + tag, format_fixed(report.sigma_bar / P, 6));
        row("pr_success", format_fixed(report.pr_success, 6));
        row("resid_stationarity", format_double(report.resid_stationarity));
        row("resid_equalize", format_double(report.resid_equalize));
        for (const auto& w : report.warnings) os << "warning: " << w << '\n';
        break;
      }
      case OutputFormat::Csv:
        os << "delta_bar,sigma_bar,pr_success,resid_stationarity,resid_equalize\n";
        write_csv_row(os, {report.delta_bar, report.sigma_bar, report.pr_success,
                           report.resid_stationarity, report.resid_equalize});
        break;
      case OutputFormat::Json: {
        nlohmann::json j{{"delta_bar", report.delta_bar},
                         {"sigma_bar", report.sigma_bar},
                         {"pr_success", report.pr_success},
                         {"resid_stationarity", report.resid_stationarity},
                         {"resid_equalize", report.resid_equalize},
                         {"warnings", report.warnings}};
        os << j.dump(2) << '\n';
        break;
      }
    }
  });
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "delta_bar,sigma_bar,delta_AB,delta_SB,pr_min\n";
  for (const auto& r : rows) {
    write_csv_row(out, {r.delta_bar, r.sigma_bar, r.delta_ab, r.delta_sb, r.pr_min});
  }
}

void cmd_sweep(const RunConfig& config, std::ostream& out) {
  auto deltas = config.delta_bars;
  auto sigmas = config.sigma_bars;
  if (config.delta) deltas = {*config.delta * config.p};
  if (config.sigma) sigmas = {*config.sigma * config.p};
  if (deltas.empty()) deltas = linspace(1.0, 3.0, 10);
  if (sigmas.empty()) sigmas = linspace(1.0, 3.0, 10);
  std::vector<NormalizedParams> grid;
  grid.reserve(deltas.size() * sigmas.size());
  for (double s : sigmas) {
    for (double d : deltas) grid.emplace_back(d, s);
  }
  const auto rows = sweep(grid);
  to_target(config.output_path, out, [&](std::ostream& os) {
    if (format_or(config, OutputFormat::Csv) == OutputFormat::Json) {
      auto arr = nlohmann::json::array();
      for (const auto& r : rows) {
        arr.push_back({{"delta_bar", r.delta_bar},
                       {"sigma_bar", r.sigma_bar},
                       {"delta_AB", r.delta_ab},
                       {"delta_SB", r.delta_sb},
                       {"pr_min", r.pr_min}});
      }
      os << arr.dump(2) << '\n';
    } else {
      write_sweep_csv(os, rows);
    }
  });
}

std::string dominance_json(const DominanceReport& report, const EncodingParams& params) {
  nlohmann::json classes = nlohmann::json::array();
  for (auto c : report.argmax_class) classes.push_back(std::string(to_string(c)));
  nlohmann::json j{{"n", params.n()},
                   {"half_width", params.half_width()},
                   {"sigma", params.sigma()},
                   {"x_grid", report.x_grid},
                   {"argmax_class", classes},
                   {"x_c_numeric", finite_or_null(report.x_c_numeric)},
                   {"x_c_approx", finite_or_null(report.x_c_approx)},
                   {"crossover_found", report.crossover_found},
                   {"sb_ab_only", report.sb_ab_only},
                   {"single_crossover", report.single_crossover}};
  return j.dump(2);
}

void cmd_dominance(const RunConfig& config, std::ostream& out) {
  const EncodingParams params(config.n, config.p, *config.sigma);
  const auto report = verify_dominance(params, config.x_max, config.points);
  to_target(config.output_path, out, [&](std::ostream& os) {
    if (format_or(config, OutputFormat::Json) == OutputFormat::Csv) {
      os << "x,argmax_class\n";
      for (std::size_t i = 0; i < report.x_grid.size(); ++i) {
        write_csv_row(os, {report.x_grid[i], to_string(report.argmax_class[i])});
      }
    } else {
      os << dominance_json(report, params) << '\n';
    }
  });
}

}  // namespace cvdj::harness
