#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "harness/acceptance.hpp"
#include "harness/commands.hpp"
#include "harness/format.hpp"

namespace cvdj::harness {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) rows.push_back(split(line));
  return rows;
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  return read_csv(in);
}

class ScratchDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("cvdj_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST(Format, ShortestRoundTrip) {
  for (double v : {0.1, 2.0 / 3.0, 1e-300, 123456.789, -0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  std::ostringstream os;
  write_csv_row(os, {1.5, 2LL, std::string_view("AB")});
  EXPECT_EQ(os.str(), "1.5,2,AB\n");
}

TEST(Validate, UsageErrors) {
  RunConfig dom;
  dom.subcommand = Subcommand::Dominance;
  EXPECT_THROW(validate(dom), UsageError);
  dom.sigma = 0.4;
  EXPECT_NO_THROW(validate(dom));
  dom.n = 10;
  EXPECT_THROW(validate(dom), UsageError);

  RunConfig opt;
  opt.subcommand = Subcommand::Optimize;
  opt.n = 6;
  EXPECT_THROW(validate(opt), UsageError);
  opt.n = 8;
  opt.p = -1.0;
  EXPECT_THROW(validate(opt), UsageError);

  RunConfig sw;
  sw.subcommand = Subcommand::Sweep;
  sw.sigma_bars = {1.0, -2.0};
  EXPECT_THROW(validate(sw), UsageError);
}

TEST(Optimize, TableAndJson) {
  RunConfig config;
  config.subcommand = Subcommand::Optimize;
  std::ostringstream table;
  EXPECT_EQ(run(config, table), kExitPass);
  EXPECT_NE(table.str().find("delta_bar           2.00"), std::string::npos) << table.str();
  EXPECT_NE(table.str().find("sigma_bar           1.66"), std::string::npos) << table.str();
  EXPECT_NE(table.str().find("pr_success          0.679"), std::string::npos) << table.str();

  config.format = OutputFormat::Json;
  std::ostringstream js;
  run(config, js);
  const auto j = nlohmann::json::parse(js.str());
  EXPECT_NEAR(j.at("delta_bar").get<double>(), 2.01, 0.02);
  EXPECT_NEAR(j.at("sigma_bar").get<double>(), 1.67, 0.02);
  EXPECT_NEAR(j.at("pr_success").get<double>(), 0.68, 0.01);
  EXPECT_TRUE(j.contains("resid_stationarity"));
  EXPECT_TRUE(j.contains("resid_equalize"));
}

TEST(Sweep, CsvContractAndDeterminism) {
  RunConfig config;
  config.subcommand = Subcommand::Sweep;
  config.delta_bars = {1.5, 2.01};
  config.sigma_bars = {1.67, 2.5, 3.0};
  std::ostringstream first;
  std::ostringstream second;
  run(config, first);
  run(config, second);
  EXPECT_EQ(first.str(), second.str());

  std::istringstream in(first.str());
  const auto rows = read_csv(in);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"delta_bar", "sigma_bar", "delta_AB", "delta_SB",
                                               "pr_min"}));
  std::vector<NormalizedParams> grid;
  for (double s : config.sigma_bars) {
    for (double d : config.delta_bars) grid.emplace_back(d, s);
  }
  const auto expected = sweep(grid);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& r = rows[i + 1];
    ASSERT_EQ(r.size(), 5u);
    EXPECT_EQ(std::stod(r[0]), expected[i].delta_bar);
    EXPECT_EQ(std::stod(r[1]), expected[i].sigma_bar);
    EXPECT_EQ(std::stod(r[2]), expected[i].delta_ab);
    EXPECT_EQ(std::stod(r[3]), expected[i].delta_sb);
    EXPECT_EQ(std::stod(r[4]), expected[i].pr_min);
  }
}

TEST(Sweep, PhysicalFlagsScaleByHalfWidth) {
  RunConfig config;
  config.subcommand = Subcommand::Sweep;
  config.p = 2.0;
  config.delta = 1.005;
  config.sigma = 0.835;
  std::ostringstream os;
  run(config, os);
  std::istringstream in(os.str());
  const auto rows = read_csv(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_DOUBLE_EQ(std::stod(rows[1][0]), 2.01);
  EXPECT_DOUBLE_EQ(std::stod(rows[1][1]), 1.67);
}

TEST(Dominance, JsonFields) {
  RunConfig config;
  config.subcommand = Subcommand::Dominance;
  config.sigma = 0.4;
  std::ostringstream os;
  EXPECT_EQ(run(config, os), kExitPass);
  const auto j = nlohmann::json::parse(os.str());
  EXPECT_NEAR(j.at("x_c_numeric").get<double>(), 0.0408, 1e-4);
  EXPECT_NEAR(j.at("x_c_approx").get<double>(), 0.16 / 3.84, 1e-12);
  EXPECT_EQ(j.at("x_grid").size(), 201u);
  EXPECT_EQ(j.at("argmax_class").size(), 201u);
  EXPECT_EQ(j.at("argmax_class").front(), "SymBalanced");
  EXPECT_TRUE(j.at("crossover_found").get<bool>());
}

TEST(Dominance, NoCrossoverSerializesNull) {
  RunConfig config;
  config.subcommand = Subcommand::Dominance;
  config.sigma = 0.6;
  config.x_max = 0.05;
  config.points = 11;
  std::ostringstream os;
  run(config, os);
  const auto j = nlohmann::json::parse(os.str());
  EXPECT_TRUE(j.at("x_c_numeric").is_null());
  EXPECT_FALSE(j.at("crossover_found").get<bool>());
}

TEST_F(ScratchDir, Fig2HasAllBalancedCurves) {
  RunConfig config;
  config.subcommand = Subcommand::Figures;
  config.figure = Figure::Fig2;
  config.output_path = dir_.string();
  config.points = 21;
  std::ostringstream log;
  ASSERT_EQ(run(config, log), kExitPass);
  const auto files = cmd_figures(config, log);
  ASSERT_EQ(files.size(), 4u);
  const auto rows = read_csv(files.front());
  EXPECT_EQ(rows[0], (std::vector<std::string>{"x", "string", "class", "bold", "abs_m"}));
  ASSERT_EQ(rows.size(), 1u + 21u * 70u);
  std::set<std::string> strings;
  std::map<std::string, int> bold;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][0] != "0") continue;
    strings.insert(rows[i][1]);
    if (rows[i][3] == "1") ++bold[rows[i][2]];
  }
  EXPECT_EQ(strings.size(), 70u);
  EXPECT_EQ(bold["AB"], 2);
  EXPECT_EQ(bold["SB"], 2);
  EXPECT_EQ(bold.size(), 2u);
}

TEST_F(ScratchDir, Fig3PanelsAndVerticals) {
  RunConfig config;
  config.subcommand = Subcommand::Figures;
  config.figure = Figure::Fig3;
  config.output_path = dir_.string();
  std::ostringstream log;
  const auto files = cmd_figures(config, log);
  ASSERT_EQ(files.size(), 5u);
  EXPECT_EQ(read_csv(files.front())[0],
            (std::vector<std::string>{"x", "density_AB", "density_SB", "density_C"}));
  const auto verticals = read_csv(dir_ / "fig3_verticals.csv");
  ASSERT_EQ(verticals.size(), 5u);
  EXPECT_EQ(verticals[1][0], "1.67");
  EXPECT_EQ(verticals[1][3], "1");
  EXPECT_NEAR(std::stod(verticals[1][1]), 2.01, 0.02);
  EXPECT_NEAR(std::stod(verticals[2][1]), std::stod(verticals[2][2]), 0.02);
  for (std::size_t i = 2; i < verticals.size(); ++i) EXPECT_EQ(verticals[i][3], "0");
}

TEST_F(ScratchDir, Fig4Windows) {
  RunConfig config;
  config.subcommand = Subcommand::Figures;
  config.figure = Figure::Fig4;
  config.output_path = dir_.string();
  std::ostringstream log;
  cmd_figures(config, log);
  const auto windows = read_csv(dir_ / "fig4_windows.csv");
  ASSERT_EQ(windows.size(), 3u);
  EXPECT_EQ(windows[1][0], "orthogonal");
  EXPECT_EQ(windows[2][0], "gaussian");
  EXPECT_GT(std::stod(windows[2][1]), std::stod(windows[1][1]));
  EXPECT_EQ(read_csv(dir_ / "fig4_momentum.csv")[0],
            (std::vector<std::string>{"p", "gaussian", "tophat"}));
  EXPECT_EQ(read_csv(dir_ / "fig4_position.csv")[0],
            (std::vector<std::string>{"x", "density_gaussian", "density_orthogonal"}));
}

TEST_F(ScratchDir, FiguresAreByteIdenticalAcrossRuns) {
  RunConfig config;
  config.subcommand = Subcommand::Figures;
  config.figure = Figure::Fig3;
  config.output_path = (dir_ / "a").string();
  std::ostringstream log;
  const auto a = cmd_figures(config, log);
  config.output_path = (dir_ / "b").string();
  const auto b = cmd_figures(config, log);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::ifstream fa(a[i], std::ios::binary);
    std::ifstream fb(b[i], std::ios::binary);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    EXPECT_EQ(sa.str(), sb.str()) << a[i];
  }
}

TEST(Figures, UnwritableDirectoryReportsPath) {
  RunConfig config;
  config.subcommand = Subcommand::Figures;
  config.output_path = "/proc/cvdj_no_such_dir";
  std::ostringstream log;
  try {
    cmd_figures(config, log);
    FAIL() << "expected failure";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/proc/cvdj_no_such_dir"), std::string::npos);
  }
}

TEST(Acceptance, CorruptedToleranceFails) {
  const auto good = run_criterion(1);
  EXPECT_TRUE(all_pass(good));
  AcceptanceOptions corrupt;
  corrupt.corrupt_tolerance = true;
  const auto bad = run_criterion(1, corrupt);
  EXPECT_FALSE(all_pass(bad));
  std::ostringstream os;
  print_results(os, bad);
  EXPECT_EQ(os.str().rfind("[FAIL] 1", 0), 0u) << os.str();
  EXPECT_THROW(run_criterion(9), std::out_of_range);
}

TEST(Acceptance, InformationalRowsDoNotGate) {
  std::vector<CriterionResult> rows{{1, "a", "", "", true, 0.0},
                                    {1, "b", "", "", false, 0.0, true}};
  EXPECT_TRUE(all_pass(rows));
  rows.push_back({2, "c", "", "", false, 0.0});
  EXPECT_FALSE(all_pass(rows));
}

}  // namespace
}  // namespace cvdj::harness
