// test_cli.cpp - command surface: formats, exit codes, determinism
#include "dpf/cli.hpp"
#include "dpf/json_io.hpp"
#include "dpf/util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

using namespace dpf;
using namespace dpf::cli;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("thermal CSV: pinned header, f(0) = 0 row, negative temperatures accepted") {
  RunConfig cfg;
  cfg.model = SingleQubit{};
  cfg.theta_min = 0.0;
  cfg.theta_max = 3.0;
  cfg.n_points = 4;
  std::ostringstream out, err;
  CHECK(run_command(Command::thermal, cfg, out, err) == kExitOk);
  const std::string text = out.str();
  CHECK(first_line(text) == "theta_beta,f_thermal,C");
  CHECK(text.find("\n0,0,0\n") != std::string::npos);

  cfg.theta_min = -2.0;
  cfg.theta_max = 2.0;
  std::ostringstream out2;
  CHECK(run_command(Command::thermal, cfg, out2, err) == kExitOk);
}

TEST_CASE("degenerate qubit thermal grid starts from the C = 0 row") {
  RunConfig cfg;
  cfg.model = DegenerateQubit{2};
  cfg.theta_min = 0.0;
  cfg.theta_max = 1.0;
  cfg.n_points = 2;
  std::ostringstream out, err;
  CHECK(run_command(Command::thermal, cfg, out, err) == kExitOk);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  double theta = -1.0, f = -1.0, c = -1.0;
  char comma = 0;
  std::istringstream(row) >> theta >> comma >> f >> comma >> c;
  CHECK(theta == 0.0);
  CHECK(std::abs(f) < 1e-13);  // thirds round; normalization contract is 1e-12
  CHECK(c == 0.0);
}

TEST_CASE("dynamics CSV marks divergences with the inf literal") {
  RunConfig cfg;
  cfg.model = SingleQubit{};
  cfg.theta_min = 0.0;
  cfg.theta_max = 6.0 * std::numbers::pi;
  cfg.n_points = 13;  // hits pi, 3 pi, 5 pi
  std::ostringstream out, err;
  CHECK(run_command(Command::dynamics, cfg, out, err) == kExitOk);
  const std::string text = out.str();
  CHECK(first_line(text) == "theta,f_L,P,I,divergent");
  int divergent_rows = 0;
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    if (line.back() == '1') {
      ++divergent_rows;
      CHECK(line.find(",inf,") != std::string::npos);
      CHECK(line.find(",0,") != std::string::npos);  // P vanishes there
    }
  }
  CHECK(divergent_rows == 3);
}

TEST_CASE("dynamics --occupations appends the constant P_alpha columns") {
  RunConfig cfg;
  cfg.model = DegenerateQubit{2};
  cfg.occupations = true;
  cfg.theta_min = 0.0;
  cfg.theta_max = 1.0;
  cfg.n_points = 3;
  std::ostringstream out, err;
  CHECK(run_command(Command::dynamics, cfg, out, err) == kExitOk);
  const std::string text = out.str();
  CHECK(first_line(text) == "theta,f_L,P,I,divergent,P_0,P_1");
  // Every row carries the same occupation tail.
  const std::string tail = "," + format_g17(2.0 / 3.0) + "," + format_g17(1.0 / 3.0);
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    CHECK(line.size() > tail.size());
    CHECK(line.compare(line.size() - tail.size(), tail.size(), tail) == 0);
  }
}

TEST_CASE("Ising chain shares the qubit divergence locations") {
  RunConfig cfg;
  cfg.model = IsingOpenChain{8};
  cfg.theta_min = 0.0;
  cfg.theta_max = 4.0 * std::numbers::pi;
  cfg.n_points = 9;
  std::ostringstream a, b, err;
  CHECK(run_command(Command::dynamics, cfg, a, err) == kExitOk);
  cfg.model = SingleQubit{};
  CHECK(run_command(Command::dynamics, cfg, b, err) == kExitOk);
  auto divergence_flags = [](const std::string& text) {
    std::string flags;
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) flags.push_back(line.back());
    return flags;
  };
  CHECK(divergence_flags(a.str()) == divergence_flags(b.str()));
}

TEST_CASE("zeros command emits the expanded zero set with critical times") {
  RunConfig cfg;
  cfg.model = IsingOpenChain{6};
  std::ostringstream out, err;
  CHECK(run_command(Command::zeros, cfg, out, err) == kExitOk);
  const auto j = ordered_json::parse(out.str());
  REQUIRE(j["roots"].size() == 1);
  CHECK(j["roots"][0]["mult"] == 5);
  CHECK(j["roots"][0]["class"] == "on_unit_circle");
  CHECK(std::abs(j["roots"][0]["re"].get<double>() + 1.0) < 1e-9);
  CHECK(j["circle_tol"] == 1e-9);
  REQUIRE(j["critical_times"].size() == 1);
  CHECK(j["critical_times"][0]["theta_c"].get<double>() == std::numbers::pi);

  cfg.model = DegenerateQubit{2};
  std::ostringstream out2;
  CHECK(run_command(Command::zeros, cfg, out2, err) == kExitOk);
  const auto j2 = ordered_json::parse(out2.str());
  CHECK(std::abs(j2["roots"][0]["re"].get<double>() + 2.0) < 1e-12);
  CHECK(j2["critical_times"].empty());
}

TEST_CASE("qsl command reports saturation and scan slopes") {
  RunConfig cfg;
  cfg.model = SingleQubit{};
  cfg.format = OutputFormat::json;
  std::ostringstream out, err;
  CHECK(run_command(Command::qsl, cfg, out, err) == kExitOk);
  const auto j = ordered_json::parse(out.str());
  CHECK(j["tau_mt"].get<double>() == std::numbers::pi);
  CHECK(j["tau_ml"].get<double>() == std::numbers::pi);
  CHECK(j["tau_perp"].get<double>() == std::numbers::pi);
  CHECK(j["saturated_mt"].get<bool>());
  CHECK(j["saturated_ml"].get<bool>());

  cfg.model = ProductChain{4};
  cfg.scan = {4, 8, 16, 32, 64};
  cfg.cap = 64;
  std::ostringstream out2;
  CHECK(run_command(Command::qsl, cfg, out2, err) == kExitOk);
  const auto j2 = ordered_json::parse(out2.str());
  CHECK(std::abs(j2["scan"]["slope_mt"].get<double>() + 0.5) < 1e-10);
  CHECK(std::abs(j2["scan"]["slope_ml"].get<double>() + 1.0) < 1e-10);

  cfg.model = DegenerateQubit{2};
  cfg.scan.clear();
  std::ostringstream out3;
  CHECK(run_command(Command::qsl, cfg, out3, err) == kExitOk);
  CHECK(ordered_json::parse(out3.str())["tau_perp"].is_null());
}

TEST_CASE("oracle-check passes in range and exits 2 beyond the cap") {
  RunConfig cfg;
  cfg.model = IsingOpenChain{10};
  std::ostringstream out, err;
  CHECK(run_command(Command::oracle_check, cfg, out, err) == kExitOk);
  const auto j = ordered_json::parse(out.str());
  CHECK(j["ok"].get<bool>());
  CHECK(j["max_rel_thermal"].get<double>() < 1e-12);
  CHECK(j["max_dev_circle"].get<double>() < 1e-12);

  cfg.model = IsingOpenChain{2};
  std::ostringstream out2;
  CHECK(run_command(Command::oracle_check, cfg, out2, err) == kExitOk);

  cfg.model = IsingOpenChain{25};
  std::ostringstream out3;
  CHECK(run_command(Command::oracle_check, cfg, out3, err) == kExitConfig);
}

TEST_CASE("config errors exit 2") {
  RunConfig cfg;
  cfg.n_points = 1;
  std::ostringstream out, err;
  CHECK(run_command(Command::thermal, cfg, out, err) == kExitConfig);

  RunConfig cap_cfg;
  cap_cfg.model = ProductChain{30};
  std::ostringstream out2;
  CHECK(run_command(Command::dynamics, cap_cfg, out2, err) == kExitConfig);
}

TEST_CASE("identical configs give byte-identical output across runs and thread counts") {
  RunConfig cfg;
  cfg.model = IsingOpenChain{9};
  cfg.theta_min = 0.0;
  cfg.theta_max = 2.0 * std::numbers::pi;
  cfg.n_points = 1025;
  auto render = [&](int threads) {
    RunConfig c = cfg;
    c.n_threads = threads;
    std::ostringstream out, err;
    REQUIRE(run_command(Command::dynamics, c, out, err) == kExitOk);
    return out.str();
  };
  const std::string once = render(1);
  CHECK(render(1) == once);
  CHECK(render(2) == once);
  CHECK(render(8) == once);
}

TEST_CASE("unit flags rescale the parameter column at the boundary") {
  RunConfig cfg;
  cfg.model = SingleQubit{};
  cfg.units = UnitConvention(2.0, 1.0);
  cfg.theta_min = 0.0;
  cfg.theta_max = 2.0;
  cfg.n_points = 3;
  std::ostringstream out, err;
  CHECK(run_command(Command::thermal, cfg, out, err) == kExitOk);
  CHECK(first_line(out.str()) == "beta,f_thermal,C");
  CHECK(out.str().find("\n0.5,") != std::string::npos);  // theta_beta = 1 at J = 2

  std::ostringstream dyn, err2;
  CHECK(run_command(Command::dynamics, cfg, dyn, err2) == kExitOk);
  CHECK(first_line(dyn.str()) == "t,f_L,P,I,divergent");
}
