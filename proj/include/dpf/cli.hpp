// cli.hpp - command implementations behind the dpf executable
#pragma once

#include "dpf/model.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dpf::cli {

enum class Command { thermal, dynamics, zeros, qsl, oracle_check };

enum class OutputFormat { csv, json };

struct RunConfig {
  ModelSpec model = SingleQubit{};
  double theta_min = 0.0;
  double theta_max = 6.283185307179586;  // 2*pi
  int n_points = 201;
  OutputFormat format = OutputFormat::csv;
  int cap = kDefaultCap;
  UnitConvention units{};
  bool occupations = false;      // dynamics: append constant P_alpha columns
  std::vector<int> scan;         // qsl: N values for the scaling study
  int n_threads = 0;             // 0: DPF_THREADS or 1
  double zero_tol = 1e-12;
  double circle_tol = 1e-9;
};

// Exit-code contract: 0 success, 2 usage/config error, 3 numerical error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

int run_thermal(const RunConfig& cfg, std::ostream& out);
int run_dynamics(const RunConfig& cfg, std::ostream& out);
int run_zeros(const RunConfig& cfg, std::ostream& out);
int run_qsl(const RunConfig& cfg, std::ostream& out);
int run_oracle_check(const RunConfig& cfg, std::ostream& out);

// Dispatches and maps exceptions onto the exit-code contract; diagnostics go
// to err.
int run_command(Command cmd, const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace dpf::cli
