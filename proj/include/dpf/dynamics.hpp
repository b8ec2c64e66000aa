// dynamics.hpp - time series, orthogonality times, divergences, rate functions
#pragma once

#include "dpf/model.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dpf {

struct NotCriticalError : std::runtime_error {
  explicit NotCriticalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Column-wise series over a strictly increasing theta grid.  f_L is per
// degree of freedom, P = exp(-2 M f_L) is for the full system, and the rate
// column carries I = f_L.  Points on a predicted critical time are flagged
// and carry the infinity marker in f_L and the rate.
struct ObservableSeries {
  std::vector<double> theta;
  std::vector<double> f_l;
  std::vector<double> p;
  std::vector<double> rate;
  std::vector<std::uint8_t> divergent;
  int exponent = 1;
};

struct SeriesOptions {
  int n_threads = 0;  // 0: resolve from DPF_THREADS, else 1
};

ObservableSeries sample_series(const DynamicalPartitionFunction& dpf, double theta_min,
                               double theta_max, int n_points, const SeriesOptions& opts = {});

// Smallest theta > 0 at which the base has a unit-circle zero; nullopt when
// no such zero exists and the state never becomes orthogonal.
std::optional<double> first_orthogonality_time(const DynamicalPartitionFunction& dpf);

// First `count` members of the critical-time family theta_c + 2*pi*n,
// ascending.
std::vector<double> orthogonality_times(const DynamicalPartitionFunction& dpf, int count);

struct DivergenceReport {
  double theta_c = 0.0;
  double fitted_multiplicity = 0.0;  // slope of f_L against -ln(delta)
  int predicted_multiplicity = 0;    // from the zero set of the base
};

// Least-squares slope of f_L(theta_c +- delta) vs -ln(delta) over eight
// log-spaced deltas per side in [1e-4, 1e-2]; the slope estimates the zero
// multiplicity.  Throws NotCriticalError unless theta_c sits within 1e-9 of
// a predicted critical time.
DivergenceReport fit_divergence(const DynamicalPartitionFunction& dpf, double theta_c);

// Two labeled conventions for the large-deviation exponent: rate_per_dof is
// I = f_L; large_deviation_rate is 2 f_L = -(1/M) ln P.  finite_size_check
// recomputes -(1/M) ln P through the cartesian power of the base, as an
// independent route.
struct RateFunctionValue {
  double rate_per_dof = 0.0;
  double large_deviation_rate = 0.0;
  double finite_size_check = 0.0;
};

RateFunctionValue rate_function(const DynamicalPartitionFunction& dpf, double theta_t);

}  // namespace dpf
