// qsl.hpp - quantum speed limits: MT/ML bounds, saturation, N-scaling
#pragma once

#include "dpf/model.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace dpf {

struct InsufficientPointsError : std::runtime_error {
  explicit InsufficientPointsError(const std::string& msg) : std::runtime_error(msg) {}
};

// Per-degree-of-freedom and total-system energy statistics, in units of J.
// The bounds consume the total values; observables use the densities.
// Keeping both explicit avoids mixing the two conventions.
struct EnergyStats {
  double mean_excitation = 0.0;        // <epsilon> = <H> - E_ground per dof
  double std_dev = 0.0;                // Delta H per dof
  double total_mean_excitation = 0.0;  // M * <epsilon>
  double total_std_dev = 0.0;          // sqrt(M) * Delta H
  int exponent = 1;
};

EnergyStats energy_stats(const DynamicalPartitionFunction& dpf);

// tau_MT = pi / (2 DeltaH_tot); +inf marker when the variance vanishes
// (frozen state, no evolution).
double mt_bound(const EnergyStats& stats);

// tau_ML = pi / (2 <epsilon>_tot); +inf marker when the mean excitation
// vanishes.
double ml_bound(const EnergyStats& stats);

struct QslReport {
  double tau_mt = 0.0;
  double tau_ml = 0.0;
  double tau_bound = 0.0;  // max of the two
  std::optional<double> tau_perp;
  bool saturated_mt = false;  // |tau_perp - tau_mt| <= 1e-9
  bool saturated_ml = false;
};

QslReport qsl_report(const DynamicalPartitionFunction& dpf);

enum class ModelFamily { product_chain, ising_open_chain };

struct ScalingStudy {
  double slope_mt = 0.0;  // d ln(tau_MT) / d ln(M); -1/2 for product structure
  double slope_ml = 0.0;  // -1 for product structure
  std::vector<int> n_values;
};

// Least-squares slopes of ln(tau) against ln(M) over the family; needs at
// least 4 distinct N values, each within the cap.
ScalingStudy scaling_study(ModelFamily family, const std::vector<int>& n_list,
                           int cap = kDefaultCap);

}  // namespace dpf
