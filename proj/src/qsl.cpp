// qsl.cpp - Mandelstam-Tamm and Margolus-Levitin bounds
#include "dpf/qsl.hpp"

#include "dpf/dynamics.hpp"
#include "dpf/util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace dpf {

EnergyStats energy_stats(const DynamicalPartitionFunction& dpf) {
  const auto k_ground = static_cast<double>(dpf.base.degree());
  const double mean_k = dpf.base.mean_level();
  const double var_k = std::max(0.0, dpf.base.level_variance());
  const auto m = static_cast<double>(dpf.exponent);
  EnergyStats s;
  // E_k = -k J, ground at -K J: <epsilon> = K - <k>; Var(E) = Var(k) in J^2.
  s.mean_excitation = k_ground - mean_k;
  s.std_dev = std::sqrt(var_k);
  // The M factors are independent, so means add and variances add.
  s.total_mean_excitation = m * s.mean_excitation;
  s.total_std_dev = std::sqrt(m) * s.std_dev;
  s.exponent = dpf.exponent;
  return s;
}

double mt_bound(const EnergyStats& stats) {
  if (stats.total_std_dev == 0.0) return std::numeric_limits<double>::infinity();
  return std::numbers::pi / (2.0 * stats.total_std_dev);
}

double ml_bound(const EnergyStats& stats) {
  if (stats.total_mean_excitation == 0.0) return std::numeric_limits<double>::infinity();
  return std::numbers::pi / (2.0 * stats.total_mean_excitation);
}

QslReport qsl_report(const DynamicalPartitionFunction& dpf) {
  const EnergyStats stats = energy_stats(dpf);
  QslReport r;
  r.tau_mt = mt_bound(stats);
  r.tau_ml = ml_bound(stats);
  r.tau_bound = std::max(r.tau_mt, r.tau_ml);
  r.tau_perp = first_orthogonality_time(dpf);
  if (r.tau_perp.has_value()) {
    const double tp = *r.tau_perp;
    if (tp < r.tau_bound - 1e-9)
      throw std::logic_error("qsl_report: measured orthogonality time beats a valid lower bound");
    r.saturated_mt = std::abs(tp - r.tau_mt) <= 1e-9;
    r.saturated_ml = std::abs(tp - r.tau_ml) <= 1e-9;
  }
  return r;
}

ScalingStudy scaling_study(ModelFamily family, const std::vector<int>& n_list, int cap) {
  const std::set<int> distinct(n_list.begin(), n_list.end());
  if (distinct.size() < 4)
    throw InsufficientPointsError("scaling_study: need at least 4 distinct N values");

  std::vector<double> log_m, log_mt, log_ml;
  ScalingStudy out;
  for (int n : distinct) {
    const ModelSpec spec = (family == ModelFamily::product_chain)
                               ? ModelSpec{ProductChain{n}}
                               : ModelSpec{IsingOpenChain{n}};
    const DynamicalPartitionFunction dpf = compile_model(spec, cap);
    const EnergyStats stats = energy_stats(dpf);
    log_m.push_back(std::log(static_cast<double>(dpf.exponent)));
    log_mt.push_back(std::log(mt_bound(stats)));
    log_ml.push_back(std::log(ml_bound(stats)));
    out.n_values.push_back(n);
  }
  out.slope_mt = least_squares_slope(log_m, log_mt);
  out.slope_ml = least_squares_slope(log_m, log_ml);
  return out;
}

}  // namespace dpf
