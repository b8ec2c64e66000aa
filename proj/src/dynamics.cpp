// dynamics.cpp - series sampling and divergence analysis
#include "dpf/dynamics.hpp"

#include "dpf/analytic.hpp"
#include "dpf/util.hpp"
#include "dpf/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dpf {

ObservableSeries sample_series(const DynamicalPartitionFunction& dpf, double theta_min,
                               double theta_max, int n_points, const SeriesOptions& opts) {
  if (n_points < 2) throw std::invalid_argument("sample_series: need at least 2 points");
  if (!(theta_min < theta_max)) throw std::invalid_argument("sample_series: empty theta range");

  const std::vector<double> angles = unit_circle_zero_angles(dpf.base);
  const double step = (theta_max - theta_min) / static_cast<double>(n_points - 1);
  const auto n = static_cast<std::size_t>(n_points);

  ObservableSeries s;
  s.exponent = dpf.exponent;
  s.theta.resize(n);
  s.f_l.resize(n);
  s.p.resize(n);
  s.rate.resize(n);
  s.divergent.resize(n);

  const double two_m = 2.0 * static_cast<double>(dpf.exponent);
  parallel_chunks(n, 1024, opts.n_threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double theta = theta_min + static_cast<double>(i) * step;
      const double fl = f_L_at(dpf, theta, angles);
      s.theta[i] = theta;
      s.f_l[i] = fl;
      s.divergent[i] = std::isinf(fl) ? 1 : 0;
      s.p[i] = std::isinf(fl) ? 0.0 : std::exp(-two_m * fl);
      s.rate[i] = fl;
    }
  });
  return s;
}

std::optional<double> first_orthogonality_time(const DynamicalPartitionFunction& dpf) {
  if (dpf.base.degree() == 0) return std::nullopt;
  const auto critical = predict_critical_times(find_zeros(dpf.base));
  if (critical.empty()) return std::nullopt;
  double best = std::numeric_limits<double>::infinity();
  for (const CriticalTime& t : critical) best = std::min(best, t.theta_c > 0.0 ? t.theta_c : kTwoPi);
  return best;
}

std::vector<double> orthogonality_times(const DynamicalPartitionFunction& dpf, int count) {
  std::vector<double> out;
  if (count <= 0 || dpf.base.degree() == 0) return out;
  const auto critical = predict_critical_times(find_zeros(dpf.base));
  if (critical.empty()) return out;
  for (const CriticalTime& t : critical) {
    for (int n = 0; n <= count; ++n) {  // one spare in case theta_c = 0 itself is skipped
      const double theta = t.theta_c + kTwoPi * static_cast<double>(n);
      if (theta > 0.0) out.push_back(theta);
    }
  }
  std::sort(out.begin(), out.end());
  out.resize(static_cast<std::size_t>(count));
  return out;
}

DivergenceReport fit_divergence(const DynamicalPartitionFunction& dpf, double theta_c) {
  const auto critical = predict_critical_times(find_zeros(dpf.base));
  const CriticalTime* match = nullptr;
  for (const CriticalTime& t : critical) {
    if (angle_distance(theta_c, t.theta_c) <= 1e-9) {
      match = &t;
      break;
    }
  }
  if (match == nullptr)
    throw NotCriticalError("fit_divergence: theta_c is not a predicted critical time");

  // f_L ~ -m ln|theta - theta_c| + analytic remainder inside the window.
  constexpr int kSamplesPerSide = 8;
  std::vector<double> xs, ys;
  const std::vector<double> angles = unit_circle_zero_angles(dpf.base);
  for (int j = 0; j < kSamplesPerSide; ++j) {
    const double delta = std::pow(10.0, -4.0 + 2.0 * static_cast<double>(j) / (kSamplesPerSide - 1));
    for (double side : {-1.0, 1.0}) {
      xs.push_back(-std::log(delta));
      ys.push_back(f_L_at(dpf, theta_c + side * delta, angles));
    }
  }
  return {theta_c, least_squares_slope(xs, ys), match->multiplicity};
}

RateFunctionValue rate_function(const DynamicalPartitionFunction& dpf, double theta_t) {
  const double fl = f_L(dpf, theta_t);
  RateFunctionValue out;
  out.rate_per_dof = fl;
  out.large_deviation_rate = 2.0 * fl;
  const ComplexValue l = eval_L(dpf, circle_point(theta_t));
  const double p_cartesian = std::norm(l.value);
  out.finite_size_check = (std::isfinite(p_cartesian) && p_cartesian > 0.0)
                              ? -std::log(p_cartesian) / static_cast<double>(dpf.exponent)
                              : out.large_deviation_rate;
  return out;
}

}  // namespace dpf
