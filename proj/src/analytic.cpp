// analytic.cpp - evaluation of L(y) along both physical paths
#include "dpf/analytic.hpp"

#include "dpf/util.hpp"
#include "dpf/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dpf {

namespace {

using cd = std::complex<double>;

cd pow_by_squaring(cd b, int m) {
  cd acc{1.0, 0.0};
  while (m > 0) {
    if (m & 1) acc *= b;
    m >>= 1;
    if (m) b *= b;
  }
  return acc;
}

}  // namespace

ComplexValue eval_L(const DynamicalPartitionFunction& dpf, std::complex<double> y) {
  const cd b = dpf.base(y);
  const double ab = std::abs(b);
  if (ab <= kExactZeroAbsTol) {
    return {cd{0.0, 0.0}, -std::numeric_limits<double>::infinity(), 0.0, true};
  }
  const int m = dpf.exponent;
  ComplexValue out;
  out.value = (m == 1) ? b : pow_by_squaring(b, m);
  out.log_abs = static_cast<double>(m) * std::log(ab);
  out.arg = reduce_angle(static_cast<double>(m) * std::arg(b));
  return out;
}

double f_thermal(const DynamicalPartitionFunction& dpf, double theta_beta) {
  return 0.0 - dpf.base.log_value_exp_axis(theta_beta);
}

double f_L_at(const DynamicalPartitionFunction& dpf, double theta_t,
              std::span<const double> circle_zero_angles) {
  for (double a : circle_zero_angles) {
    if (angle_distance(theta_t, a) <= kDivergenceThetaTol)
      return std::numeric_limits<double>::infinity();
  }
  const double ab = std::abs(dpf.base(circle_point(theta_t)));
  if (ab <= kExactZeroAbsTol) return std::numeric_limits<double>::infinity();
  // Normalized nonnegative weights give |base| <= 1 on the circle; the clamp
  // only absorbs last-ulp rounding above 1.
  return std::max(0.0, -std::log(ab));
}

double f_L(const DynamicalPartitionFunction& dpf, double theta_t) {
  const std::vector<double> angles = unit_circle_zero_angles(dpf.base);
  return f_L_at(dpf, theta_t, angles);
}

std::complex<double> f_dyn(const DynamicalPartitionFunction& dpf, double theta_t) {
  const double re = f_L(dpf, theta_t);
  if (theta_t == 0.0) return {0.0, 0.0};
  // Walk the circle from 0 to theta_t, unwrapping the phase of the base to
  // the nearest branch at each step.
  const std::size_t degree = dpf.base.degree();
  const auto n_steps = static_cast<std::size_t>(
      std::max(64.0, std::ceil(std::abs(theta_t) * static_cast<double>(degree + 1) * 8.0)));
  double unwrapped = 0.0;
  double prev = 0.0;  // arg base(1) = 0
  for (std::size_t i = 1; i <= n_steps; ++i) {
    const double t = theta_t * static_cast<double>(i) / static_cast<double>(n_steps);
    const double a = std::arg(dpf.base(circle_point(t)));
    unwrapped += std::remainder(a - prev, kTwoPi);
    prev = a;
  }
  return {re, 0.0 - unwrapped};
}

ReturnProbability return_probability(const DynamicalPartitionFunction& dpf, double theta_t) {
  const double fl = f_L(dpf, theta_t);
  if (std::isinf(fl)) return {0.0, false};  // true zero, not underflow
  const double p = std::exp(-2.0 * static_cast<double>(dpf.exponent) * fl);
  return {p, p == 0.0 && fl > 0.0};
}

const std::vector<double>& level_occupations(const DynamicalPartitionFunction& dpf,
                                             double /*theta_t*/) {
  return dpf.base.weights();
}

double specific_heat(const DynamicalPartitionFunction& dpf, double theta_beta) {
  // Level distribution p_k proportional to w_k e^{k theta}, max-shifted.
  const std::vector<double>& w = dpf.base.weights();
  double shift = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0.0) continue;
    shift = std::max(shift, std::log(w[k]) + static_cast<double>(k) * theta_beta);
  }
  double s = 0.0, s1 = 0.0, s2 = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0.0) continue;
    const double q = std::exp(std::log(w[k]) + static_cast<double>(k) * theta_beta - shift);
    s += q;
    s1 += static_cast<double>(k) * q;
    s2 += static_cast<double>(k) * static_cast<double>(k) * q;
  }
  const double mean = s1 / s;
  const double var = std::max(0.0, s2 / s - mean * mean);
  return theta_beta * theta_beta * var;
}

CrReport cr_correspondence_check(const DynamicalPartitionFunction& dpf, double step) {
  if (!(step > 0.0) || step > 1e-2)
    throw StepTooLargeError("cr_correspondence_check: step must lie in (0, 1e-2]");
  const double h = step;
  const double d2_real =
      (f_thermal(dpf, h) - 2.0 * f_thermal(dpf, 0.0) + f_thermal(dpf, -h)) / (h * h);
  const double d2_circle = (f_L(dpf, h) - 2.0 * f_L(dpf, 0.0) + f_L(dpf, -h)) / (h * h);
  return {d2_real, d2_circle, std::abs(d2_circle + d2_real)};
}

double early_time_coefficient(const DynamicalPartitionFunction& dpf) {
  return dpf.base.level_variance() / 2.0;
}

FreeEnergyPoint free_energy_point(const DynamicalPartitionFunction& dpf, double theta) {
  return {theta, f_thermal(dpf, theta), f_dyn(dpf, theta), f_L(dpf, theta)};
}

}  // namespace dpf
