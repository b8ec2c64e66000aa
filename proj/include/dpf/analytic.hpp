// analytic.hpp - L(y) and the thermal/dynamical observables derived from it
#pragma once

#include "dpf/model.hpp"

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace dpf {

// |base(y)| at or below this is an exact zero of the polynomial (log
// undefined); the value is far below anything a nonzero evaluation can
// round to.
inline constexpr double kExactZeroAbsTol = 1e-300;

// A point on the circle within this distance of a predicted critical time
// carries the divergence marker.
inline constexpr double kDivergenceThetaTol = 1e-12;

struct StepTooLargeError : std::runtime_error {
  explicit StepTooLargeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Value of L with a log-domain companion representation: for exponents M in
// the thousands the cartesian value under/overflows while log_abs stays
// finite.  exact_zero marks base(y) = 0, where the log is undefined.
struct ComplexValue {
  std::complex<double> value{};
  double log_abs = 0.0;  // ln|L|; -inf when exact_zero
  double arg = 0.0;      // principal phase of L
  bool exact_zero = false;
};

// base(y)^M: Horner for the base, cartesian power by repeated squaring, and
// M*log(base(y)) for the log-domain fields.
ComplexValue eval_L(const DynamicalPartitionFunction& dpf, std::complex<double> y);

// -ln base(e^{theta_beta}): per-degree-of-freedom thermal free energy,
// independent of M, finite for every real theta_beta (negative temperatures
// included).
double f_thermal(const DynamicalPartitionFunction& dpf, double theta_beta);

// -ln base(e^{i theta_t}) with the imaginary part unwrapped continuously
// from f_dyn(0) = 0.  Only the real part is a physical observable.
std::complex<double> f_dyn(const DynamicalPartitionFunction& dpf, double theta_t);

// Re f_dyn = -ln|base| per degree of freedom; +inf at zeros of the base
// (detected by zero location, not by value thresholding).
double f_L(const DynamicalPartitionFunction& dpf, double theta_t);

// Same, with the unit-circle zero angles already in hand (grid loops).
double f_L_at(const DynamicalPartitionFunction& dpf, double theta_t,
              std::span<const double> circle_zero_angles);

struct ReturnProbability {
  double value = 1.0;        // |L|^2 = exp(-2 M f_L), in [0, 1]
  bool underflowed = false;  // f_L finite but exp(-2 M f_L) rounds to 0
};

ReturnProbability return_probability(const DynamicalPartitionFunction& dpf, double theta_t);

// Occupations are constant under the diagonal evolution: the base weights.
const std::vector<double>& level_occupations(const DynamicalPartitionFunction& dpf, double theta_t);

// C/k_B = -theta_beta^2 d^2 f_thermal/dtheta_beta^2 = theta_beta^2 Var(k),
// from the exact logarithmic derivatives of the base.
double specific_heat(const DynamicalPartitionFunction& dpf, double theta_beta);

struct CrReport {
  double d2_real_axis = 0.0;  // d^2 f_thermal / dtheta_beta^2 at 0
  double d2_circle = 0.0;     // d^2 f_L / dtheta_t^2 at 0
  double defect = 0.0;        // |d2_circle + d2_real_axis|
};

// Central second differences at step h (0 < h <= 1e-2); the two second
// derivatives must be equal and opposite for an analytic L at y = 1.
CrReport cr_correspondence_check(const DynamicalPartitionFunction& dpf, double step = 1e-4);

// Coefficient c2 of f_L(theta_t) ~ c2 theta_t^2, exactly Var(k)/2.
double early_time_coefficient(const DynamicalPartitionFunction& dpf);

// Both readings of L at the same dimensionless parameter.
struct FreeEnergyPoint {
  double parameter = 0.0;
  double f_thermal = 0.0;
  std::complex<double> f_dyn{};
  double f_L = 0.0;
};

FreeEnergyPoint free_energy_point(const DynamicalPartitionFunction& dpf, double theta);

}  // namespace dpf
