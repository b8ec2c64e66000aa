// zeros.hpp - complex zeros of the base polynomial and what they predict
#pragma once

#include "dpf/model.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace dpf {

// Default clustering tolerance for find_zeros (allowed range [1e-14, 1e-4]).
inline constexpr double kDefaultZeroTol = 1e-12;

// Roots with ||root|-1| <= circle_tol count as unit-circle zeros; anything at
// radius 1 +- 1e-6 instead produces a sharp but finite f_L peak.
inline constexpr double kDefaultCircleTol = 1e-9;

struct NonConvergenceError : std::runtime_error {
  explicit NonConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class RootClass { on_unit_circle, inside, outside, positive_real_axis };

const char* root_class_name(RootClass cls);

struct Root {
  std::complex<double> location;
  int multiplicity = 1;
  RootClass cls = RootClass::inside;
};

struct ZeroSet {
  std::vector<Root> roots;  // sorted by (re, im); multiplicities sum to the degree
  double tol = kDefaultZeroTol;
  double circle_tol = kDefaultCircleTol;
  int degree = 0;
};

// Companion-matrix eigenvalues, Newton polishing, then multiplicity
// clustering: roots within tol^(1/m) of each other collapse to one root of
// multiplicity m, re-centered by Newton on the (m-1)-th derivative and kept
// only if all lower derivatives vanish at the result.
ZeroSet find_zeros(const SpectralPolynomial& base, double tol = kDefaultZeroTol,
                   double circle_tol = kDefaultCircleTol);

// positive_real_axis takes precedence (Re > 0, |Im| <= circle_tol), then
// on_unit_circle, then inside/outside by modulus.
RootClass classify(std::complex<double> root, double circle_tol = kDefaultCircleTol);

struct CriticalTime {
  double theta_c = 0.0;  // in [0, 2*pi); the full family is theta_c + 2*pi*n
  int multiplicity = 1;
};

// One entry per unit-circle root; off-circle roots never produce critical
// times (the return probability stays nonzero).
std::vector<CriticalTime> predict_critical_times(const ZeroSet& zs);

// Angles of the unit-circle zeros of a polynomial, in [0, 2*pi).
std::vector<double> unit_circle_zero_angles(const SpectralPolynomial& base,
                                            double circle_tol = kDefaultCircleTol);

struct MinReturn {
  double p_min = 0.0;
  double theta_at_min = 0.0;
};

// Minimum of |base(e^{i theta})|^{2M} over [0, 2*pi): exact 0 at a predicted
// critical time if one exists, otherwise a 4096-point scan refined by golden
// section and a Newton step on the derivative of |base|^2.
MinReturn min_return_probability(const DynamicalPartitionFunction& dpf);

}  // namespace dpf
