// model.hpp - model specifications and the spectral polynomials they compile to
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace dpf {

// Tolerance on |sum(weights) - 1| accepted by validation.
inline constexpr double kNormalizationTol = 1e-12;

// Default bound on N for models whose oracle check enumerates 2^N
// configurations.  Callers that never enumerate (e.g. scaling studies over
// closed forms) may pass a larger cap explicitly.
inline constexpr int kDefaultCap = 20;

struct NormalizationError : std::runtime_error {
  explicit NormalizationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NegativeWeightError : std::runtime_error {
  explicit NegativeWeightError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

// The library speaks dimensionless theta_beta = beta*J and theta_t = J*t/hbar
// throughout; conversions to physical beta and t happen only at the CLI
// boundary through this type.
struct UnitConvention {
  double j = 1.0;
  double hbar = 1.0;

  UnitConvention() = default;
  UnitConvention(double j_, double hbar_) : j(j_), hbar(hbar_) {
    if (!(j > 0.0) || !(hbar > 0.0))
      throw std::invalid_argument("UnitConvention: J and hbar must be > 0");
  }

  double theta_from_beta(double beta) const { return beta * j; }
  double theta_from_time(double t) const { return j * t / hbar; }
  double beta_from_theta(double theta_beta) const { return theta_beta / j; }
  double time_from_theta(double theta_t) const { return theta_t * hbar / j; }
  bool is_default() const { return j == 1.0 && hbar == 1.0; }
};

// Checks nonnegativity, normalization within kNormalizationTol, and that
// trailing zero weights have been trimmed (w_K > 0).
void validate_weights(const std::vector<double>& weights);

// Nonnegative weights w_0..w_K over integer levels k, with level energy
// E_k = -k*J: k = 0 is the top of the spectrum at energy 0, k = K the ground
// level at -K*J.  The weights are the coefficients of sum_k w_k y^k; they
// read as degeneracy fractions on the thermal path and as the constant
// occupation probabilities |c_k|^2 on the dynamical one.
class SpectralPolynomial {
 public:
  // Trims trailing zeros, then validates.
  static SpectralPolynomial from_weights(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }
  std::size_t degree() const { return weights_.size() - 1; }

  std::complex<double> operator()(std::complex<double> y) const;
  double operator()(double y) const;

  // ln sum_k w_k e^{k*theta}, finite for every real theta (log-sum-exp).
  double log_value_exp_axis(double theta_beta) const;

  // Moments of the level index k under the weights.
  double mean_level() const;
  double level_variance() const;

 private:
  explicit SpectralPolynomial(std::vector<double> w) : weights_(std::move(w)) {}
  std::vector<double> weights_;
};

void validate(const SpectralPolynomial& poly);

// Weights of base^exponent via convolution (binary exponentiation).
SpectralPolynomial expanded_power(const SpectralPolynomial& base, int exponent);

struct SingleQubit {};
struct DegenerateQubit {
  int upper_degeneracy = 1;  // g; g = 1 reduces to SingleQubit
};
struct ProductChain {
  int n_sites = 1;
};
struct IsingOpenChain {
  int n_sites = 2;
};

using ModelSpec = std::variant<SingleQubit, DegenerateQubit, ProductChain, IsingOpenChain>;

// base^M: M independent effective degrees of freedom (sites for the product
// chain, bonds for the open Ising chain).
struct DynamicalPartitionFunction {
  SpectralPolynomial base;
  int exponent = 1;
};

DynamicalPartitionFunction compile_model(const ModelSpec& spec, int cap = kDefaultCap);

std::string model_name(const ModelSpec& spec);

}  // namespace dpf
