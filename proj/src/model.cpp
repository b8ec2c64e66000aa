// model.cpp - compilation of model specs into spectral polynomials
#include "dpf/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dpf {

void validate_weights(const std::vector<double>& weights) {
  if (weights.empty()) throw std::invalid_argument("SpectralPolynomial: no weights");
  for (double w : weights) {
    if (std::isnan(w) || w < 0.0)
      throw NegativeWeightError("SpectralPolynomial: weight " + std::to_string(w) + " is negative");
  }
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(sum - 1.0) > kNormalizationTol)
    throw NormalizationError("SpectralPolynomial: weights sum to " + std::to_string(sum) +
                             ", expected 1 within 1e-12");
  if (weights.back() == 0.0)
    throw std::invalid_argument("SpectralPolynomial: trailing zero weights must be trimmed");
}

SpectralPolynomial SpectralPolynomial::from_weights(std::vector<double> weights) {
  while (weights.size() > 1 && weights.back() == 0.0) weights.pop_back();
  validate_weights(weights);
  return SpectralPolynomial(std::move(weights));
}

std::complex<double> SpectralPolynomial::operator()(std::complex<double> y) const {
  std::complex<double> acc = weights_.back();
  for (std::size_t k = weights_.size() - 1; k-- > 0;) acc = acc * y + weights_[k];
  return acc;
}

double SpectralPolynomial::operator()(double y) const {
  double acc = weights_.back();
  for (std::size_t k = weights_.size() - 1; k-- > 0;) acc = acc * y + weights_[k];
  return acc;
}

double SpectralPolynomial::log_value_exp_axis(double theta_beta) const {
  // log sum_k w_k e^{k*theta}: shift by the largest exponent so the sum is
  // >= 1 and never overflows.
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (weights_[k] == 0.0) continue;
    m = std::max(m, std::log(weights_[k]) + static_cast<double>(k) * theta_beta);
  }
  double s = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (weights_[k] == 0.0) continue;
    s += std::exp(std::log(weights_[k]) + static_cast<double>(k) * theta_beta - m);
  }
  return m + std::log(s);
}

double SpectralPolynomial::mean_level() const {
  double mean = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k) mean += static_cast<double>(k) * weights_[k];
  return mean;
}

double SpectralPolynomial::level_variance() const {
  const double mean = mean_level();
  double m2 = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k)
    m2 += static_cast<double>(k) * static_cast<double>(k) * weights_[k];
  return m2 - mean * mean;
}

void validate(const SpectralPolynomial& poly) { validate_weights(poly.weights()); }

namespace {

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

SpectralPolynomial expanded_power(const SpectralPolynomial& base, int exponent) {
  if (exponent < 1) throw std::invalid_argument("expanded_power: exponent must be >= 1");
  std::vector<double> result{1.0};
  std::vector<double> sq = base.weights();
  int e = exponent;
  for (;;) {
    if (e & 1) result = convolve(result, sq);
    e >>= 1;
    if (e == 0) break;
    sq = convolve(sq, sq);
  }
  // Convolution of normalized weights is normalized up to rounding; rescale
  // so the result passes validation for any exponent.
  const double sum = std::accumulate(result.begin(), result.end(), 0.0);
  for (double& w : result) w /= sum;
  return SpectralPolynomial::from_weights(std::move(result));
}

DynamicalPartitionFunction compile_model(const ModelSpec& spec, int cap) {
  if (cap < 1) throw std::invalid_argument("compile_model: cap must be >= 1");
  return std::visit(
      [cap](const auto& m) -> DynamicalPartitionFunction {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SingleQubit>) {
          return {SpectralPolynomial::from_weights({0.5, 0.5}), 1};
        } else if constexpr (std::is_same_v<T, DegenerateQubit>) {
          if (m.upper_degeneracy < 1)
            throw std::invalid_argument("DegenerateQubit: upper degeneracy g must be >= 1");
          const double g = static_cast<double>(m.upper_degeneracy);
          return {SpectralPolynomial::from_weights({g / (g + 1.0), 1.0 / (g + 1.0)}), 1};
        } else if constexpr (std::is_same_v<T, ProductChain>) {
          if (m.n_sites < 1) throw std::invalid_argument("ProductChain: N must be >= 1");
          if (m.n_sites > cap)
            throw CapExceededError("ProductChain: N = " + std::to_string(m.n_sites) +
                                   " exceeds cap " + std::to_string(cap));
          return {SpectralPolynomial::from_weights({0.5, 0.5}), m.n_sites};
        } else {
          static_assert(std::is_same_v<T, IsingOpenChain>);
          if (m.n_sites < 2) throw std::invalid_argument("IsingOpenChain: N must be >= 2");
          if (m.n_sites > cap)
            throw CapExceededError("IsingOpenChain: N = " + std::to_string(m.n_sites) +
                                   " exceeds cap " + std::to_string(cap));
          // Shifted bond energies give N-1 independent two-level bonds with
          // gap J, so the base matches the single qubit.
          return {SpectralPolynomial::from_weights({0.5, 0.5}), m.n_sites - 1};
        }
      },
      spec);
}

std::string model_name(const ModelSpec& spec) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SingleQubit>) return "single_qubit";
        else if constexpr (std::is_same_v<T, DegenerateQubit>) return "degenerate_qubit";
        else if constexpr (std::is_same_v<T, ProductChain>) return "product_chain";
        else return "ising_open_chain";
      },
      spec);
}

}  // namespace dpf
