// oracle.hpp - brute-force ground truth by direct enumeration
#pragma once

#include "dpf/model.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace dpf::oracle {

// Hard ceiling on the enumeration cap: 2^26 configurations is the largest
// sweep the override flag allows.
inline constexpr int kHardCap = 26;

// An N-site spin configuration packed into a word, bit i = 1 meaning
// s_i = +1; valid words lie in [0, 2^N).
using SpinConfiguration = std::uint32_t;

// Number of aligned nearest-neighbor pairs in a configuration.  The shifted
// chain energy is E = -b*J, so b doubles as the level index of the compiled
// polynomial.
int bond_count(SpinConfiguration config, int n_sites);

// (1/2^N) sum_configs e^{theta_beta * b(config)}; equals
// ((1 + e^{theta_beta})/2)^(N-1).
double thermal_partition(int n_sites, double theta_beta, int cap = kDefaultCap,
                         int n_threads = 0);

// (1/2^N) sum_configs e^{i theta_t * b(config)}; equals
// ((1 + e^{i theta_t})/2)^(N-1) in the shifted-energy convention.
std::complex<double> loschmidt_amplitude(int n_sites, double theta_t, int cap = kDefaultCap,
                                         int n_threads = 0);

struct EnergyMoments {
  double mean = 0.0;      // <b> over the uniform configuration ensemble
  double variance = 0.0;  // Var(b)
};

// Exact integer accumulation: (N-1)/2 and (N-1)/4.
EnergyMoments energy_moments(int n_sites, int cap = kDefaultCap, int n_threads = 0);

// Configurations per bond count; entry b holds 2*C(N-1, b).
std::vector<std::uint64_t> bond_histogram(int n_sites, int cap = kDefaultCap);

// sum_n w_n e^{-i E_n theta_t} over arbitrary (possibly incommensurate)
// energies in units of J; the only supported path for non-polynomial
// spectra.
std::complex<double> fewlevel_amplitude(std::span<const double> weights,
                                        std::span<const double> energies, double theta_t);

}  // namespace dpf::oracle
