// oracle.cpp - 2^N enumeration with deterministic chunked reduction
#include "dpf/oracle.hpp"

#include "dpf/util.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace dpf::oracle {

namespace {

constexpr std::size_t kChunk = 1u << 14;

void check_cap(int n_sites, int cap) {
  if (n_sites < 1) throw std::invalid_argument("oracle: N must be >= 1");
  const int effective = std::min(cap, kHardCap);
  if (n_sites > effective)
    throw CapExceededError("oracle: N = " + std::to_string(n_sites) + " exceeds enumeration cap " +
                           std::to_string(effective));
}

}  // namespace

int bond_count(SpinConfiguration config, int n_sites) {
  if (n_sites < 2) return 0;
  const std::uint32_t mask = (1u << (n_sites - 1)) - 1u;
  // XOR of adjacent bits marks anti-aligned pairs; aligned = (N-1) - popcount.
  const std::uint32_t flips = (config ^ (config >> 1)) & mask;
  return (n_sites - 1) - std::popcount(flips);
}

double thermal_partition(int n_sites, double theta_beta, int cap, int n_threads) {
  check_cap(n_sites, cap);
  const std::size_t total = std::size_t{1} << n_sites;
  // Bond counts take only N values; hoist the exponentials out of the loop.
  std::vector<double> boltzmann(static_cast<std::size_t>(n_sites));
  for (int b = 0; b < n_sites; ++b)
    boltzmann[static_cast<std::size_t>(b)] = std::exp(theta_beta * static_cast<double>(b));

  const std::size_t n_chunks = (total + kChunk - 1) / kChunk;
  std::vector<double> partial(n_chunks, 0.0);
  parallel_chunks(total, kChunk, n_threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    KahanSum<double> sum;
    for (std::size_t w = begin; w < end; ++w)
      sum.add(boltzmann[static_cast<std::size_t>(bond_count(static_cast<std::uint32_t>(w), n_sites))]);
    partial[c] = sum.sum;
  });
  KahanSum<double> sum;
  for (double p : partial) sum.add(p);
  return std::ldexp(sum.sum, -n_sites);
}

std::complex<double> loschmidt_amplitude(int n_sites, double theta_t, int cap, int n_threads) {
  check_cap(n_sites, cap);
  const std::size_t total = std::size_t{1} << n_sites;
  // The sum cancels almost completely near the zeros of L, so accumulate in
  // extended precision; phases come from powers of e^{i theta} rather than
  // cos/sin of the large argument theta*b.
  using cld = std::complex<long double>;
  const auto reduced = static_cast<long double>(reduce_angle(theta_t));
  const cld y{std::cos(reduced), std::sin(reduced)};
  std::vector<cld> phase(static_cast<std::size_t>(n_sites));
  phase[0] = {1.0L, 0.0L};
  for (int b = 1; b < n_sites; ++b)
    phase[static_cast<std::size_t>(b)] = phase[static_cast<std::size_t>(b - 1)] * y;

  const std::size_t n_chunks = (total + kChunk - 1) / kChunk;
  std::vector<cld> partial(n_chunks);
  parallel_chunks(total, kChunk, n_threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    KahanSum<cld> sum;
    for (std::size_t w = begin; w < end; ++w)
      sum.add(phase[static_cast<std::size_t>(bond_count(static_cast<std::uint32_t>(w), n_sites))]);
    partial[c] = sum.sum;
  });
  KahanSum<cld> sum;
  for (const auto& p : partial) sum.add(p);
  return {static_cast<double>(std::ldexp(sum.sum.real(), -n_sites)),
          static_cast<double>(std::ldexp(sum.sum.imag(), -n_sites))};
}

EnergyMoments energy_moments(int n_sites, int cap, int n_threads) {
  check_cap(n_sites, cap);
  const std::size_t total = std::size_t{1} << n_sites;
  const std::size_t n_chunks = (total + kChunk - 1) / kChunk;
  // b <= 25 and 2^N <= 2^26, so both sums fit a uint64 exactly; the reduction
  // is order-independent by construction.
  std::vector<std::uint64_t> sum_b(n_chunks, 0), sum_b2(n_chunks, 0);
  parallel_chunks(total, kChunk, n_threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    std::uint64_t s1 = 0, s2 = 0;
    for (std::size_t w = begin; w < end; ++w) {
      const auto b = static_cast<std::uint64_t>(bond_count(static_cast<std::uint32_t>(w), n_sites));
      s1 += b;
      s2 += b * b;
    }
    sum_b[c] = s1;
    sum_b2[c] = s2;
  });
  std::uint64_t s1 = 0, s2 = 0;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    s1 += sum_b[c];
    s2 += sum_b2[c];
  }
  const double mean = std::ldexp(static_cast<double>(s1), -n_sites);
  const double mean_sq = std::ldexp(static_cast<double>(s2), -n_sites);
  return {mean, mean_sq - mean * mean};
}

std::vector<std::uint64_t> bond_histogram(int n_sites, int cap) {
  check_cap(n_sites, cap);
  const std::size_t total = std::size_t{1} << n_sites;
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n_sites), 0);
  for (std::size_t w = 0; w < total; ++w)
    ++hist[static_cast<std::size_t>(bond_count(static_cast<std::uint32_t>(w), n_sites))];
  return hist;
}

std::complex<double> fewlevel_amplitude(std::span<const double> weights,
                                        std::span<const double> energies, double theta_t) {
  if (weights.size() != energies.size())
    throw std::invalid_argument("fewlevel_amplitude: weights/energies size mismatch");
  double sum = 0.0;
  for (double w : weights) sum += w;
  if (std::abs(sum - 1.0) > kNormalizationTol)
    throw NormalizationError("fewlevel_amplitude: weights must sum to 1");
  KahanSum<std::complex<double>> acc;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double phase = -energies[i] * theta_t;
    acc.add(weights[i] * std::complex<double>{std::cos(phase), std::sin(phase)});
  }
  return acc.sum;
}

}  // namespace dpf::oracle
