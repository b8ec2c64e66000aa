// util.hpp - numeric helpers shared across the library
#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

namespace dpf {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// Reduce an angle to [-pi, pi].  All unit-circle evaluations go through this
// so that theta and theta + 2*pi*n land on the same complex point whenever
// the caller's addition was exact.
inline double reduce_angle(double theta) { return std::remainder(theta, kTwoPi); }

inline std::complex<double> circle_point(double theta) {
  const double r = reduce_angle(theta);
  return {std::cos(r), std::sin(r)};
}

// Distance from theta to the nearest member of the family theta_c + 2*pi*n.
inline double angle_distance(double theta, double theta_c) {
  return std::abs(std::remainder(theta - theta_c, kTwoPi));
}

// Compensated summation; instantiated for double and complex<double>.
template <typename T>
struct KahanSum {
  T sum{};
  T comp{};
  void add(const T& x) {
    const T y = x - comp;
    const T t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// Worker-thread count: explicit request wins, then DPF_THREADS, then 1.
inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DPF_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

// Run fn(chunk_index, begin, end) over [0, total) split into fixed chunks.
// Chunk boundaries are independent of the thread count, so any reduction
// that combines per-chunk results in chunk order is deterministic.
template <typename Fn>
void parallel_chunks(std::size_t total, std::size_t chunk_size, int n_threads, Fn&& fn) {
  if (total == 0) return;
  const std::size_t n_chunks = (total + chunk_size - 1) / chunk_size;
  const int workers =
      static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(resolve_thread_count(n_threads)), n_chunks));
  auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = c * chunk_size;
    const std::size_t end = std::min(total, begin + chunk_size);
    fn(c, begin, end);
  };
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) break;
      run_chunk(c);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

// 17 significant digits round-trips a double exactly; infinities print as
// "inf"/"-inf", which the CSV contract relies on.
inline std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  return sxy / sxx;
}

}  // namespace dpf
