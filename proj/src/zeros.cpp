// zeros.cpp - companion-matrix root finding with multiplicity clustering
#include "dpf/zeros.hpp"

#include "dpf/util.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dpf {

namespace {

using cd = std::complex<double>;

cd horner(const std::vector<double>& c, cd z) {
  cd acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

std::vector<double> derivative_coeffs(const std::vector<double>& c) {
  if (c.size() <= 1) return {0.0};
  std::vector<double> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
  return d;
}

// sum_k |c_k| |z|^k: the natural magnitude against which residuals at z are
// judged.
double eval_scale(const std::vector<double>& c, double r) {
  double s = 0.0;
  double p = 1.0;
  for (double ck : c) {
    s += std::abs(ck) * p;
    p *= r;
  }
  return s;
}

std::vector<cd> companion_eigenvalues(const std::vector<double>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) a(i, d - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  for (int i = 1; i < d; ++i) a(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, /*computeEigenvectors=*/false);
  std::vector<cd> roots(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return roots;
}

// Newton iteration; near an m-fold root plain Newton still contracts the
// error by (m-1)/m per step, which is enough to shrink the eigenvalue
// scatter before clustering.  Once |p(z)| reaches the evaluation noise floor
// the computed steps are random, so stop there and keep the best iterate.
cd newton_polish(const std::vector<double>& c, const std::vector<double>& dc, cd z,
                 int max_iter = 40) {
  cd best = z;
  double best_res = std::abs(horner(c, z));
  for (int it = 0; it < max_iter; ++it) {
    const cd p = horner(c, z);
    const double res = std::abs(p);
    if (res < best_res) {
      best_res = res;
      best = z;
    }
    if (res <= 4.0 * std::numeric_limits<double>::epsilon() * eval_scale(c, std::abs(z))) break;
    const cd dp = horner(dc, z);
    if (dp == cd{0.0, 0.0}) break;
    const cd step = p / dp;
    z -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
  }
  if (std::abs(horner(c, z)) < best_res) best = z;
  return best;
}

// Root of a polynomial with a simple root near z0; degree-1 inputs are solved
// in closed form so exact rational roots stay exact.
cd simple_root_near(const std::vector<double>& c, cd z0) {
  if (c.size() == 2) return cd{-c[0] / c[1], 0.0};
  return newton_polish(c, derivative_coeffs(c), z0);
}

// Single-linkage components over the unassigned roots at the given radius.
std::vector<std::vector<std::size_t>> linkage_components(const std::vector<cd>& roots,
                                                         const std::vector<bool>& assigned,
                                                         double radius) {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<bool> seen(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (assigned[i] || seen[i]) continue;
    std::vector<std::size_t> comp{i};
    seen[i] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (assigned[j] || seen[j]) continue;
        if (std::abs(roots[comp[head]] - roots[j]) <= radius) {
          seen[j] = true;
          comp.push_back(j);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

const char* root_class_name(RootClass cls) {
  switch (cls) {
    case RootClass::on_unit_circle: return "on_unit_circle";
    case RootClass::inside: return "inside";
    case RootClass::outside: return "outside";
    case RootClass::positive_real_axis: return "positive_real_axis";
  }
  return "?";
}

RootClass classify(std::complex<double> root, double circle_tol) {
  if (!(circle_tol >= 1e-12 && circle_tol <= 1e-6))
    throw std::invalid_argument("classify: circle_tol must lie in [1e-12, 1e-6]");
  if (root.real() > 0.0 && std::abs(root.imag()) <= circle_tol)
    return RootClass::positive_real_axis;
  const double r = std::abs(root);
  if (std::abs(r - 1.0) <= circle_tol) return RootClass::on_unit_circle;
  return r < 1.0 ? RootClass::inside : RootClass::outside;
}

ZeroSet find_zeros(const SpectralPolynomial& base, double tol, double circle_tol) {
  if (base.degree() < 1) throw std::invalid_argument("find_zeros: degree must be >= 1");
  if (!(tol >= 1e-14 && tol <= 1e-4))
    throw std::invalid_argument("find_zeros: tol must lie in [1e-14, 1e-4]");
  const std::vector<double>& c = base.weights();
  const int d = static_cast<int>(base.degree());

  std::vector<cd> raw;
  if (d == 1) {
    raw.push_back(cd{-c[0] / c[1], 0.0});
  } else {
    raw = companion_eigenvalues(c);
    const std::vector<double> dc = derivative_coeffs(c);
    for (cd& z : raw) z = newton_polish(c, dc, z);
  }

  std::vector<bool> assigned(raw.size(), false);
  std::vector<Root> roots;

  // Multiplicity clustering, largest candidate multiplicity first: the
  // cluster radius tol^(1/m) mirrors how an m-fold root scatters under
  // coefficient perturbation.
  std::vector<std::vector<double>> derivs{c};
  for (int j = 1; j < d; ++j) derivs.push_back(derivative_coeffs(derivs.back()));
  for (int m = d; m >= 2; --m) {
    const double radius = std::pow(tol, 1.0 / static_cast<double>(m));
    for (const auto& comp : linkage_components(raw, assigned, radius)) {
      if (static_cast<int>(comp.size()) != m) continue;
      cd centroid{0.0, 0.0};
      for (std::size_t idx : comp) centroid += raw[idx];
      centroid /= static_cast<double>(m);
      const cd refined = simple_root_near(derivs[static_cast<std::size_t>(m - 1)], centroid);
      // Accept only if every derivative below order m vanishes at the
      // refined location, relative to its evaluation scale.
      bool ok = std::abs(refined - centroid) <= radius;
      const double r_abs = std::abs(refined);
      for (int j = 0; ok && j < m; ++j) {
        const auto& cj = derivs[static_cast<std::size_t>(j)];
        const double thr = 1e-8 * std::max(1.0, eval_scale(cj, r_abs));
        if (std::abs(horner(cj, refined)) > thr) ok = false;
      }
      if (!ok) continue;
      roots.push_back({refined, m, classify(refined, circle_tol)});
      for (std::size_t idx : comp) assigned[idx] = true;
    }
  }

  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (assigned[i]) continue;
    const cd z = raw[i];
    const double residual = std::abs(horner(c, z));
    const double limit = tol * static_cast<double>(d + 1) * std::max(1.0, eval_scale(c, std::abs(z)));
    if (residual > limit)
      throw NonConvergenceError("find_zeros: residual " + std::to_string(residual) +
                                " above tolerance; polynomial is ill-conditioned");
    roots.push_back({z, 1, classify(z, circle_tol)});
  }

  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return ZeroSet{std::move(roots), tol, circle_tol, d};
}

std::vector<CriticalTime> predict_critical_times(const ZeroSet& zs) {
  std::vector<CriticalTime> times;
  for (const Root& r : zs.roots) {
    if (r.cls != RootClass::on_unit_circle) continue;
    const double phi = std::atan2(r.location.imag(), r.location.real());
    times.push_back({phi < 0.0 ? phi + kTwoPi : phi, r.multiplicity});
  }
  std::sort(times.begin(), times.end(),
            [](const CriticalTime& a, const CriticalTime& b) { return a.theta_c < b.theta_c; });
  return times;
}

std::vector<double> unit_circle_zero_angles(const SpectralPolynomial& base, double circle_tol) {
  if (base.degree() < 1) return {};
  std::vector<double> angles;
  for (const CriticalTime& t : predict_critical_times(find_zeros(base, kDefaultZeroTol, circle_tol)))
    angles.push_back(t.theta_c);
  return angles;
}

namespace {

// |base(e^{i theta})|^2 and its first two theta-derivatives, from the
// polynomial and its derivatives on the circle.
struct CircleMagnitude {
  std::vector<double> c, c1, c2;
  explicit CircleMagnitude(const SpectralPolynomial& p)
      : c(p.weights()), c1(derivative_coeffs(c)), c2(derivative_coeffs(c1)) {}

  double value(double theta) const {
    const cd b = horner(c, circle_point(theta));
    return std::norm(b);
  }
  void derivatives(double theta, double& g1, double& g2) const {
    const cd u = circle_point(theta);
    const cd b = horner(c, u);
    const cd p1 = horner(c1, u);
    const cd p2 = horner(c2, u);
    const cd iu = cd{0.0, 1.0} * u;
    const cd b1 = iu * p1;                 // dB/dtheta
    const cd b2 = -u * p1 - u * u * p2;    // d2B/dtheta2
    g1 = 2.0 * std::real(std::conj(b) * b1);
    g2 = 2.0 * (std::norm(b1) + std::real(std::conj(b) * b2));
  }
};

}  // namespace

MinReturn min_return_probability(const DynamicalPartitionFunction& dpf) {
  if (dpf.base.degree() == 0) return {1.0, 0.0};  // constant L = 1, never leaves

  const ZeroSet zs = find_zeros(dpf.base);
  const auto critical = predict_critical_times(zs);
  if (!critical.empty()) return {0.0, critical.front().theta_c};

  const CircleMagnitude g(dpf.base);
  constexpr int kGrid = 4096;
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    const double v = g.value(kTwoPi * static_cast<double>(i) / kGrid);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = kTwoPi * static_cast<double>(best - 1) / kGrid;
  double b = kTwoPi * static_cast<double>(best + 1) / kGrid;

  // Golden section down to ~1e-8, then Newton on g' for the last digits.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = g.value(x1), f2 = g.value(x2);
  while (b - a > 1e-8) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = g.value(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = g.value(x2);
    }
  }
  double theta = 0.5 * (a + b);
  for (int it = 0; it < 12; ++it) {
    double g1 = 0.0, g2 = 0.0;
    g.derivatives(theta, g1, g2);
    if (!(g2 > 0.0)) break;
    const double step = g1 / g2;
    theta -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(theta))) break;
  }
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;

  const double per_dof = g.value(theta);  // |base|^2 > 0 here
  const double p_min = std::exp(static_cast<double>(dpf.exponent) * std::log(per_dof));
  return {p_min, theta};
}

}  // namespace dpf
