// cli.cpp - deterministic CSV/JSON emission for the command surface
#include "dpf/cli.hpp"

#include "dpf/analytic.hpp"
#include "dpf/dynamics.hpp"
#include "dpf/json_io.hpp"
#include "dpf/oracle.hpp"
#include "dpf/qsl.hpp"
#include "dpf/util.hpp"
#include "dpf/zeros.hpp"

#include <cmath>
#include <complex>
#include <ostream>

namespace dpf::cli {

namespace {

void check_grid(const RunConfig& cfg) {
  if (cfg.n_points < 2) throw std::invalid_argument("need at least 2 grid points");
  if (!(cfg.theta_min < cfg.theta_max)) throw std::invalid_argument("empty theta range");
}

std::vector<double> grid(const RunConfig& cfg) {
  const double step = (cfg.theta_max - cfg.theta_min) / static_cast<double>(cfg.n_points - 1);
  std::vector<double> g(static_cast<std::size_t>(cfg.n_points));
  for (std::size_t i = 0; i < g.size(); ++i)
    g[i] = cfg.theta_min + static_cast<double>(i) * step;
  return g;
}

}  // namespace

int run_thermal(const RunConfig& cfg, std::ostream& out) {
  check_grid(cfg);
  const DynamicalPartitionFunction dpf = compile_model(cfg.model, cfg.cap);
  const std::vector<double> thetas = grid(cfg);
  const bool rescale = !cfg.units.is_default();

  std::vector<double> f(thetas.size()), c(thetas.size());
  parallel_chunks(thetas.size(), 1024, cfg.n_threads,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      f[i] = f_thermal(dpf, thetas[i]);
                      c[i] = specific_heat(dpf, thetas[i]);
                    }
                  });

  if (cfg.format == OutputFormat::csv) {
    out << (rescale ? "beta" : "theta_beta") << ",f_thermal,C\n";
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      const double col = rescale ? cfg.units.beta_from_theta(thetas[i]) : thetas[i];
      out << format_g17(col) << ',' << format_g17(f[i]) << ',' << format_g17(c[i]) << '\n';
    }
  } else {
    ordered_json j;
    j["model"] = model_to_json(cfg.model, cfg.units);
    auto& key = j[rescale ? "beta" : "theta_beta"] = ordered_json::array();
    for (double t : thetas) key.push_back(rescale ? cfg.units.beta_from_theta(t) : t);
    j["f_thermal"] = f;
    j["C"] = c;
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int run_dynamics(const RunConfig& cfg, std::ostream& out) {
  check_grid(cfg);
  const DynamicalPartitionFunction dpf = compile_model(cfg.model, cfg.cap);
  const ObservableSeries series =
      sample_series(dpf, cfg.theta_min, cfg.theta_max, cfg.n_points, {cfg.n_threads});
  const bool rescale = !cfg.units.is_default();
  const std::vector<double>& occ = dpf.base.weights();

  if (cfg.format == OutputFormat::csv) {
    out << (rescale ? "t" : "theta") << ",f_L,P,I,divergent";
    if (cfg.occupations)
      for (std::size_t k = 0; k < occ.size(); ++k) out << ",P_" << k;
    out << '\n';
    for (std::size_t i = 0; i < series.theta.size(); ++i) {
      const double col = rescale ? cfg.units.time_from_theta(series.theta[i]) : series.theta[i];
      out << format_g17(col) << ',' << format_g17(series.f_l[i]) << ',' << format_g17(series.p[i])
          << ',' << format_g17(series.rate[i]) << ',' << (series.divergent[i] ? '1' : '0');
      if (cfg.occupations)
        for (double w : occ) out << ',' << format_g17(w);
      out << '\n';
    }
  } else {
    ordered_json j;
    j["model"] = model_to_json(cfg.model, cfg.units);
    auto& key = j[rescale ? "t" : "theta"] = ordered_json::array();
    for (double t : series.theta) key.push_back(rescale ? cfg.units.time_from_theta(t) : t);
    auto dump_col = [&](const char* name, const std::vector<double>& col) {
      auto& arr = j[name] = ordered_json::array();
      for (double x : col) arr.push_back(json_number(x));
    };
    dump_col("f_L", series.f_l);
    dump_col("P", series.p);
    dump_col("I", series.rate);
    auto& div = j["divergent"] = ordered_json::array();
    for (auto d : series.divergent) div.push_back(static_cast<int>(d));
    if (cfg.occupations) j["occupations"] = occ;
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int run_zeros(const RunConfig& cfg, std::ostream& out) {
  // JSON-native command; the format flag only selects between table formats
  // for the series commands.
  const DynamicalPartitionFunction dpf = compile_model(cfg.model, cfg.cap);
  // The full-system polynomial: root multiplicities pick up the exponent.
  const SpectralPolynomial full = expanded_power(dpf.base, dpf.exponent);
  const ZeroSet zs = find_zeros(full, cfg.zero_tol, cfg.circle_tol);

  ordered_json j;
  j["model"] = model_to_json(cfg.model, cfg.units);
  j.update(zero_set_to_json(zs));
  auto& times = j["critical_times"] = ordered_json::array();
  for (const CriticalTime& t : predict_critical_times(zs)) {
    ordered_json jt;
    jt["theta_c"] = t.theta_c;
    jt["mult"] = t.multiplicity;
    times.push_back(std::move(jt));
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int run_qsl(const RunConfig& cfg, std::ostream& out) {
  const DynamicalPartitionFunction dpf = compile_model(cfg.model, cfg.cap);
  const QslReport report = qsl_report(dpf);

  ordered_json j;
  j["model"] = model_to_json(cfg.model, cfg.units);
  j.update(qsl_report_to_json(report));
  if (!cfg.scan.empty()) {
    const ModelFamily family = std::holds_alternative<IsingOpenChain>(cfg.model)
                                   ? ModelFamily::ising_open_chain
                                   : ModelFamily::product_chain;
    const ScalingStudy study = scaling_study(family, cfg.scan, cfg.cap);
    ordered_json js;
    js["n_values"] = study.n_values;
    js["slope_mt"] = study.slope_mt;
    js["slope_ml"] = study.slope_ml;
    j["scan"] = std::move(js);
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int run_oracle_check(const RunConfig& cfg, std::ostream& out) {
  const auto* chain = std::get_if<IsingOpenChain>(&cfg.model);
  if (chain == nullptr) throw std::invalid_argument("oracle-check runs on ising_open_chain only");
  const int n = chain->n_sites;
  const DynamicalPartitionFunction dpf = compile_model(cfg.model, std::min(cfg.cap, oracle::kHardCap));

  constexpr int kPoints = 64;
  double max_rel_thermal = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double theta = -3.0 + 6.0 * static_cast<double>(i) / (kPoints - 1);
    const double brute = oracle::thermal_partition(n, theta, cfg.cap, cfg.n_threads);
    const double analytic =
        std::exp(static_cast<double>(dpf.exponent) * dpf.base.log_value_exp_axis(theta));
    max_rel_thermal = std::max(max_rel_thermal, std::abs(brute - analytic) / std::abs(analytic));
  }

  double max_dev_circle = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double theta = kTwoPi * static_cast<double>(i) / kPoints;
    const std::complex<double> brute = oracle::loschmidt_amplitude(n, theta, cfg.cap, cfg.n_threads);
    const ComplexValue analytic = eval_L(dpf, circle_point(theta));
    const double dev = std::abs(brute - analytic.value);
    const double scale = std::abs(analytic.value);
    max_dev_circle = std::max(max_dev_circle, scale > 1e-5 ? dev / scale : dev);
  }

  const oracle::EnergyMoments moments = oracle::energy_moments(n, cfg.cap, cfg.n_threads);
  const auto m = static_cast<double>(dpf.exponent);
  const double mean_dev = std::abs(moments.mean - m * dpf.base.mean_level());
  const double var_dev = std::abs(moments.variance - m * dpf.base.level_variance());

  constexpr double kTol = 1e-12;
  const bool ok = max_rel_thermal < kTol && max_dev_circle < kTol && mean_dev < kTol && var_dev < kTol;
  ordered_json j;
  j["n"] = n;
  j["max_rel_thermal"] = max_rel_thermal;
  j["max_dev_circle"] = max_dev_circle;
  j["moment_dev_mean"] = mean_dev;
  j["moment_dev_variance"] = var_dev;
  j["tolerance"] = kTol;
  j["ok"] = ok;
  out << j.dump(2) << '\n';
  return ok ? kExitOk : kExitNumeric;
}

int run_command(Command cmd, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd) {
      case Command::thermal: return run_thermal(cfg, out);
      case Command::dynamics: return run_dynamics(cfg, out);
      case Command::zeros: return run_zeros(cfg, out);
      case Command::qsl: return run_qsl(cfg, out);
      case Command::oracle_check: return run_oracle_check(cfg, out);
    }
    return kExitConfig;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InsufficientPointsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NormalizationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NegativeWeightError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace dpf::cli
