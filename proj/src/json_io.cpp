// json_io.cpp
#include "dpf/json_io.hpp"

#include <cmath>

namespace dpf {

ordered_json json_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

ordered_json model_to_json(const ModelSpec& spec, const UnitConvention& units) {
  ordered_json j;
  j["model"] = model_name(spec);
  if (const auto* d = std::get_if<DegenerateQubit>(&spec)) j["g"] = d->upper_degeneracy;
  if (const auto* p = std::get_if<ProductChain>(&spec)) j["n"] = p->n_sites;
  if (const auto* i = std::get_if<IsingOpenChain>(&spec)) j["n"] = i->n_sites;
  j["j"] = units.j;
  return j;
}

std::pair<ModelSpec, UnitConvention> model_from_json(const ordered_json& j) {
  const std::string name = j.at("model").get<std::string>();
  UnitConvention units;
  if (j.contains("j")) units = UnitConvention(j["j"].get<double>(), 1.0);
  if (name == "single_qubit") return {SingleQubit{}, units};
  if (name == "degenerate_qubit") return {DegenerateQubit{j.at("g").get<int>()}, units};
  if (name == "product_chain") return {ProductChain{j.at("n").get<int>()}, units};
  if (name == "ising_open_chain") return {IsingOpenChain{j.at("n").get<int>()}, units};
  throw std::invalid_argument("model_from_json: unknown model '" + name + "'");
}

ordered_json zero_set_to_json(const ZeroSet& zs) {
  ordered_json j;
  j["roots"] = ordered_json::array();
  for (const Root& r : zs.roots) {
    ordered_json jr;
    jr["re"] = r.location.real();
    jr["im"] = r.location.imag();
    jr["mult"] = r.multiplicity;
    jr["class"] = root_class_name(r.cls);
    j["roots"].push_back(std::move(jr));
  }
  j["circle_tol"] = zs.circle_tol;
  return j;
}

ordered_json qsl_report_to_json(const QslReport& report) {
  ordered_json j;
  j["tau_mt"] = json_number(report.tau_mt);
  j["tau_ml"] = json_number(report.tau_ml);
  j["tau_bound"] = json_number(report.tau_bound);
  j["tau_perp"] = report.tau_perp.has_value() ? json_number(*report.tau_perp) : ordered_json(nullptr);
  j["saturated_mt"] = report.saturated_mt;
  j["saturated_ml"] = report.saturated_ml;
  return j;
}

}  // namespace dpf
