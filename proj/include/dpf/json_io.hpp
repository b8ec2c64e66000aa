// json_io.hpp - JSON wire formats for model specs, zero sets, and QSL reports
#pragma once

#include "dpf/model.hpp"
#include "dpf/qsl.hpp"
#include "dpf/zeros.hpp"

#include <json.hpp>

#include <utility>

namespace dpf {

using ordered_json = nlohmann::ordered_json;

// {"model": "...", "n": int?, "g": int?, "j": float?}; n and g appear only
// where the model uses them.
ordered_json model_to_json(const ModelSpec& spec, const UnitConvention& units = {});
std::pair<ModelSpec, UnitConvention> model_from_json(const ordered_json& j);

// {"roots":[{"re":..,"im":..,"mult":..,"class":".."}], "circle_tol":..}
ordered_json zero_set_to_json(const ZeroSet& zs);

// {"tau_mt":..,"tau_ml":..,"tau_bound":..,"tau_perp":null|..,
//  "saturated_mt":..,"saturated_ml":..}
ordered_json qsl_report_to_json(const QslReport& report);

// JSON has no inf literal; infinities become the string "inf".
ordered_json json_number(double x);

}  // namespace dpf
