#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "rlab/analysis.hpp"
#include "rlab/embeddings.hpp"
#include "rlab/kernel.hpp"
#include "rlab/norms.hpp"
#include "rlab/rearrange.hpp"
#include "rlab/stepfn.hpp"

// JSON formats shared by the CLI and scripts. All readers throw
// ValidationError naming the offending field.
namespace rlab::io {

using nlohmann::json;

/// Parses text, reporting the byte offset of syntax errors.
json parse(std::string_view text, std::string_view what);
json read_file(const std::string& path);
/// Inline JSON when `arg` starts with '{' or '[', otherwise a file path.
json read_arg(const std::string& arg);

// {"breakpoints":[0,0.2,0.5,1],"values":[3,1,2]}
StepFunction step_from_json(const json& j);
json to_json(const StepFunction& f);

// {"density":{...StepFunction...}}
MeasureDensity measure_from_json(const json& j);
json to_json(const MeasureDensity& mu);

// {"power_weight":{"alpha":0.0,"coeff":1.0}} or {"density":{...}}
Weight weight_from_json(const json& j);
json to_json(const Weight& w);

// [[0.3,0.5],[0.7,0.9]]
IntervalSet intervals_from_json(const json& j);

// {"kind":"grand_lorentz_pq","p":2,"q":2} with optional "weight", "measure",
// "eps"; q may be a number or "inf".
SpaceSpec spec_from_json(const json& j);
json to_json(const SpaceSpec& spec);

// {"kind":"box","half_width":0.5}; custom_step takes "breakpoints"/"values".
Kernel kernel_from_json(const json& j);

// Breakpoints [0, ..., μ(X)], zero tail padded to 1 when μ(X) < 1.
json to_json(const Rearrangement& r);
json to_json(const AverageFunction& avg);

// {"value":..., "eps_star":..., "endpoint_limit":..., "profile":[[eps,value],...]}
json to_json(const EpsSupResult& r);

// {"condition_value":..., "holds":..., "empirical_constant":..., "witness":..., "seed":...}
json to_json(const EmbeddingVerdict& v);

/// Infinity is written as the string "inf".
json number(double x);

/// Shortest-round-trip-safe decimal with 17 significant digits, '.' separator.
std::string format_double(double x);

}  // namespace rlab::io
