#include "rlab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rlab/error.hpp"

namespace rlab::io {
namespace {

const json& field(const json& j, const char* name, std::string_view ctx) {
  if (!j.is_object()) throw ValidationError(std::string(ctx) + ": expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ValidationError(std::string(ctx) + ": missing field \"" + name + "\"");
  return *it;
}

double real(const json& j, std::string_view ctx) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "Infinity") return kInf;
  }
  throw ValidationError(std::string(ctx) + ": expected a number");
}

std::vector<double> reals(const json& j, std::string_view ctx) {
  if (!j.is_array()) throw ValidationError(std::string(ctx) + ": expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(real(j[i], std::string(ctx) + "[" + std::to_string(i) + "]"));
  return out;
}

json array(std::span<const double> xs) {
  json a = json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

// Rethrows constructor diagnostics with the field context prepended.
template <class F>
auto in_context(std::string_view ctx, F&& build) {
  try {
    return build();
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(ctx) + ": " + e.what());
  }
}

}  // namespace

json parse(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Report line and column alongside the byte offset.
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ValidationError(std::string(what) + ": malformed JSON at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + " (" + e.what() + ")");
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

json read_arg(const std::string& arg) {
  const auto pos = arg.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && (arg[pos] == '{' || arg[pos] == '[')) return parse(arg, "inline JSON");
  return read_file(arg);
}

StepFunction step_from_json(const json& j) {
  auto bps = reals(field(j, "breakpoints", "step function"), "breakpoints");
  auto vals = reals(field(j, "values", "step function"), "values");
  return in_context("step function", [&] { return make_step(std::move(bps), std::move(vals)); });
}

json to_json(const StepFunction& f) { return {{"breakpoints", array(f.breakpoints())}, {"values", array(f.values())}}; }

MeasureDensity measure_from_json(const json& j) {
  const auto& d = field(j, "density", "measure");
  return in_context("measure", [&] { return MeasureDensity(step_from_json(d)); });
}

json to_json(const MeasureDensity& mu) { return {{"density", to_json(mu.density())}}; }

Weight weight_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("weight: expected a JSON object");
  if (auto it = j.find("power_weight"); it != j.end()) {
    const double alpha = it->contains("alpha") ? real((*it)["alpha"], "power_weight.alpha") : 0.0;
    const double coeff = it->contains("coeff") ? real((*it)["coeff"], "power_weight.coeff") : 1.0;
    return in_context("weight", [&] { return Weight::power(alpha, coeff); });
  }
  if (j.contains("density")) return Weight::step(measure_from_json(j));
  throw ValidationError("weight: expected \"power_weight\" or \"density\"");
}

json to_json(const Weight& w) {
  if (const auto* pw = w.as_power()) return {{"power_weight", {{"alpha", pw->alpha}, {"coeff", pw->coeff}}}};
  return to_json(*w.as_step());
}

IntervalSet intervals_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("interval set: expected an array of [a,b] pairs");
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto ab = reals(j[i], "intervals[" + std::to_string(i) + "]");
    if (ab.size() != 2) throw ValidationError("intervals[" + std::to_string(i) + "]: expected [a,b]");
    out.emplace_back(ab[0], ab[1]);
  }
  return in_context("interval set", [&] { return IntervalSet(std::move(out)); });
}

SpaceSpec spec_from_json(const json& j) {
  SpaceSpec spec;
  const auto& kind = field(j, "kind", "spec");
  if (!kind.is_string()) throw ValidationError("spec.kind: expected a string");
  spec.kind = parse_space_kind(kind.get<std::string>());
  spec.p = real(field(j, "p", "spec"), "spec.p");
  if (auto it = j.find("q"); it != j.end() && !it->is_null()) spec.q = real(*it, "spec.q");
  if (auto it = j.find("weight"); it != j.end() && !it->is_null()) spec.weight = weight_from_json(*it);
  if (auto it = j.find("measure"); it != j.end() && !it->is_null()) spec.measure = measure_from_json(*it);
  if (auto it = j.find("eps"); it != j.end() && !it->is_null()) spec.fixed_eps = real(*it, "spec.eps");
  in_context("spec", [&] {
    spec.validate();
    return 0;
  });
  return spec;
}

json to_json(const SpaceSpec& spec) {
  json j{{"kind", std::string(to_string(spec.kind))}, {"p", spec.p}, {"q", number(spec.q)}};
  if (spec.weight) j["weight"] = to_json(*spec.weight);
  if (!(spec.measure == MeasureDensity::lebesgue())) j["measure"] = to_json(spec.measure);
  if (spec.fixed_eps) j["eps"] = *spec.fixed_eps;
  return j;
}

Kernel kernel_from_json(const json& j) {
  const auto& kind_field = field(j, "kind", "kernel");
  if (!kind_field.is_string()) throw ValidationError("kernel.kind: expected a string");
  const auto kind = kind_field.get<std::string>();
  auto half = [&](double def) { return j.contains("half_width") ? real(j["half_width"], "kernel.half_width") : def; };
  return in_context("kernel", [&] {
    if (kind == "box") return Kernel::box(half(0.5));
    if (kind == "triangle") return Kernel::triangle(half(1.0));
    if (kind == "smooth_bump") return Kernel::smooth_bump(half(1.0));
    if (kind == "custom_step")
      return Kernel::custom_step(reals(field(j, "breakpoints", "kernel"), "kernel.breakpoints"),
                                 reals(field(j, "values", "kernel"), "kernel.values"));
    throw ValidationError("unknown kernel kind \"" + kind + "\"");
  });
}

json to_json(const Rearrangement& r) {
  std::vector<double> bps(r.breakpoints().begin(), r.breakpoints().end());
  std::vector<double> vals(r.values().begin(), r.values().end());
  if (r.domain_end() < 1.0) {
    bps.push_back(1.0);
    vals.push_back(0.0);
  }
  return {{"breakpoints", array(bps)}, {"values", array(vals)}};
}

json to_json(const AverageFunction& avg) {
  json pieces = json::array();
  for (const auto& p : avg.pieces())
    pieces.push_back({{"lo", number(p.lo)}, {"hi", number(p.hi)}, {"a", number(p.a)}, {"b", number(p.b)}});
  return {{"pieces", pieces}};
}

json to_json(const EpsSupResult& r) {
  json profile = json::array();
  for (const auto& s : r.profile) profile.push_back({number(s.eps), number(s.value)});
  return {{"value", number(r.value)},
          {"eps_star", r.eps_star ? number(*r.eps_star) : json(nullptr)},
          {"endpoint_limit", r.endpoint_limit},
          {"profile", profile}};
}

json to_json(const EmbeddingVerdict& v) {
  json j{{"condition_value", number(v.condition_value)},
         {"holds", v.holds},
         {"empirical_constant", v.empirical_constant ? number(*v.empirical_constant) : json(nullptr)},
         {"witness", v.witness ? json(*v.witness) : json(nullptr)},
         {"seed", v.seed ? json(*v.seed) : json(nullptr)}};
  if (v.witness_function) j["witness_function"] = to_json(*v.witness_function);
  return j;
}

json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return {buf, res.ptr};
}

}  // namespace rlab::io
