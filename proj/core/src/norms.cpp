#include "rlab/norms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "rlab/error.hpp"
#include "rlab/quad.hpp"

namespace rlab {

namespace {

constexpr std::array<std::pair<SpaceKind, std::string_view>, 6> kKindNames{{
    {SpaceKind::lambda_classical, "lambda_classical"},
    {SpaceKind::lambda_grand, "lambda_grand"},
    {SpaceKind::lorentz_pq, "lorentz_pq"},
    {SpaceKind::lorentz_pq_star, "lorentz_pq_star"},
    {SpaceKind::grand_lebesgue, "grand_lebesgue"},
    {SpaceKind::grand_lorentz_pq, "grand_lorentz_pq"},
}};

void require(bool ok, const char* msg) {
  if (!ok) throw ValidationError(msg);
}

EpsSupResult zero_result(double upper, const EpsGridOptions& opts) {
  EpsSupResult out;
  for (double e : eps_grid(upper, opts.grid_size, opts.delta)) out.profile.push_back({e, 0.0});
  return out;
}

Weight lorentz_weight(double p, double q) { return Weight::power(q / p - 1.0, q / p); }

}  // namespace

std::string_view to_string(SpaceKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

SpaceKind parse_space_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  throw ValidationError("unknown space kind: " + std::string(name));
}

bool is_grand(SpaceKind kind) {
  return kind == SpaceKind::lambda_grand || kind == SpaceKind::grand_lebesgue ||
         kind == SpaceKind::grand_lorentz_pq;
}

double SpaceSpec::eps_upper() const { return kind == SpaceKind::grand_lorentz_pq ? q - 1.0 : p - 1.0; }

void SpaceSpec::validate() const {
  require(std::isfinite(p) && p > 1.0, "space spec requires finite p > 1");
  require(!std::isnan(q), "q must be a number or infinity");
  switch (kind) {
    case SpaceKind::lambda_classical:
    case SpaceKind::lambda_grand:
      require(weight.has_value(), "lambda kinds require a weight");
      break;
    case SpaceKind::lorentz_pq:
    case SpaceKind::lorentz_pq_star:
      require(q > 0.0, "lorentz kinds require q > 0");
      break;
    case SpaceKind::grand_lorentz_pq:
      require(q > 1.0, "grand lorentz requires q > 1");
      break;
    case SpaceKind::grand_lebesgue:
      break;
  }
  if (fixed_eps) {
    require(is_grand(kind), "fixed eps only applies to grand kinds");
    require(kind != SpaceKind::grand_lorentz_pq || std::isfinite(q), "fixed eps needs finite q");
    require(*fixed_eps > 0.0 && *fixed_eps <= eps_upper(), "fixed eps outside (0, upper]");
  }
}

double lorentz_pq_norm(const Rearrangement& fstar, double p, double q) {
  require(p > 0.0 && q > 0.0, "lorentz norm requires p > 0 and q > 0");
  const auto bps = fstar.breakpoints();
  const auto vals = fstar.values();
  if (std::isinf(q)) {
    // t^{1/p} increasing: each segment's sup sits at its right endpoint.
    double best = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) best = std::max(best, vals[i] * std::pow(bps[i + 1], 1.0 / p));
    return best;
  }
  const double r = q / p;
  double sum = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] == 0.0) continue;
    sum += std::pow(vals[i], q) * (std::pow(bps[i + 1], r) - std::pow(bps[i], r));
  }
  return std::pow(sum, 1.0 / q);
}

double lorentz_pq_norm(const StepFunction& f, double p, double q, const MeasureDensity& mu) {
  return lorentz_pq_norm(rearrangement(f, mu), p, q);
}

double lorentz_pq_star_norm(const Rearrangement& fstar, double p, double q) {
  require(p > 1.0 && q > 0.0, "starred lorentz norm requires p > 1 and q > 0");
  if (fstar.is_zero()) return 0.0;
  const auto avg = average(fstar);
  if (std::isinf(q)) {
    auto g = [p](double a, double b, double t) { return std::pow(t, 1.0 / p) * (a + b / t); };
    double best = 0.0;
    for (const auto& pc : avg.pieces()) {
      if (pc.lo > 0.0) best = std::max(best, g(pc.a, pc.b, pc.lo));
      if (std::isfinite(pc.hi)) best = std::max(best, g(pc.a, pc.b, pc.hi));
      // g'(t) = t^{1/p−2}((a/p)t − b(1−1/p)) has its single sign change here.
      if (pc.a > 0.0 && pc.b != 0.0) {
        const double tc = pc.b * (p - 1.0) / pc.a;
        if (tc > pc.lo && tc < pc.hi) best = std::max(best, g(pc.a, pc.b, tc));
      }
    }
    return best;
  }
  const double r = q / p;
  double sum = 0.0;
  for (const auto& pc : avg.pieces()) {
    if (pc.a == 0.0 && pc.b == 0.0) continue;
    if (pc.b == 0.0) {
      sum += std::pow(pc.a, q) * (std::pow(pc.hi, r) - std::pow(pc.lo, r));
    } else if (pc.a == 0.0) {
      // r − q < 0, so the tail to infinity converges.
      const double e = r - q;
      const double hi_term = std::isfinite(pc.hi) ? std::pow(pc.hi, e) : 0.0;
      sum += r * std::pow(pc.b, q) * (hi_term - std::pow(pc.lo, e)) / e;
    } else {
      const double a = pc.a;
      const double b = pc.b;
      sum += r * integrate_smooth(
                     [=](double t) { return std::pow(t, r - 1.0) * std::pow(a + b / t, q); }, pc.lo, pc.hi);
    }
  }
  return std::pow(sum, 1.0 / q);
}

double lorentz_pq_star_norm(const StepFunction& f, double p, double q, const MeasureDensity& mu) {
  return lorentz_pq_star_norm(rearrangement(f, mu), p, q);
}

double weighted_power_integral(const Rearrangement& fstar, double s, const Weight& w) {
  const auto bps = fstar.breakpoints();
  const auto vals = fstar.values();
  double sum = 0.0;
  for (std::size_t i = 0; i < vals.size() && bps[i] < 1.0; ++i) {
    if (vals[i] == 0.0) continue;
    sum += std::pow(vals[i], s) * w.integral(bps[i], std::min(bps[i + 1], 1.0));
  }
  return sum;
}

double grand_weighted_slice(const Rearrangement& fstar, double s, const Weight& w, double eps) {
  if (eps <= 0.0) return 0.0;
  const double e = s - eps;
  return std::pow(eps * weighted_power_integral(fstar, e, w), 1.0 / e);
}

EpsSupResult grand_weighted_sup(const Rearrangement& fstar, double s, const Weight& w,
                                const EpsGridOptions& opts) {
  require(s > 1.0, "grand norm exponent must exceed 1");
  if (fstar.is_zero()) return zero_result(s - 1.0, opts);
  return eps_sup([&](double eps) { return grand_weighted_slice(fstar, s, w, eps); }, s - 1.0, opts);
}

EpsSupResult grand_lebesgue_norm(const StepFunction& f, double p, const EpsGridOptions& opts,
                                 const MeasureDensity& mu) {
  require(p > 1.0, "grand Lebesgue norm requires p > 1");
  if (f.is_zero()) return zero_result(p - 1.0, opts);
  auto slice = [&](double eps) {
    if (eps <= 0.0) return 0.0;
    return std::pow(eps * integrate_power(f, p - eps, mu), 1.0 / (p - eps));
  };
  return eps_sup(slice, p - 1.0, opts);
}

EpsSupResult grand_lorentz_pq_norm(const StepFunction& f, double p, double q, const MeasureDensity& mu,
                                   const EpsGridOptions& opts) {
  require(p > 1.0 && q > 1.0, "grand Lorentz norm requires p > 1 and q > 1");
  const auto fstar = rearrangement(f, mu);
  if (std::isinf(q)) {
    EpsSupResult out;
    const auto bps = fstar.breakpoints();
    const auto vals = fstar.values();
    for (std::size_t i = 0; i < vals.size() && bps[i] < 1.0; ++i)
      out.value = std::max(out.value, vals[i] * std::pow(std::min(bps[i + 1], 1.0), 1.0 / p));
    return out;
  }
  return grand_weighted_sup(fstar, q, lorentz_weight(p, q), opts);
}

double lambda_norm(const StepFunction& f, double p, const Weight& w, const MeasureDensity& mu) {
  require(p > 0.0, "lambda norm requires p > 0");
  return std::pow(weighted_power_integral(rearrangement(f, mu), p, w), 1.0 / p);
}

EpsSupResult grand_lambda_norm(const StepFunction& f, double p, const Weight& w, const MeasureDensity& mu,
                               const EpsGridOptions& opts) {
  require(p > 1.0, "grand lambda norm requires p > 1");
  return grand_weighted_sup(rearrangement(f, mu), p, w, opts);
}

EpsSupResult eps_profile(const StepFunction& f, const SpaceSpec& spec, std::size_t grid_size) {
  spec.validate();
  if (!is_grand(spec.kind)) throw ValidationError("eps_profile needs a grand space kind");
  if (spec.kind == SpaceKind::grand_lorentz_pq && std::isinf(spec.q))
    throw ValidationError("eps_profile needs finite q");
  EpsGridOptions opts;
  opts.grid_size = grid_size;
  switch (spec.kind) {
    case SpaceKind::grand_lebesgue: return grand_lebesgue_norm(f, spec.p, opts, spec.measure);
    case SpaceKind::grand_lorentz_pq: return grand_lorentz_pq_norm(f, spec.p, spec.q, spec.measure, opts);
    default: return grand_lambda_norm(f, spec.p, *spec.weight, spec.measure, opts);
  }
}

double grand_slice(const StepFunction& f, const SpaceSpec& spec, double eps) {
  spec.validate();
  switch (spec.kind) {
    case SpaceKind::grand_lebesgue:
      if (eps <= 0.0) return 0.0;
      return std::pow(eps * integrate_power(f, spec.p - eps, spec.measure), 1.0 / (spec.p - eps));
    case SpaceKind::grand_lorentz_pq:
      if (std::isinf(spec.q)) throw ValidationError("q = inf has no ε-slices");
      return grand_weighted_slice(rearrangement(f, spec.measure), spec.q, lorentz_weight(spec.p, spec.q), eps);
    case SpaceKind::lambda_grand:
      return grand_weighted_slice(rearrangement(f, spec.measure), spec.p, *spec.weight, eps);
    default:
      throw ValidationError("grand_slice needs a grand space kind");
  }
}

double evaluate_norm(const StepFunction& f, const SpaceSpec& spec, const EpsGridOptions& opts) {
  spec.validate();
  if (spec.fixed_eps) return grand_slice(f, spec, *spec.fixed_eps);
  switch (spec.kind) {
    case SpaceKind::lambda_classical: return lambda_norm(f, spec.p, *spec.weight, spec.measure);
    case SpaceKind::lambda_grand: return grand_lambda_norm(f, spec.p, *spec.weight, spec.measure, opts).value;
    case SpaceKind::lorentz_pq: return lorentz_pq_norm(f, spec.p, spec.q, spec.measure);
    case SpaceKind::lorentz_pq_star: return lorentz_pq_star_norm(f, spec.p, spec.q, spec.measure);
    case SpaceKind::grand_lebesgue: return grand_lebesgue_norm(f, spec.p, opts, spec.measure).value;
    case SpaceKind::grand_lorentz_pq: return grand_lorentz_pq_norm(f, spec.p, spec.q, spec.measure, opts).value;
  }
  throw ValidationError("unknown space kind");
}

}  // namespace rlab
