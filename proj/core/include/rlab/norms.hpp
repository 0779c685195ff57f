#pragma once

#include <limits>
#include <optional>
#include <string_view>

#include "rlab/eps_engine.hpp"
#include "rlab/rearrange.hpp"
#include "rlab/stepfn.hpp"
#include "rlab/weight.hpp"

namespace rlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class SpaceKind {
  lambda_classical,
  lambda_grand,
  lorentz_pq,
  lorentz_pq_star,
  grand_lebesgue,
  grand_lorentz_pq,
};

std::string_view to_string(SpaceKind kind);
SpaceKind parse_space_kind(std::string_view name);
bool is_grand(SpaceKind kind);

/// Which norm to evaluate, with its exponents, weight and the measure used to
/// rearrange. `fixed_eps` turns a grand kind into its single ε-slice.
struct SpaceSpec {
  SpaceKind kind = SpaceKind::lorentz_pq;
  double p = 2.0;
  double q = kInf;
  std::optional<Weight> weight;
  MeasureDensity measure = MeasureDensity::lebesgue();
  std::optional<double> fixed_eps;

  void validate() const;

  /// Upper end of the ε interval for grand kinds (q − 1 or p − 1).
  double eps_upper() const;
};

// Classical Lorentz L^{p,q}: ((q/p)∫_0^∞ t^{q/p−1} f*(t)^q dt)^{1/q}, or
// sup t^{1/p} f*(t) for q = ∞. Exact power-rule sums.
double lorentz_pq_norm(const Rearrangement& fstar, double p, double q);
double lorentz_pq_norm(const StepFunction& f, double p, double q,
                       const MeasureDensity& mu = MeasureDensity::lebesgue());

// Same with f** in place of f*. Pieces with both a and b nonzero go through
// adaptive quadrature; q = ∞ uses endpoint and critical-point candidates.
double lorentz_pq_star_norm(const Rearrangement& fstar, double p, double q);
double lorentz_pq_star_norm(const StepFunction& f, double p, double q,
                            const MeasureDensity& mu = MeasureDensity::lebesgue());

/// ∫_0^1 f*(t)^s ω(t) dt, exact per segment of f*.
double weighted_power_integral(const Rearrangement& fstar, double s, const Weight& w);

/// (ε ∫_0^1 f*^{s−ε} ω)^{1/(s−ε)}.
double grand_weighted_slice(const Rearrangement& fstar, double s, const Weight& w, double eps);

/// sup over 0 < ε < s−1 of grand_weighted_slice. The grand Lorentz and grand
/// Λ norms are both this with different (s, ω).
EpsSupResult grand_weighted_sup(const Rearrangement& fstar, double s, const Weight& w,
                                const EpsGridOptions& opts = {});

EpsSupResult grand_lebesgue_norm(const StepFunction& f, double p, const EpsGridOptions& opts = {},
                                 const MeasureDensity& mu = MeasureDensity::lebesgue());

EpsSupResult grand_lorentz_pq_norm(const StepFunction& f, double p, double q,
                                   const MeasureDensity& mu = MeasureDensity::lebesgue(),
                                   const EpsGridOptions& opts = {});

double lambda_norm(const StepFunction& f, double p, const Weight& w,
                   const MeasureDensity& mu = MeasureDensity::lebesgue());

EpsSupResult grand_lambda_norm(const StepFunction& f, double p, const Weight& w,
                               const MeasureDensity& mu = MeasureDensity::lebesgue(),
                               const EpsGridOptions& opts = {});

/// Full ε profile of a grand norm. Throws ValidationError for non-grand kinds.
EpsSupResult eps_profile(const StepFunction& f, const SpaceSpec& spec, std::size_t grid_size);

/// Fixed-ε slice of a grand norm.
double grand_slice(const StepFunction& f, const SpaceSpec& spec, double eps);

/// Norm value for any kind; honours fixed_eps.
double evaluate_norm(const StepFunction& f, const SpaceSpec& spec, const EpsGridOptions& opts = {});

}  // namespace rlab
