#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rlab/eps_engine.hpp"
#include "rlab/norms.hpp"
#include "rlab/weight.hpp"

namespace rlab {

/// Outcome of an inclusion check or an empirical constant estimate.
struct EmbeddingVerdict {
  double condition_value = 0.0;  // +inf when the condition fails
  bool holds = false;
  std::optional<std::string> witness;
  std::optional<StepFunction> witness_function;
  std::optional<double> empirical_constant;
  std::optional<std::uint64_t> seed;
};

/// W(t) = ∫_0^t ω: piecewise linear for step weights, coeff t^{α+1}/(α+1) for
/// power weights.
class WeightPrimitive {
 public:
  explicit WeightPrimitive(Weight w) : weight_(std::move(w)) {}

  const Weight& weight() const { return weight_; }
  double operator()(double t) const { return weight_.primitive(t); }

 private:
  Weight weight_;
};

WeightPrimitive w_primitive(const Weight& w);

/// Λ_{p),ω} ↪ Λ_{q),ω} condition: sup over 0 < ε < p−1 of W(1)^{1/(q−ε)−1/(p−ε)}.
/// Requires 1 < p <= q < ∞.
EmbeddingVerdict wholds_check(double p, double q, const Weight& w, const EpsGridOptions& opts = {});

/// Λ_{p),ϑ} ↪ Λ_{q),ω} condition: sup over 0 < ε < p−1 of
/// W(1)^{1/(q−ε)} V(1)^{−1/(p−ε)}. Requires 1 < p <= q < ∞ and V(1) > 0.
EmbeddingVerdict cross_weight_check(double p, double q, const Weight& w, const Weight& v,
                                    const EpsGridOptions& opts = {});

/// Downward inclusion for 1 < q < p < ∞ with 1/r = 1/q − 1/p: for every ε on
/// the grid in (0, q−1), (∫_0^1 (W/V)^{(r−ε)/(p−ε)} ω dt)^{1/(r−ε)} by
/// quadrature. condition_value is the largest such value.
EmbeddingVerdict downward_check(double p, double q, const Weight& w, const Weight& v,
                                const EpsGridOptions& opts = {});

/// Integral of the downward condition at one ε.
double downward_integral(double p, double q, const Weight& w, const Weight& v, double eps);

/// Smallest C with ν(A) <= C μ(A) for all A: the essential sup of dν/dμ, or
/// +inf when ν charges a set where μ vanishes.
double domination_constant(const MeasureDensity& mu, const MeasureDensity& nu);

/// μ ≈ ν: the zero sets of the two densities coincide.
bool mutual_ac(const MeasureDensity& mu, const MeasureDensity& nu);

/// ((q/p) ε ∫_0^1 t^{q/p−1} g(t)^{q−ε} dρ(t))^{1/(q−ε)} with g = f* rearranged
/// under `rearrange_under` and the integral taken against `integrate_against`.
double measure_slice(const StepFunction& f, double p, double q, double eps, const MeasureDensity& rearrange_under,
                     const MeasureDensity& integrate_against);

struct EmpiricalOptions {
  EpsGridOptions grid;
};

/// Max of target/source norm over a seeded corpus (see Corpus::positive_function).
/// The maximizing function is returned as witness_function.
EmbeddingVerdict empirical_constant(const SpaceSpec& source, const SpaceSpec& target, int corpus_size,
                                    std::uint64_t seed, const EmpiricalOptions& opts = {});

/// M = ((s−1)/(C(q−1)))^{rp/(r−p)}; requires 1 < q <= p < r <= s and C > 0.
double atom_bound(double p, double q, double r, double s, double c);

struct ProbeRow {
  double a;
  double source_norm;  // ‖χ_(0,a)‖_{p,q)}
  double target_norm;  // ‖χ_(0,a)‖_{r,s)}
  double ratio;
};

/// Lebesgue-measure witness against L^{p,q)} ⊆ L^{r,s)}: the norm ratio along
/// χ_(0,a) as a shrinks.
std::vector<ProbeRow> shrinking_probe(double p, double q, double r, double s, std::span<const double> a_list,
                                      const EpsGridOptions& opts = {});

}  // namespace rlab
