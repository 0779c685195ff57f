#include "rlab/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rlab/corpus.hpp"
#include "rlab/error.hpp"
#include "rlab/quad.hpp"
#include "rlab/rearrange.hpp"

namespace rlab {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw ValidationError(msg);
}

EmbeddingVerdict from_sup(const EpsSupResult& sup) {
  EmbeddingVerdict v;
  v.condition_value = sup.value;
  v.holds = std::isfinite(sup.value);
  if (sup.eps_star) {
    std::ostringstream os;
    os.precision(17);
    os << "sup at eps=" << *sup.eps_star << (sup.endpoint_limit ? " (endpoint limit)" : "");
    v.witness = os.str();
  }
  return v;
}

}  // namespace

WeightPrimitive w_primitive(const Weight& w) { return WeightPrimitive(w); }

EmbeddingVerdict wholds_check(double p, double q, const Weight& w, const EpsGridOptions& opts) {
  require(p > 1.0, "wholds_check requires p > 1");
  require(p <= q && std::isfinite(q), "wholds_check requires p <= q < inf");
  const double w1 = w.primitive(1.0);
  if (w1 == 0.0) {
    EmbeddingVerdict v;
    v.condition_value = kInf;
    v.witness = "W(1) = 0";
    return v;
  }
  auto slice = [&](double eps) { return std::pow(w1, 1.0 / (q - eps) - 1.0 / (p - eps)); };
  return from_sup(eps_sup(slice, p - 1.0, opts));
}

EmbeddingVerdict cross_weight_check(double p, double q, const Weight& w, const Weight& v,
                                    const EpsGridOptions& opts) {
  require(p > 1.0, "cross_weight_check requires p > 1");
  require(p <= q && std::isfinite(q), "cross_weight_check requires p <= q < inf");
  const double w1 = w.primitive(1.0);
  const double v1 = v.primitive(1.0);
  require(v1 > 0.0, "cross_weight_check requires V(1) > 0");
  auto slice = [&](double eps) { return std::pow(w1, 1.0 / (q - eps)) * std::pow(v1, -1.0 / (p - eps)); };
  return from_sup(eps_sup(slice, p - 1.0, opts));
}

double downward_integral(double p, double q, const Weight& w, const Weight& v, double eps) {
  const double r = 1.0 / (1.0 / q - 1.0 / p);
  const double e = (r - eps) / (p - eps);
  auto knots = w.knots();
  const auto vk = v.knots();
  knots.insert(knots.end(), vk.begin(), vk.end());
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  auto integrand = [&](double t) {
    const double vt = v.primitive(t);
    if (vt <= 0.0) return 0.0;
    return std::pow(w.primitive(t) / vt, e) * w(t);
  };
  const bool singular_start = w.is_power() || v.is_power();
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (i == 0 && singular_start) {
      sum += integrate_endpoint_singular(integrand, knots[0], knots[1]);
    } else {
      sum += integrate_smooth(integrand, knots[i], knots[i + 1]);
    }
  }
  return std::pow(sum, 1.0 / (r - eps));
}

EmbeddingVerdict downward_check(double p, double q, const Weight& w, const Weight& v, const EpsGridOptions& opts) {
  require(q > 1.0 && std::isfinite(p), "downward_check requires 1 < q < p < inf");
  require(q < p, "downward_check requires q < p");
  if (const auto* step = v.as_step()) {
    require(step->density().values()[0] > 0.0, "downward_check requires V(t) > 0 for t > 0");
  }
  EmbeddingVerdict verdict;
  verdict.holds = true;
  for (double eps : eps_grid(q - 1.0, opts.grid_size, opts.delta)) {
    double value = kInf;
    try {
      value = downward_integral(p, q, w, v, eps);
    } catch (const ComputationError&) {
    }
    if (!std::isfinite(value)) {
      verdict.holds = false;
      verdict.condition_value = kInf;
      std::ostringstream os;
      os.precision(17);
      os << "integral diverges at eps=" << eps;
      verdict.witness = os.str();
      return verdict;
    }
    verdict.condition_value = std::max(verdict.condition_value, value);
  }
  return verdict;
}

double domination_constant(const MeasureDensity& mu, const MeasureDensity& nu) {
  const auto grid = merged_grid(mu.density(), nu.density());
  const auto mv = values_on(mu.density(), grid);
  const auto nv = values_on(nu.density(), grid);
  double c = 0.0;
  for (std::size_t i = 0; i < mv.size(); ++i) {
    if (nv[i] == 0.0) continue;
    if (mv[i] == 0.0) return kInf;
    c = std::max(c, nv[i] / mv[i]);
  }
  return c;
}

bool mutual_ac(const MeasureDensity& mu, const MeasureDensity& nu) {
  const auto grid = merged_grid(mu.density(), nu.density());
  const auto mv = values_on(mu.density(), grid);
  const auto nv = values_on(nu.density(), grid);
  for (std::size_t i = 0; i < mv.size(); ++i)
    if ((mv[i] == 0.0) != (nv[i] == 0.0)) return false;
  return true;
}

double measure_slice(const StepFunction& f, double p, double q, double eps, const MeasureDensity& rearrange_under,
                     const MeasureDensity& integrate_against) {
  require(p > 1.0 && q > 1.0 && std::isfinite(q), "measure_slice requires p > 1 and finite q > 1");
  require(eps > 0.0 && eps <= q - 1.0, "measure_slice requires 0 < eps <= q - 1");
  const auto fstar = rearrangement(f, rearrange_under).on_unit_interval();
  const auto grid = merged_grid(fstar, integrate_against.density());
  const auto gv = values_on(fstar, grid);
  const auto rv = values_on(integrate_against.density(), grid);
  const double r = q / p;
  double sum = 0.0;
  for (std::size_t i = 0; i < gv.size(); ++i) {
    if (gv[i] == 0.0 || rv[i] == 0.0) continue;
    sum += std::pow(gv[i], q - eps) * rv[i] * (std::pow(grid[i + 1], r) - std::pow(grid[i], r));
  }
  return std::pow(eps * sum, 1.0 / (q - eps));
}

EmbeddingVerdict empirical_constant(const SpaceSpec& source, const SpaceSpec& target, int corpus_size,
                                    std::uint64_t seed, const EmpiricalOptions& opts) {
  source.validate();
  target.validate();
  require(corpus_size > 0, "corpus size must be positive");
  Corpus corpus(seed);
  EmbeddingVerdict verdict;
  verdict.seed = seed;
  double best = 0.0;
  int best_index = -1;
  std::optional<StepFunction> best_fn;
  for (int i = 0; i < corpus_size; ++i) {
    auto f = corpus.positive_function();
    const double s = evaluate_norm(f, source, opts.grid);
    const double t = evaluate_norm(f, target, opts.grid);
    if (s == 0.0) {
      if (t > 0.0) {
        verdict.condition_value = kInf;
        verdict.holds = false;
        verdict.empirical_constant = kInf;
        verdict.witness = "source norm 0 with positive target norm at corpus index " + std::to_string(i);
        verdict.witness_function = std::move(f);
        return verdict;
      }
      continue;
    }
    const double ratio = t / s;
    if (best_index < 0 || ratio > best) {
      best = ratio;
      best_index = i;
      best_fn = std::move(f);
    }
  }
  verdict.condition_value = best;
  verdict.holds = std::isfinite(best);
  verdict.empirical_constant = best;
  if (best_index >= 0) {
    verdict.witness = std::string(kCorpusVersion) + " index " + std::to_string(best_index);
    verdict.witness_function = std::move(best_fn);
  }
  return verdict;
}

double atom_bound(double p, double q, double r, double s, double c) {
  require(p < r, "atom_bound requires p < r");
  require(1.0 < q && q <= p && r <= s, "atom_bound requires 1 < q <= p < r <= s");
  require(c > 0.0, "atom_bound requires C > 0");
  return std::pow((s - 1.0) / (c * (q - 1.0)), r * p / (r - p));
}

std::vector<ProbeRow> shrinking_probe(double p, double q, double r, double s, std::span<const double> a_list,
                                      const EpsGridOptions& opts) {
  require(1.0 < q && q <= p && p < r && r <= s && std::isfinite(s), "shrinking_probe requires 1 < q <= p < r <= s < inf");
  std::vector<ProbeRow> rows;
  for (double a : a_list) {
    require(a > 0.0 && a <= 1.0, "shrinking_probe requires a in (0, 1]");
    const auto chi = characteristic(IntervalSet({{0.0, a}}));
    const double src = grand_lorentz_pq_norm(chi, p, q, MeasureDensity::lebesgue(), opts).value;
    const double tgt = grand_lorentz_pq_norm(chi, r, s, MeasureDensity::lebesgue(), opts).value;
    rows.push_back({a, src, tgt, tgt / src});
  }
  return rows;
}

}  // namespace rlab
