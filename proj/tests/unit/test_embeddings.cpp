#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "rlab/corpus.hpp"
#include "rlab/embeddings.hpp"
#include "rlab/error.hpp"

using namespace rlab;

namespace {

Weight step_weight(std::vector<double> bps, std::vector<double> vals) {
  return Weight::step(MeasureDensity(make_step(std::move(bps), std::move(vals))));
}

MeasureDensity density(std::vector<double> bps, std::vector<double> vals) {
  return MeasureDensity(make_step(std::move(bps), std::move(vals)));
}

EpsGridOptions small_grid() {
  EpsGridOptions g;
  g.grid_size = 256;
  return g;
}

}  // namespace

TEST_CASE("weight primitives") {
  const auto one = w_primitive(Weight::unit());
  for (double t : {0.1, 0.5, 1.0}) CHECK(one(t) == doctest::Approx(t).epsilon(1e-15));
  const auto root = w_primitive(Weight::power(-0.5));
  for (double t : {0.04, 0.25, 1.0}) CHECK(root(t) == doctest::Approx(2 * std::sqrt(t)).epsilon(1e-14));
  CHECK(w_primitive(step_weight({0, 0.5, 1}, {2, 0}))(1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(Weight::power(-1.0), ValidationError);
}

TEST_CASE("wholds condition") {
  const auto unit = wholds_check(2, 3, Weight::unit());
  CHECK(unit.holds);
  CHECK(unit.condition_value == doctest::Approx(1.0).epsilon(1e-15));

  const auto four = wholds_check(2, 3, step_weight({0, 0.5, 1}, {6, 2}));
  CHECK(four.holds);
  CHECK(four.condition_value < 1.0);
  // Exponent 1/(3−ε) − 1/(2−ε) is negative and smallest in size at ε → 0.
  CHECK(four.condition_value == doctest::Approx(std::pow(4.0, 1.0 / 3 - 1.0 / 2)).epsilon(1e-9));

  CHECK_THROWS_AS(wholds_check(3, 2, Weight::unit()), ValidationError);
}

TEST_CASE("cross-weight condition") {
  const auto same = cross_weight_check(2, 3, Weight::unit(), Weight::unit());
  CHECK(same.holds);
  CHECK(same.condition_value == doctest::Approx(1.0).epsilon(1e-15));

  // sup over 0 < ε < 1 of 4^{−1/(2−ε)} is the ε → 0 limit 1/2.
  const auto v4 = cross_weight_check(2, 2, Weight::unit(), Weight::power(0.0, 4.0));
  CHECK(v4.holds);
  const auto ref = oracle::dense_sup([](double e) { return std::pow(4.0, -1 / (2 - e)); }, 1.0, 100000);
  CHECK(v4.condition_value >= ref.first);
  CHECK(v4.condition_value == doctest::Approx(0.5).epsilon(1e-9));

  CHECK_THROWS_AS(cross_weight_check(2, 2, Weight::unit(), step_weight({0, 1}, {0})), ValidationError);
}

TEST_CASE("downward condition") {
  const auto same = downward_check(3, 2, Weight::unit(), Weight::unit(), small_grid());
  CHECK(same.holds);
  CHECK(same.condition_value == doctest::Approx(1.0).epsilon(1e-9));

  // ω = t, ϑ = 1: W/V = t/2, so the ε-integral has a closed form.
  const auto lin = downward_check(3, 2, Weight::power(1.0), Weight::unit(), small_grid());
  CHECK(lin.holds);
  const double r = 6.0;
  for (double eps : {0.1, 0.5, 0.9}) {
    const double e = (r - eps) / (3 - eps);
    const double exact = std::pow(std::pow(0.5, e) / (e + 2), 1 / (r - eps));
    CHECK(downward_integral(3, 2, Weight::power(1.0), Weight::unit(), eps) == doctest::Approx(exact).epsilon(1e-9));
  }
  auto exact_at = [&](double eps) {
    const double e = (r - eps) / (3 - eps);
    return std::pow(std::pow(0.5, e) / (e + 2), 1 / (r - eps));
  };
  // The integral decreases in ε, so the sup is the ε → 0 value (1/16)^{1/6}.
  const auto ref = oracle::dense_sup(exact_at, 1.0, 20000);
  CHECK(lin.condition_value >= ref.first);
  CHECK(lin.condition_value == doctest::Approx(exact_at(0.0)).epsilon(1e-5));

  CHECK_THROWS_AS(downward_check(3, 2, Weight::unit(), step_weight({0, 0.2, 1}, {0, 1})), ValidationError);
  CHECK_THROWS_AS(downward_check(2, 3, Weight::unit(), Weight::unit()), ValidationError);
}

TEST_CASE("measure domination and equivalence") {
  CHECK(domination_constant(density({0, 0.5, 1}, {1, 2}), density({0, 0.5, 1}, {2, 2})) == 2.0);
  const auto mu = density({0, 0.3, 1}, {1, 0.5});
  CHECK(domination_constant(mu, mu) == 1.0);
  CHECK(std::isinf(domination_constant(density({0, 0.5, 1}, {0, 1}), density({0, 1}, {1}))));

  CHECK(mutual_ac(density({0, 0.5, 1}, {1, 2}), density({0, 0.5, 1}, {3, 1})));
  CHECK_FALSE(mutual_ac(density({0, 0.5, 1}, {0, 1}), density({0, 1}, {1})));
  CHECK(mutual_ac(density({0, 0.5, 1}, {0, 1}), density({0, 0.5, 1}, {0, 2})));
}

TEST_CASE("slice inequality under a dominated measure") {
  Corpus corpus(41);
  for (int n = 0; n < 30; ++n) {
    const auto f = corpus.positive_function();
    const auto mu = corpus.positive_density();
    const auto nu = corpus.density_with_gaps();
    const double c = domination_constant(mu, nu);
    REQUIRE(std::isfinite(c));
    for (double eps : eps_grid(1.0, 64, 1e-6)) {
      const double under_nu = measure_slice(f, 2, 2, eps, mu, nu);
      const double under_mu = measure_slice(f, 2, 2, eps, mu, mu);
      CHECK(std::pow(c, 1 / (2 - eps)) * under_mu - under_nu >= -1e-10 * std::max(1.0, under_nu));
    }
  }
}

TEST_CASE("weight equivalence transfers to grand Lambda norms") {
  // ω <= 3ϑ pointwise, so ‖f‖ with ω <= 3^{1/(p−ε)} ‖f‖ with ϑ slice by slice.
  const auto theta = step_weight({0, 0.4, 1}, {1, 2});
  const auto omega = step_weight({0, 0.4, 0.7, 1}, {3, 0.5, 6});
  Corpus corpus(42);
  for (int n = 0; n < 30; ++n) {
    const auto f = corpus.positive_function();
    SpaceSpec s;
    s.kind = SpaceKind::lambda_grand;
    s.p = 2.5;
    s.weight = omega;
    SpaceSpec t = s;
    t.weight = theta;
    for (double eps : eps_grid(1.5, 32, 1e-6)) {
      const double lhs = grand_slice(f, s, eps);
      const double rhs = std::pow(3.0, 1 / (2.5 - eps)) * grand_slice(f, t, eps);
      CHECK(lhs <= rhs * (1 + 1e-12));
    }
    CHECK(grand_lambda_norm(f, 2.5, omega).value <= 3.0 * grand_lambda_norm(f, 2.5, theta).value);
  }
}

TEST_CASE("empirical constants") {
  SpaceSpec a;
  a.kind = SpaceKind::grand_lorentz_pq;
  a.p = 2;
  a.q = 2;
  EmpiricalOptions opts;
  opts.grid.grid_size = 256;
  const auto same = empirical_constant(a, a, 20, 7, opts);
  CHECK(same.empirical_constant.value() == 1.0);
  CHECK(same.seed.value() == 7);
  CHECK(same.witness_function.has_value());

  SpaceSpec slice = a;
  slice.fixed_eps = 0.3;
  CHECK(empirical_constant(a, slice, 20, 8, opts).empirical_constant.value() <= 1.0);

  // Same seed, same answer.
  SpaceSpec b = a;
  b.p = 3;
  b.q = 3;
  const auto x = empirical_constant(a, b, 10, 9, opts);
  const auto y = empirical_constant(a, b, 10, 9, opts);
  CHECK(x.empirical_constant == y.empirical_constant);
  CHECK(x.witness == y.witness);
}

TEST_CASE("corollary chain stays bounded as the corpus grows") {
  SpaceSpec lower;
  lower.kind = SpaceKind::grand_lorentz_pq;
  lower.p = 2;
  lower.q = 1.5;
  SpaceSpec mid;
  mid.kind = SpaceKind::grand_lebesgue;
  mid.p = 2;
  SpaceSpec upper = lower;
  upper.q = 3;
  EmpiricalOptions opts;
  opts.grid.grid_size = 256;
  const double c1 = *empirical_constant(lower, mid, 30, 5, opts).empirical_constant;
  const double c1_more = *empirical_constant(lower, mid, 60, 5, opts).empirical_constant;
  const double c2 = *empirical_constant(mid, upper, 30, 5, opts).empirical_constant;
  CHECK(std::isfinite(c1));
  CHECK(std::isfinite(c2));
  CHECK(c1_more < 10 * c1);
}

TEST_CASE("atom bound") {
  CHECK(atom_bound(2, 2, 4, 4, 3) == doctest::Approx(1.0));
  CHECK(atom_bound(2, 2, 2.5, 2.5, 1.5) == doctest::Approx(1.0));
  CHECK(atom_bound(2, 2, 4, 4, 6) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK_THROWS_AS(atom_bound(4, 2, 2, 4, 1), ValidationError);
}

TEST_CASE("shrinking probe") {
  const double as[] = {1.0, 0.1, 1e-2, 1e-3, 1e-4, 1e-4 / 16};
  const auto rows = shrinking_probe(2, 2, 4, 4, as, small_grid());
  REQUIRE(rows.size() == 6);
  CHECK(std::isfinite(rows[0].ratio));
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(rows[i].ratio >= rows[i - 1].ratio);
  CHECK(rows[5].ratio / rows[4].ratio == doctest::Approx(2.0).epsilon(0.1));
}
