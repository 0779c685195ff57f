#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "rlab/analysis.hpp"
#include "rlab/corpus.hpp"
#include "rlab/error.hpp"

using namespace rlab;

namespace {

StepFunction chi(double a, double b) { return characteristic(IntervalSet({{a, b}})); }

std::vector<double> uniform_points(int n, double lo, double hi) {
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) xs.push_back(lo + (hi - lo) * (i + 0.5) / n);
  return xs;
}

}  // namespace

TEST_CASE("maximal function of an indicator") {
  const auto mf = maximal(chi(0.3, 0.5));
  CHECK(std::abs(mf(0.2) - 1.0 / 3.0) <= 1e-12);
  CHECK(std::abs(mf(0.4) - 1.0) <= 1e-12);
  CHECK(std::abs(mf(0.8) - 0.2) <= 1e-12);
  // At a jump the r → 0⁺ limit is the mean of the one-sided values, but a
  // small ball to the right already averages higher.
  CHECK(mf(0.3) >= 0.5);
  CHECK(maximal(StepFunction::zero())(0.5) == 0.0);
}

TEST_CASE("maximal function matches the dense-radius oracle") {
  Corpus corpus(51);
  for (int n = 0; n < 10; ++n) {
    const auto f = corpus.signed_function();
    const auto mf = maximal(f);
    for (double x : uniform_points(100, 0.0, 1.0)) {
      const double exact = mf(x);
      const double brute = oracle::brute_maximal(f, x);
      CHECK(exact >= brute - 1e-12);
      CHECK(std::abs(exact - brute) <= 1e-8);
    }
  }
}

TEST_CASE("maximal function dominates |f| and is homogeneous") {
  Corpus corpus(52);
  for (int n = 0; n < 50; ++n) {
    const auto f = corpus.signed_function();
    const auto mf = maximal(f);
    const auto m3 = maximal(scale(f, -3.0));
    for (double x : uniform_points(200, 0.0, 1.0)) {
      CHECK(mf(x) >= std::abs(f(x)));
      CHECK(m3(x) == doctest::Approx(3.0 * mf(x)).epsilon(1e-13));
    }
  }
}

TEST_CASE("kernels have unit mass") {
  for (const auto& k : {Kernel::box(), Kernel::triangle(), Kernel::smooth_bump(), Kernel::box(0.2),
                        Kernel::triangle(3.0), Kernel::smooth_bump(0.5), Kernel::custom_step({-1, 0, 1}, {0.5, 2})}) {
    CHECK(k.cdf(k.half_width()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k.cdf(-k.half_width()) == 0.0);
  }
  CHECK(1.0 / (Kernel::smooth_bump().normalization()) == doctest::Approx(0.443994).epsilon(1e-6));
  CHECK_THROWS_AS(Kernel::box(0.0), ValidationError);
  CHECK_THROWS_AS(Kernel::custom_step({-1, 1}, {0}), ValidationError);
  CHECK_THROWS_AS(ScaledKernel(Kernel::box(), 0.0), ValidationError);
}

TEST_CASE("scaled kernels preserve mass") {
  const ScaledKernel phi(Kernel::triangle(), 0.1);
  CHECK(phi(0.0) == doctest::Approx(10.0));
  CHECK(phi.cdf(0.1) == 1.0);
  CHECK(phi.cdf(0.0) == doctest::Approx(0.5));
}

TEST_CASE("radial majorant and potential type") {
  for (const auto& k : {Kernel::box(), Kernel::triangle()}) {
    const auto env = radial_majorant(k);
    CHECK(env.equals_kernel());
    for (double x : uniform_points(50, -1.2, 1.2)) CHECK(env(x) == k(x));
    const auto pt = is_potential_type(k);
    CHECK(pt.potential_type);
    CHECK(pt.majorant_integral == 1.0);
  }
  const auto asym = Kernel::custom_step({-1, 0, 1}, {0.5, 2});
  const auto env = radial_majorant(asym);
  CHECK_FALSE(env.equals_kernel());
  // Normalized values are 0.2 and 0.8; the envelope is 0.8 on |x| < 1.
  for (double x : {-0.9, -0.3, 0.0, 0.5}) CHECK(env(x) == doctest::Approx(0.8));
  CHECK(env(1.5) == 0.0);
  const auto pt = is_potential_type(asym);
  CHECK(pt.potential_type);
  CHECK(pt.majorant_integral == doctest::Approx(1.6));
}

TEST_CASE("convolution of a box with an indicator") {
  const auto f = chi(0.3, 0.5);
  const ScaledKernel phi(Kernel::box(), 0.1);
  CHECK(convolve_at(phi, f, 0.4) == doctest::Approx(1.0));
  CHECK(convolve_at(phi, f, 0.3) == doctest::Approx(0.5));
  const auto conv = convolve(phi, f);
  CHECK(conv.degree() == 1);
  CHECK(conv(0.3) == doctest::Approx(0.5));
  CHECK(conv(0.27) == doctest::Approx(0.2));
  CHECK(conv(0.6) == 0.0);
}

TEST_CASE("convolution preserves mass and matches pointwise evaluation") {
  Corpus corpus(53);
  for (int n = 0; n < 20; ++n) {
    const auto f = corpus.signed_function();
    for (const auto& k : {Kernel::box(), Kernel::triangle(), Kernel::custom_step({-1, 0, 1}, {0.5, 2})}) {
      const ScaledKernel phi(k, corpus.uniform(0.01, 0.3));
      const auto conv = convolve(phi, f);
      CHECK(conv.degree() <= (k.kind() == KernelKind::triangle ? 2 : 1));
      CHECK(conv.integral() == doctest::Approx(integrate(f, MeasureDensity::lebesgue())).epsilon(1e-12));
      for (double x : uniform_points(97, -0.3, 1.3))
        CHECK(conv(x) == doctest::Approx(convolve_at(phi, f, x)).epsilon(1e-10).scale(1.0));
    }
  }
  const auto f = chi(0.3, 0.5);
  const ScaledKernel bump(Kernel::smooth_bump(), 0.05);
  const auto conv = convolve(bump, f);
  CHECK(conv.integral() == doctest::Approx(0.2).epsilon(1e-9));
  for (double x : uniform_points(40, 0.2, 0.6)) CHECK(std::abs(conv(x) - convolve_at(bump, f, x)) < 1e-7);
}

TEST_CASE("convolution commutes with interior translation") {
  const auto f = make_step({0, 0.3, 0.4, 0.5, 1}, {0, 2, -1, 0});
  const auto g = make_step({0, 0.4, 0.5, 0.6, 1}, {0, 2, -1, 0});
  const ScaledKernel phi(Kernel::triangle(), 0.05);
  for (double x : uniform_points(50, 0.2, 0.6))
    CHECK(convolve_at(phi, g, x + 0.1) == doctest::Approx(convolve_at(phi, f, x)).epsilon(1e-12).scale(1.0));
}

TEST_CASE("step approximation") {
  const PiecewisePoly constant({0, 1}, {{{2.0, 0.0, 0.0}}});
  CHECK(step_approximate(constant, 8) == StepFunction::constant(2.0));
  const PiecewisePoly ramp({0, 1}, {{{0.0, 1.0, 0.0}}});
  const auto two = step_approximate(ramp, 2);
  CHECK(two.breakpoints()[0] == 0.0);
  CHECK(two(0.1) == doctest::Approx(two.length(0) / 2));
  CHECK_THROWS_AS(step_approximate(ramp, 1), ValidationError);
}

TEST_CASE("uniform cells average a ramp exactly") {
  const PiecewisePoly ramp({0, 1}, {{{0.0, 1.0, 0.0}}});
  const std::vector<double> cells{0.0, 0.5, 1.0};
  const auto s = step_approximate(ramp, cells);
  CHECK(s.values()[0] == doctest::Approx(0.25));
  CHECK(s.values()[1] == doctest::Approx(0.75));
}

TEST_CASE("pointwise domination by the maximal function") {
  CHECK(domination_check(Kernel::box(), StepFunction::zero(), uniform_points(10, 0, 1), uniform_points(5, 0, 1)).holds);
  const auto ts = uniform_points(100, 0.001, 1.0);
  const auto xs = uniform_points(100, 0.0, 1.0);
  const auto rep = domination_check(Kernel::box(), chi(0.3, 0.5), xs, ts);
  CHECK(rep.holds);
  CHECK(rep.min_slack >= 0.0);
  CHECK(rep.checked == 10000);
  Corpus corpus(54);
  for (int n = 0; n < 5; ++n) CHECK(domination_check(Kernel::triangle(), corpus.signed_function(), xs, ts).holds);
  CHECK_THROWS_AS(domination_check(Kernel::box(), chi(0.3, 0.5), {}, ts), ValidationError);
}

TEST_CASE("convergence sweep") {
  SpaceSpec spec;
  spec.kind = SpaceKind::lambda_grand;
  spec.p = 2;
  spec.weight = Weight::unit();
  SweepOptions opts;
  opts.n = 1024;
  opts.grid.grid_size = 256;
  const double ts[] = {0.2, 0.1, 0.05, 0.025};
  const auto rows = convergence_sweep(chi(0.3, 0.5), Kernel::box(), ts, spec, opts);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].err < rows[i - 1].err);
  for (const auto& r : rows) {
    CHECK(r.ratio <= 1.0 + 1e-9);
    CHECK(r.drift < 1e-4);
  }

  // Constant f: only the boundary strips contribute, err shrinks like a
  // power of t.
  const double ts2[] = {0.1, 0.01};
  const auto flat = convergence_sweep(StepFunction::constant(1.0), Kernel::box(), ts2, spec, opts);
  CHECK(flat[1].err < flat[0].err);
  CHECK(flat[1].err / flat[0].err < 0.5);
}
