#include <cmath>

#include "doctest.h"
#include "rlab/corpus.hpp"
#include "rlab/error.hpp"
#include "rlab/stepfn.hpp"

using namespace rlab;

namespace {

StepFunction f312() { return make_step({0, 0.2, 0.5, 1}, {3, 1, 2}); }

std::vector<double> interior_samples(const StepFunction& f, const StepFunction& g) {
  std::vector<double> xs;
  const auto grid = merged_grid(f, g);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    for (double s : {0.1, 0.5, 0.9}) xs.push_back(grid[i] + s * (grid[i + 1] - grid[i]));
  return xs;
}

}  // namespace

TEST_CASE("make_step canonicalizes and validates") {
  const auto merged = make_step({0, 0.5, 1}, {2, 2});
  CHECK(merged.segments() == 1);
  CHECK(merged.values()[0] == 2.0);

  const auto f = f312();
  CHECK(f.segments() == 3);
  CHECK(f.breakpoints()[1] == 0.2);

  CHECK_THROWS_AS(make_step({0, 1, 0.5}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(make_step({0.1, 0.5, 1}, {1, 2}), ValidationError);
  CHECK_THROWS_AS(make_step({0, 0.5, 0.9}, {1, 2}), ValidationError);
  CHECK_THROWS_AS(make_step({0, 0.5, 1}, {1}), ValidationError);
  CHECK_THROWS_AS(make_step({0, 1}, {NAN}), ValidationError);
  CHECK_THROWS_AS(make_step({0, 1}, {INFINITY}), ValidationError);
}

TEST_CASE("evaluation takes the right-hand value and zero outside [0,1)") {
  const auto f = f312();
  CHECK(f(0.0) == 3.0);
  CHECK(f(0.2) == 1.0);
  CHECK(f(0.5) == 2.0);
  CHECK(f(0.99) == 2.0);
  CHECK(f(1.0) == 0.0);
  CHECK(f(-0.1) == 0.0);
}

TEST_CASE("pointwise operations") {
  const auto a = make_step({0, 0.5, 1}, {-1, 2});
  const auto ab = abs(a);
  CHECK(ab.values()[0] == 1.0);
  CHECK(ab.values()[1] == 2.0);

  const auto left = characteristic(IntervalSet({{0, 0.5}}));
  const auto right = characteristic(IntervalSet({{0.5, 1}}));
  CHECK(add(left, right) == StepFunction::constant(1.0));

  CHECK(scale(StepFunction::constant(1.0), 0.0).is_zero());
  CHECK(pointwise(PointwiseOp::scale, a, 0.0) == StepFunction::zero());
  CHECK(max(a, StepFunction::zero()) == make_step({0, 0.5, 1}, {0, 2}));
  CHECK(shift(a, 1.0) == make_step({0, 0.5, 1}, {0, 3}));
}

TEST_CASE("pointwise add agrees with evaluation on random pairs") {
  Corpus corpus(11);
  for (int n = 0; n < 200; ++n) {
    const auto f = corpus.signed_function();
    const auto g = corpus.signed_function();
    const auto h = add(f, g);
    const auto d = sub(f, g);
    for (double x : interior_samples(f, g)) {
      CHECK(h(x) == f(x) + g(x));
      CHECK(d(x) == f(x) - g(x));
    }
  }
}

TEST_CASE("canonicalization is idempotent") {
  Corpus corpus(12);
  for (int n = 0; n < 100; ++n) {
    const auto f = corpus.signed_function();
    const auto again = make_step({f.breakpoints().begin(), f.breakpoints().end()}, {f.values().begin(), f.values().end()});
    CHECK(again == f);
  }
}

TEST_CASE("level_measure") {
  const auto f = f312();
  const auto leb = MeasureDensity::lebesgue();
  CHECK(level_measure(f, 1.5, leb) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(level_measure(f, 3.0, leb) == 0.0);
  CHECK(level_measure(f, 10.0, leb) == 0.0);
  const MeasureDensity twice(make_step({0, 0.2, 0.5, 1}, {2, 2, 2}));
  CHECK(level_measure(f, 1.5, twice) == doctest::Approx(1.4).epsilon(1e-15));
  // Strict superlevel set.
  CHECK(level_measure(f, 2.0, leb) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("level_measure is nonincreasing and right-continuous") {
  Corpus corpus(13);
  for (int n = 0; n < 50; ++n) {
    const auto f = corpus.signed_function();
    const auto mu = corpus.positive_density();
    std::vector<double> ys;
    for (double v : f.values())
      for (double off : {-1e-9, 0.0, 1e-9}) ys.push_back(v + off);
    for (int k = -60; k <= 60; ++k) ys.push_back(k / 10.0);
    std::sort(ys.begin(), ys.end());
    double prev = INFINITY;
    for (double y : ys) {
      const double m = level_measure(f, y, mu);
      CHECK(m <= prev);
      prev = m;
    }
    for (double v : f.values()) CHECK(level_measure(f, v, mu) == level_measure(f, std::nextafter(v, INFINITY), mu));
  }
}

TEST_CASE("integrate") {
  const auto leb = MeasureDensity::lebesgue();
  CHECK(integrate(characteristic(IntervalSet({{0, 0.25}})), leb) == 0.25);
  CHECK(integrate(StepFunction::zero(), leb) == 0.0);
  CHECK(integrate(f312(), leb) == doctest::Approx(1.9).epsilon(1e-15));

  Corpus corpus(14);
  for (int n = 0; n < 200; ++n) {
    const auto f = corpus.signed_function();
    const auto mu = corpus.density_with_gaps();
    CHECK(integrate(abs(f), mu) >= std::abs(integrate(f, mu)));
  }
}

TEST_CASE("measure density") {
  CHECK_THROWS_AS(MeasureDensity(make_step({0, 0.5, 1}, {1, -1})), ValidationError);
  const MeasureDensity mu(make_step({0, 0.5, 1}, {1, 3}));
  CHECK(mu.total() == 2.0);
  CHECK(mu.measure(0.25, 0.75) == doctest::Approx(1.0));
}

TEST_CASE("characteristic of interval sets") {
  CHECK(characteristic(IntervalSet({{0.3, 0.5}})) == make_step({0, 0.3, 0.5, 1}, {0, 1, 0}));
  CHECK(characteristic(IntervalSet()).is_zero());
  CHECK(characteristic(IntervalSet({{0, 0.2}, {0.8, 1}})) == make_step({0, 0.2, 0.8, 1}, {1, 0, 1}));
  CHECK_THROWS_AS(IntervalSet({{0.3, 0.6}, {0.5, 0.9}}), ValidationError);
  CHECK_THROWS_AS(IntervalSet({{-0.1, 0.2}}), ValidationError);
}
