#include "rlab/stepfn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rlab/error.hpp"

namespace rlab {

namespace {

void canonicalize(std::vector<double>& bps, std::vector<double>& vals) {
  std::vector<double> nb{bps.front()};
  std::vector<double> nv;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!nv.empty() && nv.back() == vals[i]) {
      nb.back() = bps[i + 1];
    } else {
      nv.push_back(vals[i]);
      nb.push_back(bps[i + 1]);
    }
  }
  bps = std::move(nb);
  vals = std::move(nv);
}

}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.empty()) throw ValidationError("step function needs at least one segment");
  if (breakpoints_.size() != values_.size() + 1) {
    std::ostringstream os;
    os << "breakpoints/values length mismatch: " << breakpoints_.size() << " breakpoints for "
       << values_.size() << " values";
    throw ValidationError(os.str());
  }
  if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0)
    throw ValidationError("breakpoints must start at 0 and end at 1");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      std::ostringstream os;
      os << "breakpoints not strictly increasing at index " << i + 1;
      throw ValidationError(os.str());
    }
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      std::ostringstream os;
      os << "non-finite value at segment " << i;
      throw ValidationError(os.str());
    }
    // -0.0 and 0.0 compare equal but print differently.
    if (values_[i] == 0.0) values_[i] = 0.0;
  }
  canonicalize(breakpoints_, values_);
}

StepFunction StepFunction::constant(double c) { return StepFunction({0.0, 1.0}, {c}); }

std::size_t StepFunction::segment_index(double x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (idx == 0) return 0;
  return std::min(idx - 1, values_.size() - 1);
}

double StepFunction::operator()(double x) const {
  if (x < 0.0 || x >= 1.0) return 0.0;
  return values_[segment_index(x)];
}

bool StepFunction::is_zero() const { return values_.size() == 1 && values_[0] == 0.0; }

double StepFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

StepFunction make_step(std::vector<double> breakpoints, std::vector<double> values) {
  return StepFunction(std::move(breakpoints), std::move(values));
}

std::vector<double> merged_grid(const StepFunction& f, const StepFunction& g) {
  std::vector<double> out;
  out.reserve(f.breakpoints().size() + g.breakpoints().size());
  std::set_union(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
                 g.breakpoints().end(), std::back_inserter(out));
  return out;
}

std::vector<double> values_on(const StepFunction& f, std::span<const double> grid) {
  std::vector<double> out;
  out.reserve(grid.size() - 1);
  std::size_t j = 0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    while (j + 1 < f.segments() && f.right(j) <= grid[i]) ++j;
    out.push_back(f.values()[j]);
  }
  return out;
}

namespace {

template <class Op>
StepFunction combine(const StepFunction& f, const StepFunction& g, Op op) {
  auto grid = merged_grid(f, g);
  auto fv = values_on(f, grid);
  auto gv = values_on(g, grid);
  std::vector<double> vals(fv.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = op(fv[i], gv[i]);
  return StepFunction(std::move(grid), std::move(vals));
}

template <class Op>
StepFunction map(const StepFunction& f, Op op) {
  std::vector<double> vals(f.values().begin(), f.values().end());
  for (double& v : vals) v = op(v);
  return StepFunction({f.breakpoints().begin(), f.breakpoints().end()}, std::move(vals));
}

}  // namespace

StepFunction pointwise(PointwiseOp op, const StepFunction& f, const StepFunction& g) {
  switch (op) {
    case PointwiseOp::add: return add(f, g);
    case PointwiseOp::sub: return sub(f, g);
    case PointwiseOp::max: return max(f, g);
    case PointwiseOp::abs: return abs(f);
    case PointwiseOp::scale:
      return combine(f, g, [](double a, double b) { return a * b; });
  }
  throw ValidationError("unknown pointwise op");
}

StepFunction pointwise(PointwiseOp op, const StepFunction& f, double c) {
  switch (op) {
    case PointwiseOp::add: return shift(f, c);
    case PointwiseOp::sub: return shift(f, -c);
    case PointwiseOp::scale: return scale(f, c);
    case PointwiseOp::abs: return abs(f);
    case PointwiseOp::max: return map(f, [c](double v) { return std::max(v, c); });
  }
  throw ValidationError("unknown pointwise op");
}

StepFunction add(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](double a, double b) { return a + b; });
}
StepFunction sub(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](double a, double b) { return a - b; });
}
StepFunction max(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](double a, double b) { return std::max(a, b); });
}
StepFunction scale(const StepFunction& f, double c) {
  if (!std::isfinite(c)) throw ValidationError("non-finite scale factor");
  return map(f, [c](double v) { return c * v; });
}
StepFunction abs(const StepFunction& f) {
  return map(f, [](double v) { return std::abs(v); });
}
StepFunction shift(const StepFunction& f, double c) {
  if (!std::isfinite(c)) throw ValidationError("non-finite shift");
  return map(f, [c](double v) { return v + c; });
}

MeasureDensity::MeasureDensity(StepFunction density) : density_(std::move(density)), total_(0.0) {
  for (std::size_t i = 0; i < density_.segments(); ++i) {
    if (density_.values()[i] < 0.0) throw ValidationError("measure density must be nonnegative");
    total_ += density_.values()[i] * density_.length(i);
  }
}

MeasureDensity MeasureDensity::lebesgue() { return MeasureDensity(StepFunction::constant(1.0)); }

double MeasureDensity::measure(double a, double b) const {
  a = std::clamp(a, 0.0, 1.0);
  b = std::clamp(b, 0.0, 1.0);
  if (b <= a) return 0.0;
  double sum = 0.0;
  for (std::size_t i = density_.segment_index(a); i < density_.segments(); ++i) {
    const double lo = std::max(a, density_.left(i));
    const double hi = std::min(b, density_.right(i));
    if (lo >= b) break;
    if (hi > lo) sum += density_.values()[i] * (hi - lo);
  }
  return sum;
}

IntervalSet::IntervalSet(std::vector<std::pair<double, double>> intervals)
    : intervals_(std::move(intervals)) {
  std::sort(intervals_.begin(), intervals_.end());
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto [a, b] = intervals_[i];
    if (!(a >= 0.0 && b <= 1.0 && a < b)) throw ValidationError("interval must satisfy 0 <= a < b <= 1");
    if (i > 0 && intervals_[i - 1].second > a) throw ValidationError("intervals overlap");
  }
}

namespace {

// Calls fn(value, mu-mass) for each segment of the merged grid of f and mu.
template <class Fn>
void for_each_mass(const StepFunction& f, const MeasureDensity& mu, Fn fn) {
  const auto grid = merged_grid(f, mu.density());
  const auto fv = values_on(f, grid);
  const auto wv = values_on(mu.density(), grid);
  for (std::size_t i = 0; i < fv.size(); ++i) fn(fv[i], wv[i] * (grid[i + 1] - grid[i]));
}

}  // namespace

double level_measure(const StepFunction& f, double y, const MeasureDensity& mu) {
  double sum = 0.0;
  for_each_mass(f, mu, [&](double v, double m) {
    if (v > y) sum += m;
  });
  return sum;
}

double integrate(const StepFunction& f, const MeasureDensity& mu) {
  double sum = 0.0;
  for_each_mass(f, mu, [&](double v, double m) { sum += v * m; });
  return sum;
}

double integrate_power(const StepFunction& f, double r, const MeasureDensity& mu) {
  double sum = 0.0;
  for_each_mass(f, mu, [&](double v, double m) {
    if (v != 0.0 && m != 0.0) sum += std::pow(std::abs(v), r) * m;
  });
  return sum;
}

StepFunction characteristic(const IntervalSet& a) {
  if (a.empty()) return StepFunction::zero();
  std::vector<double> bps{0.0};
  std::vector<double> vals;
  for (const auto& [lo, hi] : a.intervals()) {
    if (lo > bps.back()) {
      vals.push_back(0.0);
      bps.push_back(lo);
    }
    vals.push_back(1.0);
    bps.push_back(hi);
  }
  if (bps.back() < 1.0) {
    vals.push_back(0.0);
    bps.push_back(1.0);
  }
  return StepFunction(std::move(bps), std::move(vals));
}

}  // namespace rlab
