#include "rlab/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rlab/error.hpp"

namespace rlab {

namespace {

struct Mass {
  double value;
  double mass;
};

// (|f|, μ-mass) per segment of the merged grid, zero-mass segments dropped.
std::vector<Mass> segment_masses(const StepFunction& f, const MeasureDensity& mu) {
  const auto grid = merged_grid(f, mu.density());
  const auto fv = values_on(f, grid);
  const auto wv = values_on(mu.density(), grid);
  std::vector<Mass> out;
  out.reserve(fv.size());
  for (std::size_t i = 0; i < fv.size(); ++i) {
    const double m = wv[i] * (grid[i + 1] - grid[i]);
    if (m > 0.0) out.push_back({std::abs(fv[i]), m});
  }
  return out;
}

}  // namespace

Distribution::Distribution(std::vector<double> levels, std::vector<double> masses, double total)
    : levels_(std::move(levels)), above_(std::move(masses)), total_(total) {}

double Distribution::operator()(double y) const {
  if (levels_.empty()) return 0.0;
  auto it = std::upper_bound(levels_.begin(), levels_.end(), y);
  if (it == levels_.begin()) return total_;
  return above_[static_cast<std::size_t>(it - levels_.begin()) - 1];
}

Distribution distribution(const StepFunction& f, const MeasureDensity& mu) {
  auto masses = segment_masses(f, mu);
  std::sort(masses.begin(), masses.end(), [](const Mass& a, const Mass& b) { return a.value < b.value; });
  std::vector<double> levels;
  std::vector<double> mass_at;
  double total = 0.0;
  for (const auto& m : masses) {
    total += m.mass;
    if (!levels.empty() && levels.back() == m.value) {
      mass_at.back() += m.mass;
    } else {
      levels.push_back(m.value);
      mass_at.push_back(m.mass);
    }
  }
  // Suffix sums strictly above each level.
  std::vector<double> above(levels.size(), 0.0);
  double run = 0.0;
  for (std::size_t i = levels.size(); i-- > 0;) {
    above[i] = run;
    run += mass_at[i];
  }
  return Distribution(std::move(levels), std::move(above), total);
}

Rearrangement::Rearrangement(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() || breakpoints_.front() != 0.0 || breakpoints_.size() != values_.size() + 1)
    throw ValidationError("malformed rearrangement");
  cumulative_.assign(breakpoints_.size(), 0.0);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) throw ValidationError("rearrangement breakpoints not increasing");
    if (i > 0 && values_[i] > values_[i - 1]) throw ValidationError("rearrangement not nonincreasing");
    if (values_[i] < 0.0) throw ValidationError("rearrangement must be nonnegative");
    cumulative_[i + 1] = cumulative_[i] + values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
  }
}

bool Rearrangement::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

double Rearrangement::operator()(double t) const {
  if (t < 0.0 || t >= domain_end()) return 0.0;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double Rearrangement::cumulative(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= domain_end()) return cumulative_.back();
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return cumulative_[i] + values_[i] * (t - breakpoints_[i]);
}

StepFunction Rearrangement::on_unit_interval() const {
  std::vector<double> bps{0.0};
  std::vector<double> vals;
  for (std::size_t i = 0; i < values_.size() && breakpoints_[i] < 1.0; ++i) {
    vals.push_back(values_[i]);
    bps.push_back(std::min(breakpoints_[i + 1], 1.0));
  }
  if (bps.back() < 1.0) {
    vals.push_back(0.0);
    bps.push_back(1.0);
  }
  return StepFunction(std::move(bps), std::move(vals));
}

Rearrangement rearrangement(const StepFunction& f, const MeasureDensity& mu) {
  auto masses = segment_masses(f, mu);
  std::stable_sort(masses.begin(), masses.end(), [](const Mass& a, const Mass& b) { return a.value > b.value; });
  std::vector<double> bps{0.0};
  std::vector<double> vals;
  for (const auto& m : masses) {
    if (!vals.empty() && vals.back() == m.value) {
      bps.back() += m.mass;
    } else if (bps.back() + m.mass > bps.back()) {
      // Masses too small to advance the accumulated total are dropped.
      vals.push_back(m.value);
      bps.push_back(bps.back() + m.mass);
    }
  }
  return Rearrangement(std::move(bps), std::move(vals));
}

double AverageFunction::operator()(double t) const {
  if (t <= 0.0) throw ValidationError("f** is defined for t > 0");
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                             [](double x, const Piece& p) { return x < p.lo; });
  const Piece& p = *(it - 1);
  return p.a + p.b / t;
}

AverageFunction average(const Rearrangement& fstar) {
  std::vector<AverageFunction::Piece> pieces;
  const auto bps = fstar.breakpoints();
  const auto vals = fstar.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double c = fstar.cumulative(bps[i]);
    // First piece has b = 0 exactly since c = 0 and bps[0] = 0.
    pieces.push_back({bps[i], bps[i + 1], vals[i], c - vals[i] * bps[i]});
  }
  pieces.push_back({fstar.domain_end(), std::numeric_limits<double>::infinity(), 0.0,
                    fstar.cumulative(fstar.domain_end())});
  return AverageFunction(std::move(pieces));
}

double measure_gap(const StepFunction& fn, const StepFunction& f, double y, const MeasureDensity& mu) {
  if (!(y > 0.0)) throw ValidationError("measure_gap requires y > 0");
  return level_measure(abs(sub(fn, f)), y, mu);
}

}  // namespace rlab
