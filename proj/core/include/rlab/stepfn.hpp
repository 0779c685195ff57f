#pragma once

#include <span>
#include <utility>
#include <vector>

namespace rlab {

/// Piecewise-constant function on (0,1).
///
/// Breakpoints run strictly increasing from exactly 0 to exactly 1, with one
/// value per open segment. Construction canonicalizes: adjacent segments with
/// equal values are merged, so two functions compare equal iff they agree
/// almost everywhere.
///
/// Evaluation at a breakpoint returns the right-hand segment value. Outside
/// [0,1) the function is extended by zero.
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  static StepFunction constant(double c);
  static StepFunction zero() { return constant(0.0); }

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> values() const { return values_; }
  std::size_t segments() const { return values_.size(); }
  double left(std::size_t i) const { return breakpoints_[i]; }
  double right(std::size_t i) const { return breakpoints_[i + 1]; }
  double length(std::size_t i) const { return breakpoints_[i + 1] - breakpoints_[i]; }

  double operator()(double x) const;
  std::size_t segment_index(double x) const;

  bool is_zero() const;
  double max_abs() const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

StepFunction make_step(std::vector<double> breakpoints, std::vector<double> values);

/// Union of the breakpoint lists of `f` and `g`.
std::vector<double> merged_grid(const StepFunction& f, const StepFunction& g);

/// Values of `f` on each segment of `grid`, which must refine f's breakpoints.
std::vector<double> values_on(const StepFunction& f, std::span<const double> grid);

enum class PointwiseOp { add, sub, scale, abs, max };

StepFunction pointwise(PointwiseOp op, const StepFunction& f, const StepFunction& g);
StepFunction pointwise(PointwiseOp op, const StepFunction& f, double c);

StepFunction add(const StepFunction& f, const StepFunction& g);
StepFunction sub(const StepFunction& f, const StepFunction& g);
StepFunction max(const StepFunction& f, const StepFunction& g);
StepFunction scale(const StepFunction& f, double c);
StepFunction abs(const StepFunction& f);
StepFunction shift(const StepFunction& f, double c);

/// Absolutely continuous finite measure dμ = w dt on (0,1) with step density w.
class MeasureDensity {
 public:
  explicit MeasureDensity(StepFunction density);

  static MeasureDensity lebesgue();

  const StepFunction& density() const { return density_; }
  double total() const { return total_; }

  /// μ((a,b)) for 0 <= a <= b <= 1.
  double measure(double a, double b) const;

  friend bool operator==(const MeasureDensity& a, const MeasureDensity& b) {
    return a.density_ == b.density_;
  }

 private:
  StepFunction density_;
  double total_;
};

/// Sorted, pairwise disjoint open subintervals of (0,1).
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<std::pair<double, double>> intervals);

  std::span<const std::pair<double, double>> intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

 private:
  std::vector<std::pair<double, double>> intervals_;
};

/// μ{x : f(x) > y}, strict superlevel set of the signed function.
double level_measure(const StepFunction& f, double y, const MeasureDensity& mu);

/// ∫ f dμ as an exact segment sum on the merged grid.
double integrate(const StepFunction& f, const MeasureDensity& mu);

/// ∫ |f|^r dμ.
double integrate_power(const StepFunction& f, double r, const MeasureDensity& mu);

StepFunction characteristic(const IntervalSet& a);

}  // namespace rlab
