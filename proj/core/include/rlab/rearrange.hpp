#pragma once

#include <span>
#include <vector>

#include "rlab/stepfn.hpp"

namespace rlab {

/// y ↦ λ(y) = μ{|f| > y}: nonincreasing, right-continuous, jumping at the
/// distinct values of |f|.
class Distribution {
 public:
  Distribution(std::vector<double> levels, std::vector<double> masses, double total);

  /// Ascending distinct values of |f| carrying positive μ-mass.
  std::span<const double> levels() const { return levels_; }
  double total() const { return total_; }
  double operator()(double y) const;

 private:
  std::vector<double> levels_;
  std::vector<double> above_;  // above_[i] = λ(y) for y in [levels_[i], levels_[i+1])
  double total_;
};

/// Nonincreasing rearrangement f* of |f| on (0, μ(X)).
///
/// Stored with its own breakpoint list [0, ..., μ(X)]; evaluates to 0 for
/// t >= μ(X).
class Rearrangement {
 public:
  Rearrangement(std::vector<double> breakpoints, std::vector<double> values);

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> values() const { return values_; }
  std::size_t segments() const { return values_.size(); }
  double domain_end() const { return breakpoints_.back(); }
  bool is_zero() const;

  double operator()(double t) const;

  /// ∫_0^t f*(s) ds.
  double cumulative(double t) const;

  /// Representation on (0,1): zero tail when μ(X) < 1, truncated when μ(X) > 1.
  StepFunction on_unit_interval() const;

  friend bool operator==(const Rearrangement&, const Rearrangement&) = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<double> cumulative_;
};

/// f**(t) = a + b/t on each piece; the last piece runs from μ(X) to infinity
/// with a = 0.
class AverageFunction {
 public:
  struct Piece {
    double lo;
    double hi;  // +inf for the tail
    double a;
    double b;
  };

  explicit AverageFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

  std::span<const Piece> pieces() const { return pieces_; }
  double operator()(double t) const;

 private:
  std::vector<Piece> pieces_;
};

Distribution distribution(const StepFunction& f, const MeasureDensity& mu);

Rearrangement rearrangement(const StepFunction& f, const MeasureDensity& mu);
inline Rearrangement rearrangement(const StepFunction& f) {
  return rearrangement(f, MeasureDensity::lebesgue());
}

AverageFunction average(const Rearrangement& fstar);

/// μ{|fn − f| > y}; requires y > 0.
double measure_gap(const StepFunction& fn, const StepFunction& f, double y, const MeasureDensity& mu);

}  // namespace rlab
