#pragma once

#include <array>
#include <span>
#include <vector>

#include "rlab/stepfn.hpp"

namespace rlab {

/// Piecewise polynomial of degree <= 2 on [knots.front(), knots.back()], zero
/// outside. Segment i is c0 + c1 u + c2 u² with u = x − knots[i].
class PiecewisePoly {
 public:
  using Coeffs = std::array<double, 3>;

  PiecewisePoly(std::vector<double> knots, std::vector<Coeffs> coeffs);

  static PiecewisePoly from_step(const StepFunction& f);
  /// Quadratic through (x0,y0), (xm,ym), (x1,y1) with xm the midpoint.
  static Coeffs fit_quadratic(double x0, double x1, double y0, double ym, double y1);

  std::span<const double> knots() const { return knots_; }
  std::span<const Coeffs> coeffs() const { return coeffs_; }
  std::size_t segments() const { return coeffs_.size(); }
  int degree() const;

  double operator()(double x) const;
  /// Exact ∫_a^b.
  double integral(double a, double b) const;
  double integral() const { return integral(knots_.front(), knots_.back()); }

  friend PiecewisePoly operator-(const PiecewisePoly& g, const PiecewisePoly& h);

 private:
  double segment_integral(std::size_t i, double a, double b) const;

  std::vector<double> knots_;
  std::vector<Coeffs> coeffs_;
};

/// Each non-constant piece of a step approximation is split into at least
/// n / kPieceCellDivisor equal cells.
inline constexpr int kPieceCellDivisor = 16;

/// Cells of the uniform n-partition of (0,1), refined by every knot of `g`
/// inside (0,1) so no cell straddles a discontinuity of g, and by the
/// per-piece subdivision above.
std::vector<double> approximation_cells(const PiecewisePoly& g, int n);

/// Step function of exact cell averages of g over approximation_cells(g, n).
StepFunction step_approximate(const PiecewisePoly& g, int n);

/// Step function of exact cell averages of g over the given cells.
StepFunction step_approximate(const PiecewisePoly& g, std::span<const double> cells);

}  // namespace rlab
