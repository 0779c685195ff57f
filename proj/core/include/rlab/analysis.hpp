#pragma once

#include <span>
#include <vector>

#include "rlab/kernel.hpp"
#include "rlab/norms.hpp"
#include "rlab/piecewise_poly.hpp"
#include "rlab/stepfn.hpp"

namespace rlab {

/// Centered Hardy–Littlewood maximal function of a step function extended by
/// zero outside (0,1).
///
/// For fixed x the ball integral F(r) = ∫_{x−r}^{x+r} |f| is affine in r
/// between consecutive candidate radii |x − b_i|, so the average F(r)/(2r)
/// is monotone there and the sup is attained at a candidate radius or in the
/// limit r → 0⁺. Every candidate radius is at most 1 + |x| <= 2 for x in
/// [0,1]; past the largest one F is constant and the average decreases.
class MaximalFunction {
 public:
  explicit MaximalFunction(const StepFunction& f);

  double operator()(double x) const;

  /// ∫_a^b |f|, zero-extended.
  double ball_integral(double a, double b) const;

  std::vector<double> sample(std::span<const double> xs) const;

  /// Cell averages of Mf by adaptive quadrature, split at the kinks of Mf
  /// that can be located cheaply (breakpoints of f and their midpoints).
  StepFunction cell_averages(std::span<const double> cells) const;

 private:
  StepFunction abs_f_;
};

MaximalFunction maximal(const StepFunction& f);

/// (φ_t ∗ f)(x) = Σ_i v_i (Φ_t(x − b_i) − Φ_t(x − b_{i+1})) with f zero-extended.
double convolve_at(const ScaledKernel& phi_t, const StepFunction& f, double x);

/// Sampling of smooth_bump convolutions: every knot cell gets at least
/// kBumpSubdivisions pieces, each no wider than the scaled half-width divided
/// by kBumpPiecesPerHalfWidth.
inline constexpr int kBumpSubdivisions = 16;
inline constexpr double kBumpPiecesPerHalfWidth = 128.0;

/// Exact piecewise-polynomial φ_t ∗ f on its full support for box,
/// triangle and custom_step kernels. smooth_bump is sampled: pieces as above,
/// each fitted by the quadratic through exact values at its ends and midpoint.
PiecewisePoly convolve(const ScaledKernel& phi_t, const StepFunction& f);

struct DominationReport {
  bool holds = true;
  double min_slack = 0.0;  // min over grid of Mf(x) − |φ_t ∗ f(x)|
  double worst_x = 0.0;
  double worst_t = 0.0;
  std::size_t violations = 0;
  std::size_t checked = 0;
};

/// |φ_t ∗ f(x)| <= Mf(x) on every (x, t) grid pair, violations beyond `tol`.
DominationReport domination_check(const Kernel& phi, const StepFunction& f, std::span<const double> x_grid,
                                  std::span<const double> t_grid, double tol = 1e-9);

struct SweepRow {
  double t;
  double err;           // ‖φ_t ∗ f − f‖
  double conv_norm;     // ‖φ_t ∗ f‖
  double maximal_norm;  // ‖Mf‖
  double ratio;         // conv_norm / maximal_norm
  double drift;         // relative change of err between n and 2n cells
};

struct SweepOptions {
  int n = 4096;
  bool measure_drift = true;
  EpsGridOptions grid;
};

/// Norm-convergence curve of the mollified function; every norm is taken of a
/// step approximation on (0,1) sharing one cell partition per t.
std::vector<SweepRow> convergence_sweep(const StepFunction& f, const Kernel& phi, std::span<const double> t_list,
                                        const SpaceSpec& spec, const SweepOptions& opts = {});

}  // namespace rlab
