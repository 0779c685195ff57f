#pragma once

#include <optional>
#include <span>
#include <vector>

namespace rlab {

enum class KernelKind { box, triangle, smooth_bump, custom_step };

/// Finitely supported kernel φ on ℝ with ∫φ = 1.
///
/// Built-in shapes are centred at 0 with support [−h, h]. A custom_step kernel
/// is given by raw breakpoints and values and divided by its raw mass.
class Kernel {
 public:
  static Kernel box(double half_width = 0.5);
  static Kernel triangle(double half_width = 1.0);
  /// exp(1/(x²−1)) on (−1,1) rescaled to (−h,h); mass constant by quadrature.
  static Kernel smooth_bump(double half_width = 1.0);
  static Kernel custom_step(std::vector<double> breakpoints, std::vector<double> values);

  KernelKind kind() const { return kind_; }
  /// Smallest h with support ⊆ [−h, h].
  double half_width() const { return half_width_; }
  /// Factor applied to the raw shape so that ∫φ = 1.
  double normalization() const { return normalization_; }

  /// Custom-step data (normalized values); empty for built-ins.
  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> values() const { return values_; }

  double operator()(double x) const;
  /// Φ(x) = ∫_{−∞}^x φ.
  double cdf(double x) const;

  /// Points where φ or its derivatives jump (the piecewise-polynomial knots).
  std::vector<double> knots() const;
  /// Polynomial degree of φ between knots; −1 for smooth_bump.
  int piece_degree() const;

 private:
  Kernel(KernelKind kind, double half_width, double normalization)
      : kind_(kind), half_width_(half_width), normalization_(normalization) {}

  KernelKind kind_;
  double half_width_;
  double normalization_;
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<double> cumulative_;
};

/// φ_t(x) = φ(x/t)/t.
class ScaledKernel {
 public:
  ScaledKernel(Kernel base, double t);

  const Kernel& base() const { return base_; }
  double t() const { return t_; }
  double half_width() const { return base_.half_width() * t_; }
  double operator()(double x) const { return base_(x / t_) / t_; }
  double cdf(double x) const { return base_.cdf(x / t_); }

 private:
  Kernel base_;
  double t_;
};

/// Radial majorant φ̃(x) = sup_{|y| >= |x|} |φ(y)|.
class RadialMajorant {
 public:
  explicit RadialMajorant(const Kernel& phi);

  double operator()(double x) const;
  double integral() const { return integral_; }
  /// The kernel is already even, nonnegative and radially nonincreasing.
  bool equals_kernel() const { return kernel_.has_value(); }

 private:
  std::optional<Kernel> kernel_;
  std::vector<double> radii_;   // 0 = r_0 < r_1 < ... < r_m
  std::vector<double> levels_;  // value on r_i <= |x| < r_{i+1}
  double integral_ = 0.0;
};

RadialMajorant radial_majorant(const Kernel& phi);

struct PotentialType {
  bool potential_type;
  double majorant_integral;
};

/// Integrability of the radial majorant.
PotentialType is_potential_type(const Kernel& phi);

}  // namespace rlab
