#pragma once

#include <span>
#include <variant>
#include <vector>

#include "rlab/stepfn.hpp"

namespace rlab {

/// Analytic power weight coeff * t^alpha, alpha > -1.
struct PowerWeight {
  double alpha = 0.0;
  double coeff = 1.0;

  friend bool operator==(const PowerWeight&, const PowerWeight&) = default;
};

/// Weight ω on (0,1): either a nonnegative step density or an analytic
/// power weight. Power weights stay analytic so that integrals against a step
/// f* use the exact power rule even when t^alpha is singular at 0.
class Weight {
 public:
  static Weight step(MeasureDensity density);
  static Weight power(double alpha, double coeff = 1.0);
  static Weight unit() { return power(0.0, 1.0); }

  bool is_power() const { return std::holds_alternative<PowerWeight>(repr_); }
  const PowerWeight* as_power() const { return std::get_if<PowerWeight>(&repr_); }
  const MeasureDensity* as_step() const { return std::get_if<MeasureDensity>(&repr_); }

  double operator()(double t) const;

  /// W(t) = ∫_0^t ω(s) ds. Step weights are constant beyond t = 1.
  double primitive(double t) const;

  /// ∫_a^b ω for 0 <= a <= b.
  double integral(double a, double b) const;

  /// Points where ω is not smooth inside [0,1], including both endpoints.
  std::vector<double> knots() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  explicit Weight(std::variant<MeasureDensity, PowerWeight> repr) : repr_(std::move(repr)) {}
  std::variant<MeasureDensity, PowerWeight> repr_;
};

}  // namespace rlab
