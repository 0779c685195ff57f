#include "rlab/weight.hpp"

#include <cmath>

#include "rlab/error.hpp"

namespace rlab {

Weight Weight::step(MeasureDensity density) { return Weight(std::move(density)); }

Weight Weight::power(double alpha, double coeff) {
  if (!std::isfinite(alpha) || !(alpha > -1.0))
    throw ValidationError("power weight exponent must satisfy alpha > -1 (integrable at 0)");
  if (!std::isfinite(coeff) || !(coeff > 0.0)) throw ValidationError("power weight coefficient must be > 0");
  return Weight(PowerWeight{alpha, coeff});
}

double Weight::operator()(double t) const {
  if (const auto* pw = as_power()) return pw->coeff * std::pow(t, pw->alpha);
  return as_step()->density()(t);
}

double Weight::primitive(double t) const {
  if (t <= 0.0) return 0.0;
  if (const auto* pw = as_power()) return pw->coeff * std::pow(t, pw->alpha + 1.0) / (pw->alpha + 1.0);
  return as_step()->measure(0.0, t);
}

double Weight::integral(double a, double b) const {
  if (b <= a) return 0.0;
  if (const auto* pw = as_power()) {
    const double e = pw->alpha + 1.0;
    return pw->coeff * (std::pow(b, e) - (a > 0.0 ? std::pow(a, e) : 0.0)) / e;
  }
  return as_step()->measure(a, b);
}

std::vector<double> Weight::knots() const {
  if (is_power()) return {0.0, 1.0};
  const auto b = as_step()->density().breakpoints();
  return {b.begin(), b.end()};
}

}  // namespace rlab
