#include "rlab/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "rlab/error.hpp"
#include "rlab/quad.hpp"

namespace rlab {

namespace {

double bump_raw(double u) {
  if (u <= -1.0 || u >= 1.0) return 0.0;
  return std::exp(1.0 / (u * u - 1.0));
}

// Cumulative integrals at evenly spaced nodes, so each query only integrates
// from the nearest node below.
constexpr int kBumpNodes = 512;

const std::vector<double>& bump_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kBumpNodes + 1, 0.0);
    for (int i = 0; i < kBumpNodes; ++i) {
      const double a = -1.0 + 2.0 * i / kBumpNodes;
      const double b = -1.0 + 2.0 * (i + 1) / kBumpNodes;
      t[i + 1] = t[i] + integrate_smooth(bump_raw, a, b, {1e-12, 1e-18});
    }
    return t;
  }();
  return table;
}

double bump_partial(double u) {
  if (u <= -1.0) return 0.0;
  const auto& table = bump_table();
  if (u >= 1.0) return table.back();
  const int i = std::clamp(static_cast<int>((u + 1.0) * 0.5 * kBumpNodes), 0, kBumpNodes - 1);
  const double a = -1.0 + 2.0 * i / kBumpNodes;
  if (!(u > a)) return table[i];
  return table[i] + integrate_smooth(bump_raw, a, u, {1e-12, 1e-18});
}

// ∫_{−1}^{1} exp(1/(u²−1)) du ≈ 0.443994.
double bump_mass() {
  static const double mass = bump_partial(1.0);
  return mass;
}

void require_width(double h) {
  if (!(std::isfinite(h) && h > 0.0)) throw ValidationError("kernel half-width must be a positive finite number");
}

}  // namespace

Kernel Kernel::box(double half_width) {
  require_width(half_width);
  return Kernel(KernelKind::box, half_width, 1.0 / (2.0 * half_width));
}

Kernel Kernel::triangle(double half_width) {
  require_width(half_width);
  return Kernel(KernelKind::triangle, half_width, 1.0 / half_width);
}

Kernel Kernel::smooth_bump(double half_width) {
  require_width(half_width);
  return Kernel(KernelKind::smooth_bump, half_width, 1.0 / (half_width * bump_mass()));
}

Kernel Kernel::custom_step(std::vector<double> breakpoints, std::vector<double> values) {
  if (breakpoints.size() < 2 || breakpoints.size() != values.size() + 1)
    throw ValidationError("custom kernel needs n+1 breakpoints for n values");
  double mass = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) throw ValidationError("custom kernel breakpoints must increase");
    if (!std::isfinite(values[i])) throw ValidationError("custom kernel values must be finite");
    mass += values[i] * (breakpoints[i + 1] - breakpoints[i]);
  }
  if (!std::isfinite(breakpoints.front()) || !std::isfinite(breakpoints.back()))
    throw ValidationError("custom kernel support must be finite");
  if (!(mass > 0.0)) throw ValidationError("custom kernel must have positive mass");
  const double h = std::max(std::abs(breakpoints.front()), std::abs(breakpoints.back()));
  Kernel k(KernelKind::custom_step, h, 1.0 / mass);
  for (double& v : values) v /= mass;
  k.cumulative_.assign(breakpoints.size(), 0.0);
  for (std::size_t i = 0; i < values.size(); ++i)
    k.cumulative_[i + 1] = k.cumulative_[i] + values[i] * (breakpoints[i + 1] - breakpoints[i]);
  k.breakpoints_ = std::move(breakpoints);
  k.values_ = std::move(values);
  return k;
}

double Kernel::operator()(double x) const {
  const double h = half_width_;
  switch (kind_) {
    case KernelKind::box: return std::abs(x) < h ? normalization_ : 0.0;
    case KernelKind::triangle: return std::abs(x) < h ? normalization_ * (1.0 - std::abs(x) / h) : 0.0;
    case KernelKind::smooth_bump: return normalization_ * bump_raw(x / h);
    case KernelKind::custom_step: {
      if (x < breakpoints_.front() || x >= breakpoints_.back()) return 0.0;
      auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
      return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
    }
  }
  return 0.0;
}

double Kernel::cdf(double x) const {
  const double h = half_width_;
  switch (kind_) {
    case KernelKind::box: return std::clamp((x + h) / (2.0 * h), 0.0, 1.0);
    case KernelKind::triangle:
      if (x <= -h) return 0.0;
      if (x >= h) return 1.0;
      if (x <= 0.0) return (x + h) * (x + h) / (2.0 * h * h);
      return 1.0 - (h - x) * (h - x) / (2.0 * h * h);
    case KernelKind::smooth_bump:
      if (x <= -h) return 0.0;
      if (x >= h) return 1.0;
      return bump_partial(x / h) / bump_mass();
    case KernelKind::custom_step: {
      if (x <= breakpoints_.front()) return 0.0;
      if (x >= breakpoints_.back()) return cumulative_.back();
      auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
      const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
      return cumulative_[i] + values_[i] * (x - breakpoints_[i]);
    }
  }
  return 0.0;
}

std::vector<double> Kernel::knots() const {
  switch (kind_) {
    case KernelKind::box:
    case KernelKind::smooth_bump: return {-half_width_, half_width_};
    case KernelKind::triangle: return {-half_width_, 0.0, half_width_};
    case KernelKind::custom_step: return breakpoints_;
  }
  return {};
}

int Kernel::piece_degree() const {
  switch (kind_) {
    case KernelKind::box:
    case KernelKind::custom_step: return 0;
    case KernelKind::triangle: return 1;
    case KernelKind::smooth_bump: return -1;
  }
  return -1;
}

ScaledKernel::ScaledKernel(Kernel base, double t) : base_(std::move(base)), t_(t) {
  if (!(std::isfinite(t) && t > 0.0)) throw ValidationError("kernel scale t must be > 0");
}

RadialMajorant::RadialMajorant(const Kernel& phi) {
  if (phi.kind() != KernelKind::custom_step) {
    kernel_ = phi;
    integral_ = 1.0;
    return;
  }
  const auto bps = phi.breakpoints();
  const auto vals = phi.values();
  radii_.push_back(0.0);
  for (double b : bps) radii_.push_back(std::abs(b));
  std::sort(radii_.begin(), radii_.end());
  radii_.erase(std::unique(radii_.begin(), radii_.end()), radii_.end());
  for (std::size_t i = 0; i + 1 < radii_.size(); ++i) {
    // Segment (c,d) meets {|y| >= |x|} for |x| in [r_i, r_{i+1}) iff it reaches radius r_{i+1}.
    double level = 0.0;
    for (std::size_t k = 0; k < vals.size(); ++k) {
      if (std::max(std::abs(bps[k]), std::abs(bps[k + 1])) >= radii_[i + 1]) level = std::max(level, std::abs(vals[k]));
    }
    levels_.push_back(level);
    integral_ += 2.0 * level * (radii_[i + 1] - radii_[i]);
  }
}

double RadialMajorant::operator()(double x) const {
  if (kernel_) return std::abs((*kernel_)(std::abs(x)));
  const double r = std::abs(x);
  if (r >= radii_.back()) return 0.0;
  auto it = std::upper_bound(radii_.begin(), radii_.end(), r);
  return levels_[static_cast<std::size_t>(it - radii_.begin()) - 1];
}

RadialMajorant radial_majorant(const Kernel& phi) { return RadialMajorant(phi); }

PotentialType is_potential_type(const Kernel& phi) {
  const double integral = radial_majorant(phi).integral();
  return {std::isfinite(integral), integral};
}

}  // namespace rlab
