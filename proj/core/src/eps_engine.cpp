#include "rlab/eps_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "rlab/error.hpp"

namespace rlab {

std::size_t default_grid_size() {
  if (const char* env = std::getenv("RLAB_GRID")) {
    try {
      const long n = std::stol(env);
      if (n >= 4) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
  }
  return 2048;
}

std::vector<double> eps_grid(double upper, std::size_t grid_size, double delta) {
  if (!(upper > 2.0 * delta)) throw ValidationError("ε interval too short for the grid offset");
  if (grid_size < 4) throw ValidationError("ε grid needs at least 4 points");
  const std::size_t lower_half = (grid_size + 1) / 2;
  const std::size_t upper_half = grid_size - lower_half;
  const double mid = upper / 2.0;
  std::vector<double> grid;
  grid.reserve(grid_size);
  // Geometric from delta to mid (inclusive), then mirrored toward upper.
  const double ratio = std::log(mid / delta);
  for (std::size_t k = 0; k < lower_half; ++k) {
    const double s = static_cast<double>(k) / static_cast<double>(lower_half - 1);
    grid.push_back(delta * std::exp(ratio * s));
  }
  for (std::size_t k = upper_half; k-- > 0;) {
    const double s = static_cast<double>(k) / static_cast<double>(upper_half);
    grid.push_back(upper - delta * std::exp(ratio * s));
  }
  return grid;
}

std::pair<double, double> golden_section_max(const std::function<double(double)>& fn, double lo, double hi,
                                             double rel_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c);
  double fd = fn(d);
  for (int it = 0; it < 200 && (b - a) > rel_tol * std::max(std::abs(a) + std::abs(b), 1e-300); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

EpsSupResult eps_sup(const std::function<double(double)>& slice, double upper, const EpsGridOptions& opts) {
  EpsSupResult out;
  const auto grid = eps_grid(upper, opts.grid_size, opts.delta);
  out.profile.reserve(grid.size());
  std::size_t best = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double v = slice(grid[k]);
    if (!std::isfinite(v)) throw ComputationError("non-finite ε-slice value at ε = " + std::to_string(grid[k]));
    out.profile.push_back({grid[k], v});
    if (v > out.profile[best].value) best = k;
  }
  out.value = out.profile[best].value;
  out.eps_star = grid[best];

  const double lo = best == 0 ? 0.0 : grid[best - 1];
  const double hi = best + 1 == grid.size() ? upper : grid[best + 1];
  const auto [arg, val] = golden_section_max(slice, lo, hi, opts.location_tol);
  if (val > out.value) {
    out.value = val;
    out.eps_star = arg;
  }

  // Ties go to the lower ε, so a constant slice reports the ε → 0 limit.
  const double at_bottom = slice(0.0);
  const double at_top = slice(upper);
  if (std::isfinite(at_bottom) && at_bottom >= out.value) {
    out.value = at_bottom;
    out.eps_star = 0.0;
    out.endpoint_limit = true;
  }
  if (std::isfinite(at_top) && at_top > out.value) {
    out.value = at_top;
    out.eps_star = upper;
    out.endpoint_limit = true;
  }
  return out;
}

}  // namespace rlab
