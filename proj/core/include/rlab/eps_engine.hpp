#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace rlab {

/// Grid and refinement settings for sup over ε in an open interval (0, upper).
struct EpsGridOptions {
  std::size_t grid_size = 2048;
  double delta = 1e-6;
  double location_tol = 1e-10;
};

/// Grid size from RLAB_GRID if set and valid, else 2048.
std::size_t default_grid_size();

struct EpsSample {
  double eps;
  double value;
};

struct EpsSupResult {
  double value = 0.0;
  /// Maximizer; unset when no ε is involved (q = ∞ forms) or for the zero function.
  std::optional<double> eps_star;
  /// The sup is the continuous limit at an endpoint of the open interval.
  bool endpoint_limit = false;
  std::vector<EpsSample> profile;
};

/// grid_size points in (delta, upper - delta), geometrically clustered toward
/// both endpoints: half the points geometric from delta up to upper/2, the
/// other half mirrored from the top.
std::vector<double> eps_grid(double upper, std::size_t grid_size, double delta);

/// Sup over 0 < ε < upper of a slice function continuous on [0, upper].
///
/// Evaluates the slice on eps_grid, golden-section refines around the grid
/// argmax (lowest ε on ties), and compares against the endpoint limits
/// slice(0) and slice(upper). The reported value is never below any profile
/// entry.
EpsSupResult eps_sup(const std::function<double(double)>& slice, double upper,
                     const EpsGridOptions& opts = {});

/// Maximizes a function on [lo, hi] by golden-section search; returns
/// (argmax, max). Exact for unimodal functions.
std::pair<double, double> golden_section_max(const std::function<double(double)>& fn, double lo, double hi,
                                             double rel_tol);

}  // namespace rlab
