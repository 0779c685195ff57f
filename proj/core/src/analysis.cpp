#include "rlab/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "rlab/error.hpp"
#include "rlab/quad.hpp"

namespace rlab {

MaximalFunction::MaximalFunction(const StepFunction& f) : abs_f_(abs(f)) {}

double MaximalFunction::ball_integral(double a, double b) const {
  // Summing the overlaps directly avoids the cancellation of a primitive
  // difference, which would swamp the average of a very small ball.
  a = std::max(a, 0.0);
  b = std::min(b, 1.0);
  if (!(a < b)) return 0.0;
  const auto bps = abs_f_.breakpoints();
  const auto vals = abs_f_.values();
  double sum = 0.0;
  for (auto i = abs_f_.segment_index(a); i < vals.size() && bps[i] < b; ++i)
    sum += vals[i] * (std::min(b, bps[i + 1]) - std::max(a, bps[i]));
  return sum;
}

double MaximalFunction::operator()(double x) const {
  const auto bps = abs_f_.breakpoints();
  // r → 0⁺: mean of the one-sided limits, |f(x)| away from breakpoints.
  const double right = abs_f_(x);
  const double left = x > 0.0 && x <= 1.0 ? abs_f_.values()[abs_f_.segment_index(std::nextafter(x, 0.0))] : 0.0;
  double best = (std::binary_search(bps.begin(), bps.end(), x)) ? 0.5 * (left + right) : right;
  for (double b : bps) {
    const double r = std::abs(x - b);
    if (r <= 0.0) continue;
    best = std::max(best, ball_integral(x - r, x + r) / (2.0 * r));
  }
  return best;
}

std::vector<double> MaximalFunction::sample(std::span<const double> xs) const {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back((*this)(x));
  return out;
}

StepFunction MaximalFunction::cell_averages(std::span<const double> cells) const {
  // Mf jumps where |f| does and has kinks at midpoints between breakpoints.
  std::vector<double> splits(abs_f_.breakpoints().begin(), abs_f_.breakpoints().end());
  const auto bps = abs_f_.breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i)
    for (std::size_t j = i + 1; j < bps.size(); ++j) splits.push_back(0.5 * (bps[i] + bps[j]));
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

  auto mf = [this](double x) { return (*this)(x); };
  std::vector<double> vals;
  vals.reserve(cells.size() - 1);
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    const double a = cells[i];
    const double b = cells[i + 1];
    double sum = 0.0;
    double lo = a;
    auto it = std::upper_bound(splits.begin(), splits.end(), a);
    for (; it != splits.end() && *it < b; ++it) {
      sum += integrate_smooth(mf, lo, *it);
      lo = *it;
    }
    sum += integrate_smooth(mf, lo, b);
    vals.push_back(sum / (b - a));
  }
  return StepFunction({cells.begin(), cells.end()}, std::move(vals));
}

MaximalFunction maximal(const StepFunction& f) { return MaximalFunction(f); }

double convolve_at(const ScaledKernel& phi_t, const StepFunction& f, double x) {
  const auto bps = f.breakpoints();
  const auto vals = f.values();
  double sum = 0.0;
  double upper = phi_t.cdf(x - bps[0]);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double lower = phi_t.cdf(x - bps[i + 1]);
    if (vals[i] != 0.0) sum += vals[i] * (upper - lower);
    upper = lower;
  }
  return sum;
}

PiecewisePoly convolve(const ScaledKernel& phi_t, const StepFunction& f) {
  const double t = phi_t.t();
  const auto kernel_knots = phi_t.base().knots();
  std::vector<double> knots;
  for (double b : f.breakpoints())
    for (double k : kernel_knots) knots.push_back(b + k * t);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  if (phi_t.base().kind() == KernelKind::smooth_bump) {
    const double max_piece = phi_t.half_width() / kBumpPiecesPerHalfWidth;
    std::vector<double> fine{knots.front()};
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      const double w = knots[i + 1] - knots[i];
      const int pieces = std::max(kBumpSubdivisions, static_cast<int>(std::ceil(w / max_piece)));
      for (int k = 1; k < pieces; ++k) fine.push_back(knots[i] + w * k / pieces);
      fine.push_back(knots[i + 1]);
    }
    knots = std::move(fine);
  }

  // Step kernels give piecewise-linear convolutions; fitting those through two
  // points keeps the quadratic term exactly zero.
  const bool linear = phi_t.base().piece_degree() == 0;
  std::vector<PiecewisePoly::Coeffs> coeffs;
  coeffs.reserve(knots.size() - 1);
  double y0 = convolve_at(phi_t, f, knots[0]);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double x0 = knots[i];
    const double x1 = knots[i + 1];
    const double y1 = convolve_at(phi_t, f, x1);
    if (linear) {
      coeffs.push_back({y0, (y1 - y0) / (x1 - x0), 0.0});
    } else {
      const double ym = convolve_at(phi_t, f, 0.5 * (x0 + x1));
      coeffs.push_back(PiecewisePoly::fit_quadratic(x0, x1, y0, ym, y1));
    }
    y0 = y1;
  }
  return PiecewisePoly(std::move(knots), std::move(coeffs));
}

DominationReport domination_check(const Kernel& phi, const StepFunction& f, std::span<const double> x_grid,
                                  std::span<const double> t_grid, double tol) {
  if (x_grid.empty() || t_grid.empty()) throw ValidationError("domination_check needs nonempty grids");
  const auto mf = maximal(f);
  const auto m = mf.sample(x_grid);
  DominationReport report;
  bool first = true;
  for (double t : t_grid) {
    const ScaledKernel phi_t(phi, t);
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
      const double slack = m[i] - std::abs(convolve_at(phi_t, f, x_grid[i]));
      ++report.checked;
      if (first || slack < report.min_slack) {
        report.min_slack = slack;
        report.worst_x = x_grid[i];
        report.worst_t = t;
        first = false;
      }
      if (slack < -tol) ++report.violations;
    }
  }
  report.holds = report.violations == 0;
  return report;
}

std::vector<SweepRow> convergence_sweep(const StepFunction& f, const Kernel& phi, std::span<const double> t_list,
                                        const SpaceSpec& spec, const SweepOptions& opts) {
  spec.validate();
  const auto mf = maximal(f);
  const auto f_poly = PiecewisePoly::from_step(f);
  std::vector<SweepRow> rows;
  rows.reserve(t_list.size());
  for (double t : t_list) {
    const ScaledKernel phi_t(phi, t);
    const auto conv = convolve(phi_t, f);
    const auto diff = conv - f_poly;
    const auto cells = approximation_cells(diff, opts.n);

    SweepRow row{};
    row.t = t;
    row.err = evaluate_norm(step_approximate(diff, cells), spec, opts.grid);
    row.conv_norm = evaluate_norm(step_approximate(conv, cells), spec, opts.grid);
    row.maximal_norm = evaluate_norm(mf.cell_averages(cells), spec, opts.grid);
    row.ratio = row.maximal_norm > 0.0 ? row.conv_norm / row.maximal_norm : 0.0;
    if (opts.measure_drift) {
      const double fine = evaluate_norm(step_approximate(diff, 2 * opts.n), spec, opts.grid);
      row.drift = row.err > 0.0 ? std::abs(fine - row.err) / row.err : std::abs(fine);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rlab
