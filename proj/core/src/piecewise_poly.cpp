#include "rlab/piecewise_poly.hpp"

#include <algorithm>
#include <cmath>

#include "rlab/error.hpp"

namespace rlab {

PiecewisePoly::PiecewisePoly(std::vector<double> knots, std::vector<Coeffs> coeffs)
    : knots_(std::move(knots)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || knots_.size() != coeffs_.size() + 1)
    throw ValidationError("piecewise polynomial needs n+1 knots for n segments");
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
    if (!(knots_[i] < knots_[i + 1])) throw ValidationError("piecewise polynomial knots must increase");
}

PiecewisePoly PiecewisePoly::from_step(const StepFunction& f) {
  std::vector<Coeffs> c;
  for (double v : f.values()) c.push_back({v, 0.0, 0.0});
  return PiecewisePoly({f.breakpoints().begin(), f.breakpoints().end()}, std::move(c));
}

PiecewisePoly::Coeffs PiecewisePoly::fit_quadratic(double x0, double x1, double y0, double ym, double y1) {
  const double h = x1 - x0;
  const double c2 = 2.0 * (y0 - 2.0 * ym + y1) / (h * h);
  const double c1 = (4.0 * ym - 3.0 * y0 - y1) / h;
  return {y0, c1, c2};
}

int PiecewisePoly::degree() const {
  int d = 0;
  for (const auto& c : coeffs_) {
    if (c[2] != 0.0) return 2;
    if (c[1] != 0.0) d = 1;
  }
  return d;
}

double PiecewisePoly::operator()(double x) const {
  if (x < knots_.front() || x >= knots_.back()) return 0.0;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  const auto i = static_cast<std::size_t>(it - knots_.begin()) - 1;
  const double u = x - knots_[i];
  const auto& c = coeffs_[i];
  return c[0] + u * (c[1] + u * c[2]);
}

double PiecewisePoly::segment_integral(std::size_t i, double a, double b) const {
  const auto& c = coeffs_[i];
  auto prim = [&](double x) {
    const double u = x - knots_[i];
    return u * (c[0] + u * (c[1] / 2.0 + u * c[2] / 3.0));
  };
  return prim(b) - prim(a);
}

double PiecewisePoly::integral(double a, double b) const {
  a = std::max(a, knots_.front());
  b = std::min(b, knots_.back());
  if (b <= a) return 0.0;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), a);
  double sum = 0.0;
  for (auto i = static_cast<std::size_t>(it - knots_.begin()) - 1; i < coeffs_.size() && knots_[i] < b; ++i)
    sum += segment_integral(i, std::max(a, knots_[i]), std::min(b, knots_[i + 1]));
  return sum;
}

PiecewisePoly operator-(const PiecewisePoly& g, const PiecewisePoly& h) {
  std::vector<double> knots;
  std::set_union(g.knots_.begin(), g.knots_.end(), h.knots_.begin(), h.knots_.end(), std::back_inserter(knots));
  // Evaluates the polynomial of p's segment containing `mid` at x, so both
  // ends of a merged cell use one-sided limits from inside the cell.
  auto local = [](const PiecewisePoly& p, double mid, double x) {
    if (mid < p.knots_.front() || mid >= p.knots_.back()) return 0.0;
    auto it = std::upper_bound(p.knots_.begin(), p.knots_.end(), mid);
    const auto j = static_cast<std::size_t>(it - p.knots_.begin()) - 1;
    const double u = x - p.knots_[j];
    const auto& c = p.coeffs_[j];
    return c[0] + u * (c[1] + u * c[2]);
  };
  std::vector<PiecewisePoly::Coeffs> coeffs;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double x0 = knots[i];
    const double x1 = knots[i + 1];
    const double xm = 0.5 * (x0 + x1);
    auto d = [&](double x) { return local(g, xm, x) - local(h, xm, x); };
    coeffs.push_back(PiecewisePoly::fit_quadratic(x0, x1, d(x0), d(xm), d(x1)));
  }
  return PiecewisePoly(std::move(knots), std::move(coeffs));
}

std::vector<double> approximation_cells(const PiecewisePoly& g, int n) {
  if (n < 2) throw ValidationError("step_approximate requires n >= 2");
  std::vector<double> cells(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) cells[static_cast<std::size_t>(i)] = static_cast<double>(i) / n;
  for (double k : g.knots())
    if (k > 0.0 && k < 1.0) cells.push_back(k);
  // Non-constant pieces narrower than the uniform cells would otherwise be
  // resolved by only a few cells, and the averaging error would grow as the
  // pieces shrink.
  const int per_piece = std::max(1, n / kPieceCellDivisor);
  const auto knots = g.knots();
  for (std::size_t i = 0; i < g.segments(); ++i) {
    const auto& c = g.coeffs()[i];
    if (c[1] == 0.0 && c[2] == 0.0) continue;
    const double lo = std::max(knots[i], 0.0);
    const double hi = std::min(knots[i + 1], 1.0);
    if (!(lo < hi)) continue;
    for (int k = 1; k < per_piece; ++k) cells.push_back(lo + (hi - lo) * k / per_piece);
  }
  std::sort(cells.begin(), cells.end());
  // Knots that land within rounding distance of a grid point would leave
  // slivers whose averages are pure cancellation noise.
  cells.erase(std::unique(cells.begin(), cells.end(), [](double a, double b) { return b - a < 1e-13; }),
              cells.end());
  cells.back() = 1.0;
  return cells;
}

StepFunction step_approximate(const PiecewisePoly& g, int n) { return step_approximate(g, approximation_cells(g, n)); }

StepFunction step_approximate(const PiecewisePoly& g, std::span<const double> cells) {
  std::vector<double> vals;
  vals.reserve(cells.size() - 1);
  for (std::size_t i = 0; i + 1 < cells.size(); ++i)
    vals.push_back(g.integral(cells[i], cells[i + 1]) / (cells[i + 1] - cells[i]));
  return StepFunction({cells.begin(), cells.end()}, std::move(vals));
}

}  // namespace rlab
