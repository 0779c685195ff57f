#include "rlab/corpus.hpp"

#include <algorithm>
#include <cmath>

namespace rlab {

double Corpus::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int Corpus::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

double Corpus::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

std::vector<double> Corpus::breakpoints(int max_segments) {
  const int segments = uniform_int(1, max_segments);
  std::vector<double> bps{0.0, 1.0};
  while (static_cast<int>(bps.size()) < segments + 1) {
    const double x = uniform();
    if (x <= 0.0) continue;
    if (std::find(bps.begin(), bps.end(), x) == bps.end()) bps.push_back(x);
  }
  std::sort(bps.begin(), bps.end());
  return bps;
}

StepFunction Corpus::positive_function() {
  auto bps = breakpoints(20);
  std::vector<double> vals(bps.size() - 1);
  for (double& v : vals) v = log_uniform(1e-3, 1e3);
  return StepFunction(std::move(bps), std::move(vals));
}

StepFunction Corpus::signed_function(int max_segments) {
  auto bps = breakpoints(max_segments);
  std::vector<double> vals(bps.size() - 1);
  for (double& v : vals) v = uniform_int(0, 7) == 0 ? 0.0 : uniform(-5.0, 5.0);
  return StepFunction(std::move(bps), std::move(vals));
}

MeasureDensity Corpus::positive_density(int max_segments) {
  auto bps = breakpoints(max_segments);
  std::vector<double> vals(bps.size() - 1);
  for (double& v : vals) v = uniform(0.1, 3.0);
  return MeasureDensity(StepFunction(std::move(bps), std::move(vals)));
}

MeasureDensity Corpus::density_with_gaps(int max_segments) {
  auto bps = breakpoints(max_segments);
  std::vector<double> vals(bps.size() - 1);
  for (double& v : vals) v = uniform_int(0, 3) == 0 ? 0.0 : uniform(0.1, 3.0);
  if (std::all_of(vals.begin(), vals.end(), [](double v) { return v == 0.0; })) vals.front() = 1.0;
  return MeasureDensity(StepFunction(std::move(bps), std::move(vals)));
}

}  // namespace rlab
