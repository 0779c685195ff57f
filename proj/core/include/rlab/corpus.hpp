#pragma once

#include <cstdint>
#include <random>

#include "rlab/stepfn.hpp"

namespace rlab {

/// Version tag of the random step-function generator. Bump whenever the
/// sampling procedure changes; reports embed it next to the seed.
inline constexpr const char* kCorpusVersion = "corpus-v1";

/// Seeded generator of random step functions and densities.
///
/// Uniform draws are built directly from the 64-bit engine output rather than
/// std::uniform_real_distribution, so streams are identical across standard
/// library implementations.
class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0,1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  double log_uniform(double lo, double hi);

  /// Sorted distinct interior breakpoints; segment count uniform in [1, max_segments].
  std::vector<double> breakpoints(int max_segments);

  /// Documented corpus generator: 1–20 segments, breakpoints uniform in (0,1),
  /// values log-uniform in [1e−3, 1e3].
  StepFunction positive_function();

  /// 1–20 segments, values uniform in [−5, 5] with roughly one segment in
  /// eight forced to zero.
  StepFunction signed_function(int max_segments = 20);

  /// Step density with 1–8 segments and values uniform in [0.1, 3], so the
  /// measure is equivalent to Lebesgue measure.
  MeasureDensity positive_density(int max_segments = 8);

  /// Like positive_density but with occasional zero segments.
  MeasureDensity density_with_gaps(int max_segments = 8);

 private:
  std::mt19937_64 engine_;
};

}  // namespace rlab
