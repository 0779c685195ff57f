#pragma once

#include <functional>

namespace rlab {

struct QuadTolerance {
  double rel = 1e-10;
  double abs = 1e-14;
};

/// Adaptive Gauss–Kronrod (7/15 embedded in 15/31) on a finite interval with
/// smooth integrand. Throws ComputationError, carrying the achieved error,
/// when the tolerance is not met.
double integrate_smooth(const std::function<double(double)>& fn, double a, double b, QuadTolerance tol = {});

/// Double-exponential (tanh–sinh) quadrature for integrands with integrable
/// endpoint singularities. Same error contract as integrate_smooth.
double integrate_endpoint_singular(const std::function<double(double)>& fn, double a, double b,
                                   QuadTolerance tol = {});

}  // namespace rlab
