#pragma once

#include <functional>
#include <stdexcept>

namespace bellpf {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

struct QuadratureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive bisection with a Gauss 7 / Kronrod 15 pair on each interval.
// Splits the worst interval until the summed error estimate is below abs_tol.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_intervals = 4000);

// e^{-x} I0(x) for x >= 0: power series below the crossover, asymptotic
// expansion above. Stays bounded (<= 1) for all x.
double i0_scaled(double x);

}  // namespace bellpf
