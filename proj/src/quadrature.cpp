#include "bellpf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace bellpf {

namespace {

// Kronrod 15-point nodes on [-1,1] (nonnegative half) and weights, with the
// embedded 7-point Gauss weights. Values from the QUADPACK dqk15 tables.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;

  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kWgk[i] * fsum;
    if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;

  // The Gauss/Kronrod difference overestimates the Kronrod error, which is
  // what an adaptive splitter wants.
  const double diff = std::abs(kronrod - gauss);
  return {a, b, kronrod, std::max(diff, 1e-300)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_intervals) {
  if (!(abs_tol > 0)) throw std::invalid_argument("integrate_adaptive: abs_tol must be positive");
  if (a == b) return {0.0, 0.0, 0};

  std::priority_queue<Panel> queue;
  queue.push(evaluate_panel(f, a, b));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  int panels = 1;

  while (total_error > abs_tol && panels < max_intervals) {
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at floating-point resolution; keep its contribution as is.
      total_error = std::max(total_error - worst.error, 0.0);
      continue;
    }
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  if (total_error > abs_tol) {
    throw QuadratureFailure("integrate_adaptive: tolerance not reached after max intervals");
  }
  if (!std::isfinite(total_value)) {
    throw QuadratureFailure("integrate_adaptive: non-finite integrand");
  }
  return {total_value, total_error, panels};
}

double i0_scaled(double x) {
  if (x < 0) throw std::invalid_argument("i0_scaled: x must be >= 0");
  if (x <= 60.0) {
    // e^{-x} sum_k (x^2/4)^k / (k!)^2, safe from overflow up to the crossover.
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 400; ++k) {
      term *= q / (static_cast<double>(k) * k);
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return std::exp(-x) * sum;
  }
  // Asymptotic: I0(x) ~ e^x/sqrt(2 pi x) sum_k a_k, a_0 = 1,
  // a_k = a_{k-1} (2k-1)^2 / (8 k x). Truncate at the smallest term.
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    const double next = term * ((2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
    if (next >= term) break;  // divergent part reached
    term = next;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum / std::sqrt(2.0 * M_PI * x);
}

}  // namespace bellpf
