#pragma once

#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace kzspin {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights (positive half; node 0 is the midpoint).
inline constexpr double kGK15Nodes[8] = {
    0.000000000000000000000000000000000e+00, 2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01, 5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01, 8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01, 9.914553711208126392068546975263285e-01};
inline constexpr double kKronrodWeights[8] = {
    2.094821410847278280129991748917143e-01, 2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01, 1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01, 1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02, 2.293532201052922496373200805896959e-02};
inline constexpr double kGaussWeights[4] = {
    4.179591836734693877551020408163265e-01, 3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01, 1.294849661688696932706114326790820e-01};

template <class F>
void gk15(F&& f, double a, double b, double& value, double& error, double& resabs) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f0 = f(mid);
  double kronrod = kKronrodWeights[0] * f0;
  double gauss = kGaussWeights[0] * f0;
  resabs = kKronrodWeights[0] * std::fabs(f0);
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGK15Nodes[i];
    const double fp = f(mid + dx);
    const double fm = f(mid - dx);
    kronrod += kKronrodWeights[i] * (fp + fm);
    resabs += kKronrodWeights[i] * (std::fabs(fp) + std::fabs(fm));
    if (i % 2 == 0) gauss += kGaussWeights[i / 2] * (fp + fm);
  }
  value = kronrod * half;
  resabs *= std::fabs(half);
  const double diff = std::fabs((kronrod - gauss) * half);
  // QUADPACK-style inflation of the raw Gauss/Kronrod difference
  error = diff;
  if (resabs > 0.0 && diff > 0.0) {
    const double scaled = std::pow(200.0 * diff / resabs, 1.5);
    error = resabs * std::min(1.0, scaled);
  }
}

} // namespace detail

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] to absolute
/// tolerance abs_tol, splitting the interval with the largest error estimate
/// first. `converged` is false when max_intervals is exhausted; the achieved
/// error estimate is reported either way.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    int max_intervals = 5000) {
  struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
  };

  QuadratureResult result;
  double resabs = 0.0;
  Interval whole{a, b, 0.0, 0.0};
  detail::gk15(f, a, b, whole.value, whole.error, resabs);
  result.evaluations = 15;

  std::priority_queue<Interval> queue;
  queue.push(whole);
  double total_value = whole.value;
  double total_error = whole.error;

  int n_intervals = 1;
  while (total_error > abs_tol && n_intervals < max_intervals) {
    Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval at rounding limit
      queue.push(worst);
      break;
    }
    Interval left{worst.a, mid, 0.0, 0.0};
    Interval right{mid, worst.b, 0.0, 0.0};
    detail::gk15(f, left.a, left.b, left.value, left.error, resabs);
    detail::gk15(f, right.a, right.b, right.value, right.error, resabs);
    result.evaluations += 30;

    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++n_intervals;
  }

  // recompute sums from the final partition to avoid drift
  total_value = 0.0;
  total_error = 0.0;
  while (!queue.empty()) {
    total_value += queue.top().value;
    total_error += queue.top().error;
    queue.pop();
  }

  result.value = total_value;
  result.error_estimate = total_error;
  result.converged = total_error <= abs_tol;
  return result;
}

} // namespace kzspin
