#pragma once
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace curvkit {

// Deterministic pairwise summation: result independent of how callers chunked
// the work, so parallel runs reduce identically at any worker count.
inline double pairwise_sum(const std::vector<double>& v, size_t lo, size_t hi) {
  size_t n = hi - lo;
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  size_t mid = lo + n / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}
inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v, 0, v.size()); }

// Adaptive Simpson on [a,b].
namespace detail {
inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-10, int max_depth = 28) {
  if (!(b > a)) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Integral over (0, b] of a function that may be singular (but integrable) at 0:
// geometric splitting toward the origin, adaptive Simpson on each piece.
inline double integrate_graded(const std::function<double(double)>& f, double b,
                               double tol = 1e-10, int levels = 48) {
  double total = 0.0;
  double hi = b;
  for (int k = 0; k < levels; ++k) {
    double lo = hi * 0.5;
    total += adaptive_simpson(f, lo, hi, tol / levels);
    hi = lo;
  }
  return total;
}

// Richardson extrapolation for y(x) ~ L + C x^p sampled at the last three points
// of a sweep with x -> 0.  Returns {limit, estimated order p}.
struct Extrapolation {
  double limit = 0.0;
  double order = 1.0;
  bool order_estimated = false;
};

inline Extrapolation richardson(const std::vector<double>& x, const std::vector<double>& y) {
  Extrapolation out;
  size_t n = x.size();
  if (n == 0) return out;
  out.limit = y.back();
  if (n < 3) return out;
  double x1 = x[n - 3], x2 = x[n - 2], x3 = x[n - 1];
  double y1 = y[n - 3], y2 = y[n - 2], y3 = y[n - 1];
  double d1 = y2 - y1, d2 = y3 - y2;
  // Estimate the order from successive differences when the ratio is usable.
  double p = 1.0;
  if (d1 != 0.0 && d2 != 0.0 && d2 / d1 > 0.0) {
    // For geometric-ish ladders x2/x1 ~ x3/x2 ~ q:  d2/d1 ~ q^p.
    double q = 0.5 * (x2 / x1 + x3 / x2);
    double r = d2 / d1;
    if (q > 0.0 && q != 1.0 && r > 0.0) {
      p = std::log(r) / std::log(q);
      if (!(p > 0.05 && p < 8.0)) p = 1.0; else out.order_estimated = true;
    }
  }
  out.order = p;
  double ratio = std::pow(x2 / x3, p);
  if (ratio > 1.0 + 1e-12)
    out.limit = y3 + (y3 - y2) / (ratio - 1.0);
  return out;
}

}  // namespace curvkit
