#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "ladderlab/errors.hpp"

namespace ladderlab {

/// Neumaier's compensated summation. Fold order is the caller's; results are
/// reproducible for a fixed order.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  // f(root)
  double lo = 0.0;        // final bracket
  double hi = 0.0;
  int iterations = 0;
};

/// Brent's method on a bracket [lo, hi] with f(lo), f(hi) of opposite sign.
/// Stops once |f| <= residual_tol or the bracket has collapsed to a few ulps.
template <class F>
RootResult solve_bracketed(F&& f, double lo, double hi, double f_lo, double f_hi,
                           double residual_tol, int max_iter = 200) {
  if (!(f_lo * f_hi <= 0.0)) {
    throw BracketError("root not bracketed on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "]");
  }
  if (std::abs(f_lo) <= residual_tol) return {lo, f_lo, lo, hi, 0};
  if (std::abs(f_hi) <= residual_tol) return {hi, f_hi, lo, hi, 0};

  double a = lo, b = hi, fa = f_lo, fb = f_hi;
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 1; it <= max_iter; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double eps = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(b);
    const double half = 0.5 * (c - b);
    if (std::abs(fb) <= residual_tol || std::abs(half) <= eps) {
      return {b, fb, std::min(b, c), std::max(b, c), it};
    }
    if (std::abs(e) >= eps && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * half * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * half * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * half * q - std::abs(eps * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = half;
        e = d;
      }
    } else {
      d = half;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > eps) ? d : (half > 0.0 ? eps : -eps);
    fb = f(b);
  }
  return {b, fb, std::min(b, c), std::max(b, c), max_iter};
}

}  // namespace ladderlab
