#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace ldp::detail {

// Real roots of a*x^3 + b*x^2 + c*x + d = 0 with degree collapse when
// leading coefficients vanish exactly. Closed-form solve (Cardano /
// trigonometric) followed by a few Newton steps against the original
// coefficients to squeeze out the algebraic rounding.
struct CubicRoots {
  double root[3] = {0.0, 0.0, 0.0};
  std::size_t count = 0;
};

inline double polish_root(double a, double b, double c, double d, double x) {
  for (int iter = 0; iter < 3; ++iter) {
    const double f = ((a * x + b) * x + c) * x + d;
    const double df = (3.0 * a * x + 2.0 * b) * x + c;
    if (df == 0.0) break;
    const double step = f / df;
    if (!std::isfinite(step)) break;
    x -= step;
  }
  return x;
}

inline CubicRoots solve_cubic(double a, double b, double c, double d) {
  CubicRoots out;
  if (a == 0.0) {
    if (b == 0.0) {
      if (c != 0.0) out.root[out.count++] = -d / c;
      return out;
    }
    const double disc = c * c - 4.0 * b * d;
    if (disc < 0.0) return out;
    // Stable quadratic: compute the large-magnitude root first.
    const double s = std::sqrt(disc);
    const double q = -(c + std::copysign(s, c)) / 2.0;
    if (q != 0.0) {
      out.root[out.count++] = q / b;
      out.root[out.count++] = d / q;
    } else {
      out.root[out.count++] = 0.0;
      if (s != 0.0) out.root[out.count++] = -c / b;
    }
    return out;
  }

  // Depressed form t^3 + p t + q with x = t - B/3.
  const double B = b / a;
  const double C = c / a;
  const double D = d / a;
  const double p = C - B * B / 3.0;
  const double q = 2.0 * B * B * B / 27.0 - B * C / 3.0 + D;
  const double shift = -B / 3.0;
  const double disc = q * q / 4.0 + p * p * p / 27.0;

  if (disc > 0.0) {
    // One real root; pick the cube root of the larger-magnitude branch to
    // avoid cancellation, recover the other factor from u*v = -p/3.
    const double s = std::sqrt(disc);
    const double w = (q <= 0.0) ? (-q / 2.0 + s) : (-q / 2.0 - s);
    const double u = std::cbrt(w);
    const double v = (u != 0.0) ? -p / (3.0 * u) : 0.0;
    out.root[out.count++] = polish_root(a, b, c, d, u + v + shift);
    return out;
  }

  if (p >= 0.0) {
    // disc <= 0 with p >= 0 forces p = q = 0: a triple root.
    out.root[out.count++] = polish_root(a, b, c, d, shift);
    return out;
  }

  // Three real roots (trigonometric form).
  const double m = 2.0 * std::sqrt(-p / 3.0);
  const double cos_arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
  const double angle = std::acos(cos_arg) / 3.0;
  constexpr double two_thirds_pi = 2.0943951023931953;
  for (int k = 0; k < 3; ++k) {
    const double t = m * std::cos(angle - two_thirds_pi * k);
    out.root[out.count++] = polish_root(a, b, c, d, t + shift);
  }
  return out;
}

}  // namespace ldp::detail
