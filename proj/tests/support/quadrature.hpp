// Reference quadrature used by tests as an oracle independent of the library:
// trapezoid rule over one full period, doubled until two refinements agree.
// For smooth 2*pi-periodic integrands the periodic trapezoid sum converges
// geometrically, so the doubling loop terminates quickly.
#pragma once

#include <cmath>
#include <cstddef>

namespace testsupport {

inline constexpr double kPi = 3.14159265358979323846;

// Integral of f over [-pi, pi).  `tol` bounds the change between the last two
// refinements, which for geometric convergence also bounds the true error.
template <class F>
double integrate_circle(F f, double tol = 1e-12) {
  std::size_t m = 16;
  auto riemann = [&](std::size_t points) {
    const double h = 2.0 * kPi / static_cast<double>(points);
    double sum = 0.0;
    for (std::size_t k = 0; k < points; ++k) sum += f(-kPi + h * static_cast<double>(k));
    return sum * h;
  };
  double prev = riemann(m);
  for (int round = 0; round < 22; ++round) {
    m *= 2;
    const double next = riemann(m);
    if (std::abs(next - prev) <= tol * std::max(1.0, std::abs(next))) return next;
    prev = next;
  }
  return prev;
}

}  // namespace testsupport
