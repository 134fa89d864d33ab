#pragma once

#include <cmath>
#include <utility>

namespace spinorth {

/// Golden-section search for a minimum of f on [a, b].
/// Returns (argmin, f(argmin)); the bracket is shrunk until its width
/// drops below tol.
template <typename F>
std::pair<double, double> golden_minimize(F&& f, double a, double b, double tol) {
  constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5)-1)/2
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double mid = 0.5 * (a + b);
  return {mid, f(mid)};
}

}  // namespace spinorth
