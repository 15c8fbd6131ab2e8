#ifndef TRUMPING_GOLDEN_HPP
#define TRUMPING_GOLDEN_HPP

#include <cmath>
#include <utility>

namespace trumping {

struct GoldenResult {
  double x;
  double f;
};

/// Derivative-free golden-section minimization of f on [a, b].
/// Stops when the bracket width drops below tol or after max_iter shrinks.
template <typename F>
GoldenResult golden_min(F&& f, double a, double b, double tol, int max_iter = 200) {
  constexpr double invphi = 0.6180339887498949;   // 1/phi
  constexpr double invphi2 = 0.3819660112501051;  // 1/phi^2
  double x1 = a + invphi2 * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = a + invphi2 * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? GoldenResult{x1, f1} : GoldenResult{x2, f2};
}

}  // namespace trumping

#endif
