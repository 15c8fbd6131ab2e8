#ifndef TRUMPING_FAMILIES_HPP
#define TRUMPING_FAMILIES_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

#include "trumping/dvector.hpp"

namespace trumping {

/// Exact integer pair from cross-multiplying the n-th inequality of
/// Bennett's midpoint system; trumped but not majorized for n >= 2.
struct BennettPair {
  std::size_t n;
  DVector x;  // {(2k-1)(n+1) : k=1..n}, each n+1 times, ascending
  DVector y;  // {(2k-1)n : k=1..n+1}, each n times, ascending
};

struct FlipPattern {
  std::size_t held_prefixes = 0;  // initial ascending inequalities that hold
  std::optional<std::size_t> flip_index;  // 1-based first reversed prefix
};

/// Interval quadrature case for the convex-function inequality lemma.
struct QuadratureCase {
  double a, b, c, d;
  double p, q, r;
  std::function<double(double)> g;
};

BennettPair bennett_pair(std::size_t n);

/// Ascending prefix-sum comparison of a pair, in exact arithmetic.
FlipPattern flip_pattern(const BennettPair& pair);
FlipPattern flip_pattern(const DVector& x, const DVector& y);

/// Integer pair from the non-example system; majorized (hence trivially
/// trumped) for every n.
std::pair<DVector, DVector> bennett05_pair(std::size_t n);

/// Midpoint Riemann sum of x^p on [a, b], normalized by the interval
/// length: (1/n) * sum f(midpoints). On [0, 2] this is
/// (1/n) sum ((2k-1)/n)^p.
double midpoint_sum(double p, std::size_t n, double a, double b);

/// Strict monotonicity of M_n(x^p): increasing for p > 1 or p < 0,
/// decreasing for 0 < p < 1, checked for n = 1..n_max at tolerance 1e-13.
bool midpoint_monotone_check(double p, std::size_t n_max, double a, double b);

/// Verify q * int_b^c g < p * int_a^b g + r * int_c^d g by adaptive
/// composite Simpson quadrature. Throws when the case invariants fail.
bool lemma_interval_inequality(const QuadratureCase& c);

}  // namespace trumping

#endif
