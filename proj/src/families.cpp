#include "trumping/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trumping {

BennettPair bennett_pair(std::size_t n) {
  if (n < 1) throw std::invalid_argument("bennett_pair: n >= 1 required");
  std::vector<Rational> x, y;
  x.reserve(n * (n + 1));
  y.reserve(n * (n + 1));
  for (std::size_t k = 1; k <= n; ++k) {
    const long long v = static_cast<long long>(2 * k - 1) * (n + 1);
    for (std::size_t i = 0; i < n + 1; ++i) x.emplace_back(v);
  }
  for (std::size_t k = 1; k <= n + 1; ++k) {
    const long long v = static_cast<long long>(2 * k - 1) * n;
    for (std::size_t i = 0; i < n; ++i) y.emplace_back(v);
  }
  return {n, DVector(std::move(x)), DVector(std::move(y))};
}

namespace {

std::vector<Rational> exact_ascending(const DVector& v) {
  if (v.exact()) return v.exact_asc();
  std::vector<Rational> out;
  out.reserve(v.dim());
  for (double c : v.asc()) out.emplace_back(c);  // doubles are exact rationals
  return out;
}

}  // namespace

FlipPattern flip_pattern(const DVector& x, const DVector& y) {
  const auto xa = exact_ascending(x);
  const auto ya = exact_ascending(y);
  if (xa.size() != ya.size())
    throw std::invalid_argument("flip_pattern: dimension mismatch");
  FlipPattern fp;
  Rational px = 0, py = 0;
  for (std::size_t k = 0; k < xa.size(); ++k) {
    px += xa[k];
    py += ya[k];
    if (px >= py) {
      if (!fp.flip_index) fp.held_prefixes = k + 1;
    } else if (!fp.flip_index) {
      fp.flip_index = k + 1;
    }
  }
  return fp;
}

FlipPattern flip_pattern(const BennettPair& pair) {
  return flip_pattern(pair.x, pair.y);
}

std::pair<DVector, DVector> bennett05_pair(std::size_t n) {
  if (n < 1) throw std::invalid_argument("bennett05_pair: n >= 1 required");
  std::vector<Rational> x, y;
  x.reserve(n * (n + 1));
  y.reserve(n * (n + 1));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = n + 2; j <= 2 * n + 2; ++j)
      x.emplace_back(static_cast<long long>(2 * i - 1) * (2 * j - 1));
  for (std::size_t i = n + 1; i <= 2 * n; ++i)
    for (std::size_t j = 1; j <= n + 1; ++j)
      y.emplace_back(static_cast<long long>(2 * i - 1) * (2 * j - 1));
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return {DVector(std::move(x)), DVector(std::move(y))};
}

double midpoint_sum(double p, std::size_t n, double a, double b) {
  if (n < 1) throw std::invalid_argument("midpoint_sum: n >= 1 required");
  if (!(a < b) || a < 0)
    throw std::invalid_argument("midpoint_sum: require 0 <= a < b");
  double s = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double m = a + (2.0 * k - 1) * (b - a) / (2.0 * n);
    if (p < 0 && m <= 0)
      throw std::domain_error("midpoint_sum: non-positive midpoint with p < 0");
    s += std::pow(m, p);
  }
  return s / static_cast<double>(n);
}

bool midpoint_monotone_check(double p, std::size_t n_max, double a, double b) {
  if (p == 0 || p == 1)
    throw std::invalid_argument("midpoint_monotone_check: p must not be 0 or 1");
  if (n_max < 2)
    throw std::invalid_argument("midpoint_monotone_check: n_max >= 2 required");
  const bool increasing = p > 1 || p < 0;  // x^p strictly convex there
  double prev = midpoint_sum(p, 1, a, b);
  for (std::size_t n = 2; n <= n_max; ++n) {
    const double cur = midpoint_sum(p, n, a, b);
    const double step = increasing ? cur - prev : prev - cur;
    if (!(step > 1e-13)) return false;
    prev = cur;
  }
  return true;
}

namespace {

double simpson(const std::function<double(double)>& g, double lo, double hi,
               std::size_t n) {
  // composite Simpson with n (even) subintervals
  const double h = (hi - lo) / static_cast<double>(n);
  double s = g(lo) + g(hi);
  for (std::size_t i = 1; i < n; ++i)
    s += g(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

double integrate(const std::function<double(double)>& g, double lo, double hi) {
  double prev = simpson(g, lo, hi, 8);
  for (std::size_t n = 16; n <= (1u << 20); n *= 2) {
    const double cur = simpson(g, lo, hi, n);
    if (std::abs(cur - prev) < 1e-10 * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace

bool lemma_interval_inequality(const QuadratureCase& c) {
  if (!(c.a < c.b && c.b < c.c && c.c < c.d))
    throw std::invalid_argument("lemma: require a < b < c < d");
  if (c.p < 0 || c.q < 0 || c.r < 0)
    throw std::invalid_argument("lemma: weights must be non-negative");
  if (!(c.b - c.a <= c.d - c.c))
    throw std::invalid_argument("lemma: require b - a <= d - c");
  if (!(c.p < c.r)) throw std::invalid_argument("lemma: require p < r");
  const double lhs_w = c.q * (c.c - c.b);
  const double rhs_w = c.p * (c.b - c.a) + c.r * (c.d - c.c);
  if (std::abs(lhs_w - rhs_w) > 1e-9 * std::max(1.0, std::abs(rhs_w)))
    throw std::invalid_argument("lemma: weight balance q(c-b) = p(b-a) + r(d-c) violated");
  if (!(c.g(c.c) > c.g(c.b)))
    throw std::invalid_argument("lemma: require g(c) > g(b)");

  const double lhs = c.q * integrate(c.g, c.b, c.c);
  const double rhs = c.p * integrate(c.g, c.a, c.b) + c.r * integrate(c.g, c.c, c.d);
  return lhs < rhs;
}

}  // namespace trumping
