#include "trumping/catalysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "trumping/relations.hpp"

namespace trumping {

Catalyst::Catalyst(DVector v) : z(std::move(v)) {
  if (z.has_zero())
    throw std::invalid_argument("Catalyst: components must be strictly positive");
}

namespace {

void require_equal_totals(const DVector& x, const DVector& y) {
  if (x.exact() && y.exact()) {
    if (x.exact_sum() != y.exact_sum())
      throw std::invalid_argument("catalysis: totals of x and y must agree");
    return;
  }
  const double tol = 1e-12 * std::max({1.0, x.sum(), y.sum()});
  if (std::abs(x.sum() - y.sum()) > tol)
    throw std::invalid_argument("catalysis: totals of x and y must agree");
}

std::vector<Rational> as_exact(const DVector& v) {
  if (v.exact()) return v.exact_values();
  std::vector<Rational> out;
  out.reserve(v.dim());
  for (double c : v.values()) out.emplace_back(c);
  return out;
}

}  // namespace

bool check_catalyst(const DVector& x, const DVector& y, const Catalyst& z) {
  require_equal_totals(x, y);
  return majorize(tensor(x, z.z), tensor(y, z.z)).holds;
}

bool check_catalyst_exact(const DVector& x, const DVector& y, const Catalyst& z) {
  require_equal_totals(x, y);
  std::vector<Rational> tx, ty;
  const auto ex = as_exact(x), ey = as_exact(y), ez = as_exact(z.z);
  tx.reserve(ex.size() * ez.size());
  ty.reserve(ey.size() * ez.size());
  for (const auto& a : ex)
    for (const auto& b : ez) tx.push_back(a * b);
  for (const auto& a : ey)
    for (const auto& b : ez) ty.push_back(a * b);
  std::sort(tx.begin(), tx.end(), std::greater<>());
  std::sort(ty.begin(), ty.end(), std::greater<>());

  // Proper prefixes exactly; the total discrepancy is already bounded by the
  // equal-totals precondition (floating inputs may carry rounding there).
  Rational px = 0, py = 0;
  for (std::size_t k = 0; k + 1 < tx.size(); ++k) {
    px += tx[k];
    py += ty[k];
    if (px > py) return false;
  }
  return true;
}

double violation(const DVector& x, const DVector& y, const DVector& z) {
  require_equal_totals(x, y);
  const DVector tx = tensor(x, z);
  const DVector ty = tensor(y, z);
  const auto& dx = tx.desc();
  const auto& dy = ty.desc();
  double px = 0, py = 0, total = 0;
  for (std::size_t k = 0; k < dx.size(); ++k) {
    px += dx[k];
    py += dy[k];
    if (px > py) total += px - py;
  }
  return total;
}

namespace {

DVector simplex_descending(std::vector<double> raw) {
  double s = 0;
  for (double v : raw) s += v;
  for (double& v : raw) v /= s;
  std::sort(raw.begin(), raw.end(), std::greater<>());
  return DVector(std::move(raw));
}

// Coordinate-wise multiplicative perturbation descent with a geometrically
// decaying step; the objective is piecewise linear in z.
std::pair<DVector, double> descend(const DVector& x, const DVector& y,
                                   DVector z, const SearchConfig& cfg) {
  double best = violation(x, y, z);
  double step = cfg.step_init;
  const std::size_t n = z.dim();
  for (std::size_t iter = 0; iter < cfg.descent_iters && best > 0; ++iter) {
    bool improved = false;
    for (std::size_t j = 0; j < n; ++j) {
      for (double factor : {1.0 + step, 1.0 / (1.0 + step)}) {
        std::vector<double> cand = z.values();
        cand[j] *= factor;
        DVector zc = simplex_descending(std::move(cand));
        const double v = violation(x, y, zc);
        if (v < best - 1e-16) {
          best = v;
          z = std::move(zc);
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      step *= 0.5;
      if (step < 1e-12) break;
    }
  }
  return {std::move(z), best};
}

}  // namespace

CatalystSearchReport search_catalyst(const DVector& x, const DVector& y,
                                     const SearchConfig& cfg) {
  require_equal_totals(x, y);
  if (!x.strictly_positive())
    throw std::invalid_argument("search_catalyst: x must be strictly positive");
  if (cfg.max_dim < 1 || cfg.restarts_per_dim < 1)
    throw std::invalid_argument("search_catalyst: invalid configuration");

  CatalystSearchReport rep;
  rep.prefilter = trumped(x, y, cfg.scan);
  if (rep.prefilter.fails()) return rep;  // no catalyst of any dimension

  // Dimension 1: the trivial catalyst covers plainly majorized pairs.
  {
    Catalyst one(DVector{1.0});
    rep.dims_tried.push_back(1);
    rep.best_violation_per_dim.push_back(violation(x, y, one.z));
    if (check_catalyst_exact(x, y, one)) {
      rep.found = true;
      rep.catalyst = std::move(one);
      return rep;
    }
  }

  for (std::size_t n = 2; n <= cfg.max_dim; ++n) {
    double best_for_dim = std::numeric_limits<double>::infinity();
    rep.dims_tried.push_back(n);
    for (std::size_t restart = 0; restart < cfg.restarts_per_dim; ++restart) {
      std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + n * 1000003ULL +
                          restart);
      ++rep.seeds_used;
      std::exponential_distribution<double> expo(1.0);
      std::vector<double> raw(n);
      for (double& v : raw) v = expo(rng) + 1e-9;
      auto [z, v] = descend(x, y, simplex_descending(std::move(raw)), cfg);
      best_for_dim = std::min(best_for_dim, v);
      if (v <= cfg.violation_tol) {
        Catalyst cand(z);
        if (check_catalyst_exact(x, y, cand)) {
          rep.best_violation_per_dim.push_back(best_for_dim);
          rep.found = true;
          rep.catalyst = std::move(cand);
          return rep;
        }
      }
    }
    rep.best_violation_per_dim.push_back(best_for_dim);
  }
  return rep;
}

bool check_weak_catalyst(const DVector& x, const DVector& y, const Catalyst& z,
                         WeakMode mode) {
  const DVector tx = tensor(x, z.z);
  const DVector ty = tensor(y, z.z);
  if (mode == WeakMode::Sub) return submajorize(tx, ty).holds;
  return supermajorize(tx, ty).holds;
}

}  // namespace trumping
