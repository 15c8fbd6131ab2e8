#include "trumping/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace trumping {

namespace {

void require_positive_x(const DVector& x, const char* what) {
  if (!x.strictly_positive())
    throw std::invalid_argument(std::string(what) + ": x must be strictly positive");
}

}  // namespace

bool in_S(const DVector& x, const DVector& y) {
  require_positive_x(x, "in_S");
  return majorize(x, y).holds;
}

Verdict in_T(const DVector& x, const DVector& y, const ScanConfig& cfg) {
  require_positive_x(x, "in_T");
  return trumped(x, y, cfg);
}

Verdict in_P(const DVector& x, const DVector& y, const ScanConfig& cfg) {
  require_positive_x(x, "in_P");
  return power_majorize(x, y, cfg).to_verdict("power");
}

ExtremePointReport classify_extreme_point(const DVector& x, const DVector& y,
                                          const ScanConfig& cfg) {
  require_positive_x(x, "classify_extreme_point");
  PowerVerdict pv = power_majorize(x, y, cfg);
  if (pv.verdict == Outcome::Fails)
    throw std::invalid_argument("classify_extreme_point: x is not in P(y)");

  ExtremePointReport rep;
  rep.in_P = true;
  rep.is_permutation_of_y = sorted_equal(x, y);

  if (rep.is_permutation_of_y) {
    // gap(r) vanishes identically; both criteria hold.
    rep.criterion_equality = 0.0;
    rep.min_gap = 0;
    rep.classified_extreme = true;
    rep.trumped_by_y = trumped(x, y, cfg);
    rep.criteria_agree = true;
    return rep;
  }

  auto g = [&](double r) { return normalized_gap(r, x, y); };
  const double hi = std::max(cfg.r_hi, detail::tail_cutoff(x, y, +1));
  const double lo = std::min(cfg.r_lo, -detail::tail_cutoff(x, y, -1));
  auto m = detail::scan_minima(g, lo, hi, cfg);
  rep.min_gap = m.min_all;
  rep.classified_extreme = m.min_all <= cfg.margin_tol;
  if (rep.classified_extreme) rep.criterion_equality = m.argmin_all;

  rep.trumped_by_y = trumped(x, y, cfg);
  const bool criterion3 = rep.is_permutation_of_y || !rep.trumped_by_y.holds();
  rep.criteria_agree = rep.classified_extreme == criterion3;
  return rep;
}

std::pair<bool, bool> boundary_extreme_values(const DVector& x, const DVector& y) {
  if (x.exact() && y.exact())
    return {x.exact_desc().front() == y.exact_desc().front(),
            x.exact_asc().front() == y.exact_asc().front()};
  const double tol = 1e-12 * std::max({1.0, x.max(), y.max()});
  return {std::abs(x.max() - y.max()) <= tol, std::abs(x.min() - y.min()) <= tol};
}

DVector interior_path(const DVector& x, const std::vector<std::size_t>& perm,
                      double t) {
  if (perm.size() != x.dim())
    throw std::invalid_argument("interior_path: permutation size mismatch");
  if (!(t > 0 && t < 1))
    throw std::invalid_argument("interior_path: t must lie in (0, 1)");
  std::vector<double> permuted(x.dim());
  std::vector<bool> seen(x.dim(), false);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (perm[i] >= x.dim() || seen[perm[i]])
      throw std::invalid_argument("interior_path: not a permutation");
    seen[perm[i]] = true;
    permuted[i] = x[perm[i]];
  }
  if (permuted == x.values())
    throw std::invalid_argument("interior_path: permutation fixes x");
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    out[i] = t * x[i] + (1 - t) * permuted[i];
  return DVector(std::move(out));
}

namespace {

std::vector<std::size_t> sort_desc_perm(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return idx;
}

std::vector<std::size_t> invert(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

struct Transform {
  std::size_t j, k;
  double lambda;
};

}  // namespace

ConvexDecomposition rado_decompose(const DVector& x, const DVector& y) {
  if (!majorize(x, y).holds)
    throw std::invalid_argument("rado_decompose: x must be majorized by y");

  NormalizedPair np = normalize_pair(x, y);
  const std::size_t d = np.x.dim();
  const std::vector<double>& dx = np.x.desc();
  std::vector<double> cur = np.y.desc();
  const double eps = 1e-12 * std::max(1.0, np.y.sum());

  // Chain of two-coordinate averages taking sorted y to sorted x.
  std::vector<Transform> chain;
  for (std::size_t guard = 0; guard < 2 * d; ++guard) {
    std::size_t j = d, k = d;
    for (std::size_t i = d; i-- > 0;)
      if (cur[i] - dx[i] > eps) {
        j = i;
        break;
      }
    if (j == d) break;  // fully matched
    for (std::size_t i = j + 1; i < d; ++i)
      if (dx[i] - cur[i] > eps) {
        k = i;
        break;
      }
    if (k == d) break;
    const double delta = std::min(cur[j] - dx[j], dx[k] - cur[k]);
    const double lambda = 1.0 - delta / (cur[j] - cur[k]);
    chain.push_back({j, k, lambda});
    cur[j] -= delta;
    cur[k] += delta;
  }

  // Expand the product of T-transforms into explicit (weight, permutation)
  // terms; each transform doubles the term count at most.
  using Perm = std::vector<std::size_t>;
  std::map<Perm, double> terms;
  Perm identity(d);
  std::iota(identity.begin(), identity.end(), 0);
  terms[identity] = 1.0;
  for (const Transform& t : chain) {
    std::map<Perm, double> next;
    Perm swap = identity;
    std::swap(swap[t.j], swap[t.k]);
    for (const auto& [p, w] : terms) {
      if (t.lambda > 0) next[p] += w * t.lambda;
      if (t.lambda < 1) {
        Perm composed(d);
        for (std::size_t i = 0; i < d; ++i) composed[i] = p[swap[i]];
        next[composed] += w * (1 - t.lambda);
      }
    }
    terms = std::move(next);
  }

  // Conjugate from the sorted frame back to the input orderings:
  // x = Sx^{-1} (sum w P) Sy y, with Sx, Sy the descending sorts.
  const auto sx = sort_desc_perm(np.x.values());
  const auto sy = sort_desc_perm(np.y.values());
  const auto inv_sx = invert(sx);

  ConvexDecomposition out;
  std::vector<double> recon(d, 0.0);
  for (const auto& [p, w] : terms) {
    ConvexDecomposition::Term term;
    term.weight = w;
    term.perm.resize(d);
    for (std::size_t i = 0; i < d; ++i) term.perm[i] = sy[p[inv_sx[i]]];
    for (std::size_t i = 0; i < d; ++i)
      recon[i] += w * np.y.values()[term.perm[i]];
    out.terms.push_back(std::move(term));
  }
  double err = 0;
  for (std::size_t i = 0; i < d; ++i)
    err = std::max(err, std::abs(recon[i] - np.x.values()[i]));
  out.reconstruction_error = err;
  return out;
}

}  // namespace trumping
