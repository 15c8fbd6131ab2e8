#include "trumping/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "trumping/golden.hpp"

namespace trumping {

namespace detail {

double log_power_sum(const std::vector<double>& vals, double r) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : vals)
    if (v > 0) m = std::max(m, r * std::log(v));
  if (!std::isfinite(m)) return -std::numeric_limits<double>::infinity();
  double s = 0;
  for (double v : vals)
    if (v > 0) s += std::exp(r * std::log(v) - m);
  return m + std::log(s);
}

namespace {

std::map<double, long> value_counts(const std::vector<double>& vals) {
  std::map<double, long> counts;
  for (double v : vals) ++counts[v];
  return counts;
}

}  // namespace

int tail_sign_one_side(const std::vector<double>& x, const std::vector<double>& y,
                       int direction) {
  auto cx = value_counts(x);
  auto cy = value_counts(y);
  std::map<double, long> diff;  // count_y - count_x per distinct value
  for (auto& [v, c] : cy) diff[v] += c;
  for (auto& [v, c] : cx) diff[v] -= c;
  if (direction > 0) {
    // Largest differing value dominates as r -> +inf.
    for (auto it = diff.rbegin(); it != diff.rend(); ++it)
      if (it->second != 0) return it->second > 0 ? 1 : -1;
  } else {
    // Smallest differing value dominates as r -> -inf.
    for (auto& [v, c] : diff)
      if (c != 0) return c > 0 ? 1 : -1;
  }
  return 0;
}

double tail_cutoff(const DVector& x, const DVector& y, int direction) {
  std::vector<double> vals;
  for (double v : x.values())
    if (v > 0) vals.push_back(v);
  for (double v : y.values())
    if (v > 0) vals.push_back(v);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  if (vals.size() < 2) return 0;

  auto cx = value_counts(x.values());
  auto cy = value_counts(y.values());
  auto count_diff = [&](double v) {
    long c = 0;
    if (auto it = cy.find(v); it != cy.end()) c += it->second;
    if (auto it = cx.find(v); it != cx.end()) c -= it->second;
    return c;
  };

  // Locate the deciding (first differing) value in scan direction, the next
  // distinct value behind it (their ratio sets how fast the deciding run
  // dominates), and the extreme value overall. When the extreme value is a
  // run shared by both vectors, its contribution cancels and the gap shrinks
  // like (deciding / extreme)^|r|; once that factor falls below machine
  // epsilon relative to the shared lead, double evaluation reads as zero and
  // the analytic tail sign has to take over. Cap the window accordingly.
  double ratio = 0;
  double precision_cap = 1e4;
  constexpr double kLogInvEps = 36.04;  // ln(1 / DBL_EPSILON)
  if (direction > 0) {
    for (std::size_t i = vals.size(); i-- > 0;) {
      if (count_diff(vals[i]) != 0) {
        if (i == 0) return 0;
        ratio = vals[i] / vals[i - 1];
        if (vals[i] < vals.back())
          precision_cap = 0.8 * kLogInvEps / std::log(vals.back() / vals[i]);
        break;
      }
    }
  } else {
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (count_diff(vals[i]) != 0) {
        if (i + 1 == vals.size()) return 0;
        ratio = vals[i + 1] / vals[i];
        if (vals[i] > vals.front())
          precision_cap = 0.8 * kLogInvEps / std::log(vals[i] / vals.front());
        break;
      }
    }
  }
  if (ratio <= 1) return 0;
  const double d = static_cast<double>(x.dim() + y.dim());
  double cutoff = 2 * std::log(d + 1) / std::log(ratio) + 5;
  return std::min({cutoff, precision_cap, 1e4});
}

ScanMinima scan_minima(const std::function<double(double)>& g, double lo,
                       double hi, const ScanConfig& cfg) {
  const int n = std::max(cfg.grid_points, 3);
  std::vector<double> rs;
  rs.reserve(static_cast<std::size_t>(n) + 3);
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) rs.push_back(lo + i * step);
  for (double extra : {0.0, 0.5, 1.0})
    if (extra > lo && extra < hi) rs.push_back(extra);
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

  ScanMinima m;
  std::vector<double> vals(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    vals[i] = g(rs[i]);
    m.samples.push_back({rs[i], vals[i]});
  }

  auto classify = [&](double r, double v) {
    if (!std::isfinite(v)) return;
    if (v < m.min_all) {
      m.min_all = v;
      m.argmin_all = r;
    }
    const bool boundary = std::abs(r) < 1e-3 || std::abs(r - 1) < 1e-3;
    if (!boundary && v < m.min_interior) {
      m.min_interior = v;
      m.argmin_interior = r;
    }
    // A violation must clear the margin tolerance; values inside the band
    // [-margin_tol, margin_tol] are cancellation-level and fall under the
    // margin-based Inconclusive path instead.
    if (v < -cfg.margin_tol &&
        (!m.any_nonpositive || r < m.first_nonpositive_r)) {
      m.any_nonpositive = true;
      m.first_nonpositive_r = r;
      m.first_nonpositive_value = v;
    }
  };

  for (std::size_t i = 0; i < rs.size(); ++i) classify(rs[i], vals[i]);

  // Refine every bracketed local minimum of the sampled sequence.
  for (std::size_t i = 1; i + 1 < rs.size(); ++i) {
    if (!std::isfinite(vals[i])) continue;
    if (vals[i] <= vals[i - 1] && vals[i] <= vals[i + 1]) {
      auto res = golden_min(g, rs[i - 1], rs[i + 1], cfg.refine_tol,
                            cfg.max_refine_depth);
      classify(res.x, res.f);
    }
  }
  return m;
}

}  // namespace detail

ExtendedReal klimesh_f(double r, const DVector& x) {
  if (r <= 0 && x.has_zero()) return ExtendedReal::inf();
  if (r == 1) {
    double s = 0;
    for (double v : x.values())
      if (v > 0) s += v * std::log(v);
    return ExtendedReal::finite(s);
  }
  if (r == 0) {
    double s = 0;
    for (double v : x.values()) s -= std::log(v);
    return ExtendedReal::finite(s);
  }
  const double lps = detail::log_power_sum(x.values(), r);
  if (r > 1 || r < 0) return ExtendedReal::finite(lps);
  return ExtendedReal::finite(-lps);  // 0 < r < 1
}

double power_mean(double nu, const DVector& x) {
  if (nu <= 0 && x.has_zero())
    throw std::domain_error("power_mean: nu <= 0 requires positive components");
  if (nu == 0) {
    double s = 0;
    for (double v : x.values()) s += std::log(v);
    return std::exp(s / static_cast<double>(x.dim()));
  }
  const double lps = detail::log_power_sum(x.values(), nu);
  return std::exp((lps - std::log(static_cast<double>(x.dim()))) / nu);
}

ExtendedReal gap(double r, const DVector& x, const DVector& y) {
  const ExtendedReal fy = klimesh_f(r, y);
  const ExtendedReal fx = klimesh_f(r, x);
  if (fx.infinite && fy.infinite)
    throw std::domain_error(
        "gap: undefined, both vectors contain zeros at r <= 0; apply "
        "normalize_pair first");
  if (fy.infinite) return ExtendedReal::inf();
  if (fx.infinite)
    return ExtendedReal::finite(-std::numeric_limits<double>::infinity());
  return ExtendedReal::finite(fy.value - fx.value);
}

double normalized_gap(double r, const DVector& x, const DVector& y) {
  // Within 1e-6 of the removable points r = 0, 1 the quotient
  // gap(r)/|r(r-1)| amplifies cancellation noise faster than the function
  // varies; evaluate the one-sided limit instead.
  if (std::abs(r - 1) < 1e-6) {
    const double g1 = gap(1, x, y).as_double();
    return std::isfinite(g1) ? g1 / x.sum() : g1;
  }
  if (std::abs(r) < 1e-6) {
    const double g0 = gap(0, x, y).as_double();
    return std::isfinite(g0) ? g0 / static_cast<double>(x.dim()) : g0;
  }
  const double g = gap(r, x, y).as_double();
  if (!std::isfinite(g)) return g;
  return g / std::abs(r * (r - 1));
}

TailSigns tail_signs(const DVector& x, const DVector& y) {
  if (!x.strictly_positive() || !y.strictly_positive())
    throw std::domain_error("tail_signs: components must be strictly positive");
  TailSigns t;
  t.pos = detail::tail_sign_one_side(x.values(), y.values(), +1);
  t.neg = detail::tail_sign_one_side(x.values(), y.values(), -1);
  return t;
}

namespace {

// Walk outward from `start` (doubling) until the raw gap turns non-positive.
std::pair<double, double> find_tail_witness(const DVector& x, const DVector& y,
                                            double start, int direction) {
  double r = start * direction;
  for (int i = 0; i < 200; ++i) {
    const double g = gap(r, x, y).as_double();
    if (g <= 0) return {r, g};
    if (std::abs(r) > 1e8) break;
    r *= 1.5;
  }
  return {r, gap(r, x, y).as_double()};
}

}  // namespace

ScanReport scan_strict_dominance(const DVector& x, const DVector& y,
                                 const ScanConfig& cfg) {
  if (!x.strictly_positive())
    throw std::invalid_argument("scan_strict_dominance: x must be strictly positive");
  if (x.dim() != y.dim())
    throw std::invalid_argument(
        "scan_strict_dominance: dimension mismatch; apply normalize_pair first");
  if (sorted_equal(x, y))
    throw std::invalid_argument(
        "scan_strict_dominance: vectors must differ as multisets");

  ScanReport rep;
  const bool y_zero = y.has_zero();
  rep.tail_pos_sign = detail::tail_sign_one_side(x.values(), y.values(), +1);
  rep.tail_neg_sign =
      y_zero ? 1 : detail::tail_sign_one_side(x.values(), y.values(), -1);

  rep.gap_at_zero = gap(0, x, y).as_double();
  rep.gap_at_one = gap(1, x, y).as_double();

  const double cut_pos = detail::tail_cutoff(x, y, +1);
  const double cut_neg = y_zero ? 0 : detail::tail_cutoff(x, y, -1);
  // A finite cutoff marks where the analytic tail sign takes over (and,
  // when runs are shared, where float evaluation stops resolving the gap);
  // the window ends there. Without one the configured window applies.
  rep.window_hi = cut_pos > 0 ? std::max(2.0, cut_pos) : cfg.r_hi;
  rep.window_lo = cut_neg > 0 ? std::min(-1.0, -cut_neg) : cfg.r_lo;

  if (rep.tail_pos_sign <= 0 || rep.tail_neg_sign <= 0) {
    const int dir = rep.tail_pos_sign <= 0 ? +1 : -1;
    auto [wr, wg] = find_tail_witness(
        x, y, dir > 0 ? rep.window_hi : -rep.window_lo, dir);
    rep.verdict = Outcome::Fails;
    rep.witness_r = wr;
    rep.witness_gap = wg;
    rep.min_gap = normalized_gap(wr, x, y);
    rep.argmin_r = wr;
    return rep;
  }

  auto g = [&](double r) { return normalized_gap(r, x, y); };
  auto m = detail::scan_minima(g, rep.window_lo, rep.window_hi, cfg);
  rep.samples = std::move(m.samples);
  rep.min_gap = m.min_all;
  rep.argmin_r = m.argmin_all;

  if (m.any_nonpositive) {
    rep.verdict = Outcome::Fails;
    rep.witness_r = m.first_nonpositive_r;
    rep.witness_gap = gap(m.first_nonpositive_r, x, y).as_double();
  } else if (m.min_all <= cfg.margin_tol) {
    rep.verdict = Outcome::Inconclusive;
  } else {
    rep.verdict = Outcome::Holds;
  }
  return rep;
}

Verdict ScanReport::to_verdict(const std::string& relation) const {
  Verdict v;
  v.outcome = verdict;
  v.min_gap = min_gap;
  v.argmin_r = argmin_r;
  if (witness_r) v.witness_r = witness_r;
  switch (verdict) {
    case Outcome::Holds:
      v.reason = relation + ": dominance holds for all scanned r";
      break;
    case Outcome::Fails:
      v.reason = relation + ": dominance violated";
      break;
    default:
      v.reason = relation + ": minimum gap within numerical margin";
  }
  return v;
}

namespace {

// A_nu extended to vectors with zeros: the nu <= 0 limit of the power mean
// of a vector containing a zero is 0.
double power_mean_or_zero(double nu, const DVector& v) {
  if (nu <= 0 && v.has_zero()) return 0;
  return power_mean(nu, v);
}

Outcome scan_to_outcome(const detail::ScanMinima& m, const ScanConfig& cfg,
                        double* min_out) {
  *min_out = m.min_all;
  if (m.any_nonpositive) return Outcome::Fails;
  if (m.min_all <= cfg.margin_tol) return Outcome::Inconclusive;
  return Outcome::Holds;
}

}  // namespace

TurgutReport turgut_conditions_detailed(const DVector& x, const DVector& y,
                                        const ScanConfig& cfg) {
  if (!x.strictly_positive())
    throw std::invalid_argument("turgut_conditions: x must be strictly positive");
  if (x.dim() != y.dim())
    throw std::invalid_argument("turgut_conditions: dimension mismatch");
  if (sorted_equal(x, y))
    throw std::invalid_argument("turgut_conditions: vectors must differ");

  TurgutReport rep;
  rep.sigma_x = entropy(x);
  rep.sigma_y = entropy(y);
  rep.entropy_strict = rep.sigma_x > rep.sigma_y;

  const double d = static_cast<double>(x.dim());
  const double sigma_limit = (rep.sigma_x - rep.sigma_y) / d;

  // Both conditions, normalized by |nu - 1| so the scan objective stays
  // continuous through nu = 1 (shared limit: the entropy difference / d).
  auto d_below = [&](double nu) {
    if (nu >= 1 - 1e-6) return sigma_limit;
    return (power_mean_or_zero(nu, x) - power_mean_or_zero(nu, y)) / (1 - nu);
  };
  auto d_above = [&](double nu) {
    if (nu <= 1 + 1e-6) return sigma_limit;
    return (power_mean_or_zero(nu, y) - power_mean_or_zero(nu, x)) / (nu - 1);
  };

  const bool y_zero = y.has_zero();
  const int tail_pos = detail::tail_sign_one_side(x.values(), y.values(), +1);
  const int tail_neg =
      y_zero ? 1 : detail::tail_sign_one_side(x.values(), y.values(), -1);

  const double cut_pos = detail::tail_cutoff(x, y, +1);
  const double cut_neg = y_zero ? 0 : detail::tail_cutoff(x, y, -1);
  const double lo = cut_neg > 0 ? std::min(-1.0, -cut_neg) : cfg.r_lo;
  const double hi = cut_pos > 0 ? std::max(2.0, cut_pos) : cfg.r_hi;

  if (tail_neg <= 0) {
    rep.below_one = Outcome::Fails;
    rep.min_margin_below = d_below(lo);
  } else {
    auto m = detail::scan_minima(d_below, lo, 1.0, cfg);
    rep.below_one = scan_to_outcome(m, cfg, &rep.min_margin_below);
  }
  if (tail_pos <= 0) {
    rep.above_one = Outcome::Fails;
    rep.min_margin_above = d_above(hi);
  } else {
    auto m = detail::scan_minima(d_above, 1.0, hi, cfg);
    rep.above_one = scan_to_outcome(m, cfg, &rep.min_margin_above);
  }
  return rep;
}

std::array<bool, 3> turgut_conditions(const DVector& x, const DVector& y,
                                      const ScanConfig& cfg) {
  const TurgutReport rep = turgut_conditions_detailed(x, y, cfg);
  return {rep.below_one == Outcome::Holds, rep.above_one == Outcome::Holds,
          rep.entropy_strict};
}

}  // namespace trumping
