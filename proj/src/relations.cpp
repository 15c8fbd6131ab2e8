#include "trumping/relations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace trumping {

namespace {

double float_tol(const DVector& x, const DVector& y) {
  return 1e-12 * std::max({1.0, std::abs(x.sum()), std::abs(y.sum())});
}

std::vector<double> prefix_margins_exact(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b,
                                         std::vector<int>* signs) {
  // margins = prefix(b) - prefix(a), with exact signs recorded separately
  std::vector<double> out;
  Rational pa = 0, pb = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    pa += a[k];
    pb += b[k];
    Rational m = pb - pa;
    out.push_back(to_double(m));
    signs->push_back(m > 0 ? 1 : (m < 0 ? -1 : 0));
  }
  return out;
}

std::vector<double> prefix_margins_float(const std::vector<double>& a,
                                         const std::vector<double>& b) {
  std::vector<double> out;
  double pa = 0, pb = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    pa += a[k];
    pb += b[k];
    out.push_back(pb - pa);
  }
  return out;
}

enum class MajorMode { Full, Sub, Super };

MajorizationVerdict check_majorization(const DVector& x0, const DVector& y0,
                                       MajorMode mode) {
  NormalizedPair np = normalize_pair(x0, y0);
  const DVector& x = np.x;
  const DVector& y = np.y;
  MajorizationVerdict v;
  v.padded = np.padded;
  v.exact = x.exact() && y.exact();
  const std::size_t d = x.dim();

  std::vector<int> desc_signs, asc_signs;
  if (v.exact) {
    v.margins = prefix_margins_exact(x.exact_desc(), y.exact_desc(), &desc_signs);
    // ascending convention: prefix(x asc) - prefix(y asc)
    v.ascending_margins =
        prefix_margins_exact(y.exact_asc(), x.exact_asc(), &asc_signs);
  } else {
    v.margins = prefix_margins_float(x.desc(), y.desc());
    v.ascending_margins = prefix_margins_float(y.asc(), x.asc());
  }

  const double tol = v.exact ? 0.0 : float_tol(x, y);
  auto violated = [&](std::size_t k, bool ascending) {
    if (v.exact) {
      const auto& s = ascending ? asc_signs : desc_signs;
      return s[k] < 0;
    }
    const auto& m = ascending ? v.ascending_margins : v.margins;
    return m[k] < -tol;
  };
  auto total_equal = [&] {
    if (v.exact) return desc_signs[d - 1] == 0;
    return std::abs(v.margins[d - 1]) <= tol;
  };

  v.holds = true;
  const bool ascending = mode == MajorMode::Super;
  for (std::size_t k = 0; k < d; ++k) {
    if (violated(k, ascending)) {
      v.holds = false;
      v.first_violation_k = k + 1;
      break;
    }
  }
  if (v.holds && mode == MajorMode::Full && !total_equal()) {
    v.holds = false;
    v.first_violation_k = d;
  }
  return v;
}

}  // namespace

MajorizationVerdict majorize(const DVector& x, const DVector& y) {
  return check_majorization(x, y, MajorMode::Full);
}

MajorizationVerdict submajorize(const DVector& x, const DVector& y) {
  return check_majorization(x, y, MajorMode::Sub);
}

MajorizationVerdict supermajorize(const DVector& x, const DVector& y) {
  return check_majorization(x, y, MajorMode::Super);
}

Verdict PowerVerdict::to_verdict(const std::string& relation) const {
  Verdict v;
  v.outcome = verdict;
  v.min_gap = min_gap;
  v.argmin_r = argmin_p;
  v.witness_r = witness_p;
  switch (verdict) {
    case Outcome::Holds:
      v.reason = relation + (strict ? ": holds strictly" : ": holds");
      break;
    case Outcome::Fails:
      v.reason = relation + ": power-sum inequality violated";
      break;
    default:
      v.reason = relation + ": margin within numerical tolerance";
  }
  return v;
}

namespace {

// Shared decision logic for the two power-majorization routes. The
// objective G must be continuous, share the sign of the power-sum margin,
// and carry the one-sided limits at p = 0, 1 as its boundary values.
PowerVerdict power_scan(const std::function<double(double)>& G,
                        const DVector& x, const DVector& y,
                        const ScanConfig& cfg) {
  PowerVerdict pv;
  if (sorted_equal(x, y)) {
    pv.verdict = Outcome::Holds;
    pv.strict = false;
    return pv;
  }

  const int tail_pos = detail::tail_sign_one_side(x.values(), y.values(), +1);
  const int tail_neg = detail::tail_sign_one_side(x.values(), y.values(), -1);
  const double hi = std::max(cfg.r_hi, detail::tail_cutoff(x, y, +1));
  const double lo = std::min(cfg.r_lo, -detail::tail_cutoff(x, y, -1));

  pv.boundary_gap_zero = G(0);
  pv.boundary_gap_one = G(1);

  if (tail_pos < 0 || tail_neg < 0) {
    // Violated beyond the cutoff; walk outward for a concrete witness.
    double p = tail_pos < 0 ? hi : lo;
    for (int i = 0; i < 200 && G(p) > 0 && std::abs(p) < 1e8; ++i) p *= 1.5;
    pv.verdict = Outcome::Fails;
    pv.witness_p = p;
    pv.witness_value = G(p);
    pv.min_gap = G(p);
    pv.argmin_p = p;
    return pv;
  }

  auto m = detail::scan_minima(G, lo, hi, cfg);
  pv.min_gap = m.min_all;
  pv.argmin_p = m.argmin_all;

  if (m.min_all < -cfg.margin_tol) {
    pv.verdict = Outcome::Fails;
    pv.witness_p = m.argmin_all;
    pv.witness_value = m.min_all;
  } else if (m.min_interior <= cfg.margin_tol) {
    pv.verdict = Outcome::Inconclusive;
  } else {
    // Equality within margin is tolerated only at the p = 0, 1 boundary,
    // which is exactly the strict power majorization profile.
    pv.verdict = Outcome::Holds;
    pv.strict = true;
  }
  return pv;
}

void require_positive_pair(const DVector& x, const DVector& y,
                           const char* what) {
  if (!x.strictly_positive() || !y.strictly_positive())
    throw std::domain_error(std::string(what) +
                            ": components must be strictly positive");
  if (x.dim() != y.dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

PowerVerdict power_majorize(const DVector& x, const DVector& y,
                            const ScanConfig& cfg) {
  require_positive_pair(x, y, "power_majorize");
  const double d = static_cast<double>(x.dim());
  double sum_lnx = 0, sum_lny = 0, sum_xlnx = 0, sum_ylny = 0;
  for (double v : x.values()) {
    sum_lnx += std::log(v);
    sum_xlnx += v * std::log(v);
  }
  for (double v : y.values()) {
    sum_lny += std::log(v);
    sum_ylny += v * std::log(v);
  }
  const double sx = x.sum();

  auto G = [&, d, sx](double p) {
    if (std::abs(p) < 1e-6) return (sum_lnx - sum_lny) / d;
    if (std::abs(p - 1) < 1e-6) return (sum_ylny - sum_xlnx) / sx;
    const double lx = detail::log_power_sum(x.values(), p);
    const double ly = detail::log_power_sum(y.values(), p);
    const double lm = std::max(lx, ly);
    double diff = std::exp(ly - lm) - std::exp(lx - lm);
    if (p > 0 && p < 1) diff = -diff;  // the regime where the inequality flips
    return diff / std::abs(p * (p - 1));
  };
  return power_scan(G, x, y, cfg);
}

PowerVerdict power_majorize_via_klimesh(const DVector& x, const DVector& y,
                                        const ScanConfig& cfg) {
  require_positive_pair(x, y, "power_majorize_via_klimesh");
  auto G = [&](double r) { return normalized_gap(r, x, y); };
  return power_scan(G, x, y, cfg);
}

Verdict trumped(const DVector& x0, const DVector& y0, const ScanConfig& cfg) {
  NormalizedPair np = normalize_pair(x0, y0);
  const DVector& x = np.x;
  const DVector& y = np.y;

  Verdict v;
  const bool exact = x.exact() && y.exact();
  bool sums_equal;
  if (exact) {
    sums_equal = x.exact_sum() == y.exact_sum();
  } else {
    sums_equal = std::abs(x.sum() - y.sum()) <= float_tol(x, y);
  }
  if (!sums_equal) {
    v.outcome = Outcome::Fails;
    v.reason = "trump: totals differ (trumping preserves the total sum)";
    return v;
  }
  if (sorted_equal(x, y)) {
    v.outcome = Outcome::Holds;
    v.reason = "trump: vectors are equal up to permutation";
    return v;
  }
  if (x.dim() <= 3) {
    MajorizationVerdict m = majorize(x, y);
    v.outcome = m.holds ? Outcome::Holds : Outcome::Fails;
    std::ostringstream os;
    os << "trump: d <= 3, equivalent to majorization ("
       << (m.holds ? "holds" : "fails") << ")";
    if (m.first_violation_k) os << ", first violated prefix k=" << *m.first_violation_k;
    v.reason = os.str();
    return v;
  }
  if (x.has_zero()) {
    // After zero deletion only one side may contain zeros; a zero in x
    // forces f_r(x) = inf for r <= 0 while f_r(y) stays finite.
    v.outcome = Outcome::Fails;
    v.reason = "trump: x contains zeros, y does not; f_r dominance fails for r <= 0";
    v.witness_r = -1.0;
    return v;
  }
  return scan_strict_dominance(x, y, cfg).to_verdict("trump");
}

CertificateReport integer_trump_certificate(const DVector& x, const DVector& y,
                                            const ScanConfig& cfg) {
  if (!x.integral() || !y.integral())
    throw std::invalid_argument("integer_trump_certificate: integer input required");
  if (x.has_zero() || y.has_zero())
    throw std::invalid_argument(
        "integer_trump_certificate: components must be positive");
  if (x.dim() != y.dim())
    throw std::invalid_argument("integer_trump_certificate: dimension mismatch");

  CertificateReport rep;
  rep.prod_x = 1;
  rep.prod_y = 1;
  rep.selfpow_x = 1;
  rep.selfpow_y = 1;
  for (const auto& q : x.exact_values()) {
    BigInt n = boost::multiprecision::numerator(q);
    rep.prod_x *= n;
    rep.selfpow_x *= ipow(n, n.convert_to<unsigned long>());
  }
  for (const auto& q : y.exact_values()) {
    BigInt n = boost::multiprecision::numerator(q);
    rep.prod_y *= n;
    rep.selfpow_y *= ipow(n, n.convert_to<unsigned long>());
  }
  rep.products_differ = rep.prod_x != rep.prod_y;
  rep.selfpow_differ = rep.selfpow_x != rep.selfpow_y;

  if (x.exact_sum() != y.exact_sum()) {
    rep.verdict.outcome = Outcome::Fails;
    rep.verdict.reason = "certificate: totals differ";
    return rep;
  }
  if (sorted_equal(x, y)) {
    rep.verdict.outcome = Outcome::Inconclusive;
    rep.verdict.reason = "certificate: inapplicable, vectors equal up to permutation";
    return rep;
  }
  if (x.dim() <= 3) {
    rep.deferred_to_majorization = true;
    MajorizationVerdict m = majorize(x, y);
    rep.verdict.outcome = m.holds ? Outcome::Holds : Outcome::Fails;
    rep.verdict.reason = "certificate: d <= 3, decided by exact majorization";
    return rep;
  }

  rep.power = power_majorize(x, y, cfg);
  if (!rep.products_differ || !rep.selfpow_differ) {
    rep.verdict.outcome = Outcome::Inconclusive;
    rep.verdict.reason = "certificate: inapplicable, product inequalities not strict";
    return rep;
  }
  if (rep.power.verdict == Outcome::Holds && rep.power.strict) {
    rep.verdict.outcome = Outcome::Holds;
    rep.verdict.reason =
        "certificate: strict power majorization with distinct exact products";
  } else if (rep.power.verdict == Outcome::Fails) {
    rep.verdict.outcome = Outcome::Fails;
    rep.verdict.reason = "certificate: power majorization fails";
    rep.verdict.witness_r = rep.power.witness_p;
  } else {
    rep.verdict.outcome = Outcome::Inconclusive;
    rep.verdict.reason = "certificate: power majorization scan inconclusive";
  }
  rep.verdict.min_gap = rep.power.min_gap;
  rep.verdict.argmin_r = rep.power.argmin_p;
  return rep;
}

}  // namespace trumping
