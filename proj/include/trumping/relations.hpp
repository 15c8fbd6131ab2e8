#ifndef TRUMPING_RELATIONS_HPP
#define TRUMPING_RELATIONS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "trumping/dvector.hpp"
#include "trumping/exact.hpp"
#include "trumping/functionals.hpp"
#include "trumping/verdict.hpp"

namespace trumping {

struct MajorizationVerdict {
  bool holds = false;
  std::optional<std::size_t> first_violation_k;  // 1-based, descending convention
  std::vector<double> margins;            // prefix_k(y desc) - prefix_k(x desc)
  std::vector<double> ascending_margins;  // prefix_k(x asc) - prefix_k(y asc)
  bool padded = false;
  bool exact = false;  // decided in exact rational arithmetic
};

struct PowerVerdict {
  Outcome verdict = Outcome::Inconclusive;
  bool strict = false;
  std::optional<double> witness_p;
  double witness_value = 0;
  double min_gap = 0;  // smallest normalized power-sum margin
  double argmin_p = 0;
  double boundary_gap_zero = 0;  // normalized margin at p = 0
  double boundary_gap_one = 0;   // normalized margin at p = 1

  Verdict to_verdict(const std::string& relation) const;
};

struct CertificateReport {
  Verdict verdict;
  PowerVerdict power;
  BigInt prod_x, prod_y;        // product of components
  BigInt selfpow_x, selfpow_y;  // product of x_i^{x_i}
  bool products_differ = false;
  bool selfpow_differ = false;
  bool deferred_to_majorization = false;  // d <= 3 route
};

/// x majorized by y: all descending prefix sums bounded, totals equal.
/// Dimensions are equalized via normalize_pair; exact rational arithmetic
/// when both inputs are exact, else relative tolerance 1e-12.
MajorizationVerdict majorize(const DVector& x, const DVector& y);

/// Weak (sub-)majorization: descending prefix inequalities only.
MajorizationVerdict submajorize(const DVector& x, const DVector& y);

/// Super-majorization: ascending prefix sums of x dominate those of y.
MajorizationVerdict supermajorize(const DVector& x, const DVector& y);

/// Power majorization decided directly on the three-regime power-sum family.
PowerVerdict power_majorize(const DVector& x, const DVector& y,
                            const ScanConfig& cfg = {});

/// Power majorization decided via non-strict Klimesh f_r dominance; must
/// agree with power_majorize.
PowerVerdict power_majorize_via_klimesh(const DVector& x, const DVector& y,
                                        const ScanConfig& cfg = {});

/// Trumping x ≺_T y: majorization verdict for d <= 3, strict f_r dominance
/// scan otherwise. Unequal totals short-circuit to Fails.
Verdict trumped(const DVector& x, const DVector& y, const ScanConfig& cfg = {});

/// Exact-integer trumping certificate: strict power majorization plus exact
/// big-integer inequality of the two component products.
CertificateReport integer_trump_certificate(const DVector& x, const DVector& y,
                                            const ScanConfig& cfg = {});

}  // namespace trumping

#endif
