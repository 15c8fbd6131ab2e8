#ifndef TRUMPING_FUNCTIONALS_HPP
#define TRUMPING_FUNCTIONALS_HPP

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "trumping/dvector.hpp"
#include "trumping/verdict.hpp"

namespace trumping {

/// Real value extended with +infinity (the value of f_r at r <= 0 on
/// vectors containing a zero component).
struct ExtendedReal {
  double value = 0;
  bool infinite = false;

  static ExtendedReal inf() { return {0, true}; }
  static ExtendedReal finite(double v) { return {v, false}; }
  double as_double() const {
    return infinite ? std::numeric_limits<double>::infinity() : value;
  }
};

struct ScanConfig {
  double r_lo = -60;
  double r_hi = 60;
  int grid_points = 2001;
  double refine_tol = 1e-10;
  double margin_tol = 1e-9;
  int max_refine_depth = 60;
};

struct Sample {
  double r;
  double value;  // normalized gap; may be +/-inf
};

struct TailSigns {
  int pos = 0;  // sign of the gap as r -> +infinity
  int neg = 0;  // sign of the gap as r -> -infinity
};

struct ScanReport {
  Outcome verdict = Outcome::Inconclusive;
  std::optional<double> witness_r;
  double witness_gap = 0;   // raw gap at the witness
  double min_gap = 0;       // smallest normalized gap over the scan
  double argmin_r = 0;
  int tail_pos_sign = 0;
  int tail_neg_sign = 0;
  double gap_at_zero = 0;   // raw gap at r = 0 (+inf when y has zeros)
  double gap_at_one = 0;    // raw gap at r = 1
  double window_lo = 0, window_hi = 0;
  std::vector<Sample> samples;

  Verdict to_verdict(const std::string& relation) const;
};

/// Klimesh functional f_r: piecewise in r, +infinity for r <= 0 on vectors
/// with a zero component.
ExtendedReal klimesh_f(double r, const DVector& x);

/// Power mean A_nu = (sum x_i^nu / d)^(1/nu); geometric mean at nu = 0.
/// Domain error when nu <= 0 and some component is 0.
double power_mean(double nu, const DVector& x);

/// f_r(y) - f_r(x) with extended-real arithmetic. Throws when both sides
/// are infinite (both vectors contain zeros and r <= 0).
ExtendedReal gap(double r, const DVector& x, const DVector& y);

/// The scanner's objective: gap(r) rescaled by |r(r-1)| so that the family
/// is continuous through r = 0 and r = 1 (where the raw gap vanishes
/// linearly for equal-sum pairs). Sign agrees with the raw gap everywhere;
/// at r = 0 and r = 1 the value is the one-sided limit gap(0)/d resp.
/// gap(1)/sum(x).
double normalized_gap(double r, const DVector& x, const DVector& y);

/// Signs of the gap beyond all computable cutoffs, from the run-length
/// comparison of the sorted vectors. Requires strictly positive inputs.
TailSigns tail_signs(const DVector& x, const DVector& y);

/// Decide gap(r) > 0 for all real r: analytic tails, grid sampling, and
/// golden-section refinement of every bracketed local minimum.
ScanReport scan_strict_dominance(const DVector& x, const DVector& y,
                                 const ScanConfig& cfg = {});

struct TurgutReport {
  Outcome below_one = Outcome::Inconclusive;  // A_nu(x) > A_nu(y) on (-inf, 1)
  Outcome above_one = Outcome::Inconclusive;  // A_nu(x) < A_nu(y) on (1, inf)
  bool entropy_strict = false;                // sigma(x) > sigma(y)
  double sigma_x = 0, sigma_y = 0;
  double min_margin_below = 0, min_margin_above = 0;
};

TurgutReport turgut_conditions_detailed(const DVector& x, const DVector& y,
                                        const ScanConfig& cfg = {});

/// The three strict inequalities of Turgut's trumping criterion.
std::array<bool, 3> turgut_conditions(const DVector& x, const DVector& y,
                                      const ScanConfig& cfg = {});

namespace detail {

struct ScanMinima {
  double min_all = std::numeric_limits<double>::infinity();
  double argmin_all = 0;
  // Minimum over refined minima whose location is not within 1e-3 of {0, 1}.
  double min_interior = std::numeric_limits<double>::infinity();
  double argmin_interior = 0;
  bool any_nonpositive = false;
  double first_nonpositive_r = 0;
  double first_nonpositive_value = 0;
  std::vector<Sample> samples;
};

/// Grid + golden-section scan of g over [lo, hi]; 0, 1 and 0.5 are always
/// sampled when inside the window. Infinite values are treated as large
/// positive and never refined.
ScanMinima scan_minima(const std::function<double(double)>& g, double lo,
                       double hi, const ScanConfig& cfg);

/// ln sum v^r over the positive components (log-sum-exp); -inf if none.
double log_power_sum(const std::vector<double>& vals, double r);

/// Sign of sum y^r - sum x^r for r beyond every cutoff. `direction` +1 for
/// r -> +infinity, -1 for r -> -infinity. Zeros must be stripped by the
/// caller for the -infinity direction.
int tail_sign_one_side(const std::vector<double>& x, const std::vector<double>& y,
                       int direction);

/// Conservative |r| beyond which the dominant run decides the sign.
double tail_cutoff(const DVector& x, const DVector& y, int direction);

}  // namespace detail

}  // namespace trumping

#endif
