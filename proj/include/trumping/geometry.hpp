#ifndef TRUMPING_GEOMETRY_HPP
#define TRUMPING_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "trumping/dvector.hpp"
#include "trumping/functionals.hpp"
#include "trumping/relations.hpp"
#include "trumping/verdict.hpp"

namespace trumping {

/// Pointwise classification of x against the extreme points of P(y).
struct ExtremePointReport {
  bool in_P = false;
  std::optional<double> criterion_equality;  // r* with |gap(r*)| within tol
  bool is_permutation_of_y = false;
  Verdict trumped_by_y;
  bool classified_extreme = false;  // criterion (2): f_r equality somewhere
  bool criteria_agree = false;      // cross-check against criterion (3)
  double min_gap = 0;
};

struct ConvexDecomposition {
  struct Term {
    double weight;
    std::vector<std::size_t> perm;  // term value: v[i] = y[perm[i]]
  };
  std::vector<Term> terms;
  double reconstruction_error = 0;
};

/// Membership in S(y) = {x > 0 : x majorized by y}.
bool in_S(const DVector& x, const DVector& y);
/// Membership in T(y) (trumping) and P(y) (power majorization).
Verdict in_T(const DVector& x, const DVector& y, const ScanConfig& cfg = {});
Verdict in_P(const DVector& x, const DVector& y, const ScanConfig& cfg = {});

ExtremePointReport classify_extreme_point(const DVector& x, const DVector& y,
                                          const ScanConfig& cfg = {});

/// (x_max == y_max, x_min == y_min) — the boundary-point alternative.
std::pair<bool, bool> boundary_extreme_values(const DVector& x, const DVector& y);

/// t*x + (1-t)*(x permuted); lies in T(y) for x in P(y) with distinct entries.
DVector interior_path(const DVector& x, const std::vector<std::size_t>& perm,
                      double t);

/// Rado decomposition of a majorized x as a convex combination of
/// permutations of y, via a chain of at most d-1 two-coordinate averages.
ConvexDecomposition rado_decompose(const DVector& x, const DVector& y);

}  // namespace trumping

#endif
