#ifndef TRUMPING_CATALYSIS_HPP
#define TRUMPING_CATALYSIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "trumping/dvector.hpp"
#include "trumping/functionals.hpp"
#include "trumping/verdict.hpp"

namespace trumping {

/// Auxiliary vector with strictly positive components.
struct Catalyst {
  DVector z;

  explicit Catalyst(DVector v);
  std::size_t dim() const { return z.dim(); }
};

struct SearchConfig {
  std::size_t max_dim = 8;
  std::size_t restarts_per_dim = 64;
  std::uint64_t seed = 0;
  std::size_t descent_iters = 500;
  double step_init = 0.25;
  double violation_tol = 0;  // final acceptance is an exact recheck
  ScanConfig scan;           // prefilter configuration
};

struct CatalystSearchReport {
  bool found = false;
  std::optional<Catalyst> catalyst;
  std::vector<std::size_t> dims_tried;
  std::vector<double> best_violation_per_dim;
  Verdict prefilter;
  std::uint64_t seeds_used = 0;
};

enum class WeakMode { Sub, Super };

/// True iff tensor(x, z) is majorized by tensor(y, z). Totals must agree.
bool check_catalyst(const DVector& x, const DVector& y, const Catalyst& z);

/// Full-precision recheck: every component is promoted to the exact
/// rational it stores and the tensor prefix inequalities are compared in
/// rational arithmetic.
bool check_catalyst_exact(const DVector& x, const DVector& y, const Catalyst& z);

/// Search objective: total prefix-sum deficit of the tensor pair; zero iff
/// check_catalyst holds.
double violation(const DVector& x, const DVector& y, const DVector& z);

/// Klimesh prefilter, then seeded restarts of multiplicative coordinate
/// descent per catalyst dimension. Deterministic for a fixed seed.
CatalystSearchReport search_catalyst(const DVector& x, const DVector& y,
                                     const SearchConfig& cfg = {});

/// Sub-/super-majorization of the tensor pair (weak trumping probes).
bool check_weak_catalyst(const DVector& x, const DVector& y, const Catalyst& z,
                         WeakMode mode);

}  // namespace trumping

#endif
