#ifndef TRUMPING_DVECTOR_HPP
#define TRUMPING_DVECTOR_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "trumping/exact.hpp"

namespace trumping {

/**
 * Finite non-negative real vector with cached sorted views.
 *
 * Values are immutable after construction. A vector built from rationals
 * (or integers) is in "exact mode": partial sums, products and comparisons
 * on it can be carried out in arbitrary-precision rational arithmetic.
 */
class DVector {
 public:
  explicit DVector(std::vector<double> components);
  explicit DVector(std::vector<Rational> components);
  DVector(std::initializer_list<double> components);

  static DVector from_integers(const std::vector<long long>& components);

  std::size_t dim() const { return vals_.size(); }
  const std::vector<double>& values() const { return vals_; }
  double operator[](std::size_t i) const { return vals_[i]; }

  // Cached non-increasing / non-decreasing views.
  const std::vector<double>& desc() const { return desc_; }
  const std::vector<double>& asc() const { return asc_; }

  bool exact() const { return exact_mode_; }
  // Valid only in exact mode.
  const std::vector<Rational>& exact_values() const { return exact_; }
  const std::vector<Rational>& exact_desc() const { return exact_desc_; }
  const std::vector<Rational>& exact_asc() const { return exact_asc_; }

  double sum() const;
  Rational exact_sum() const;

  double min() const { return asc_.front(); }
  double max() const { return desc_.front(); }

  bool has_zero() const;
  bool strictly_positive() const { return !has_zero(); }
  // True in exact mode when every component is an integer.
  bool integral() const;

 private:
  void validate_and_cache();

  std::vector<double> vals_;
  std::vector<double> asc_, desc_;
  std::vector<Rational> exact_, exact_asc_, exact_desc_;
  bool exact_mode_ = false;
};

/// Probability vector: components sum to 1 (within 1e-12; exactly in exact mode).
class ProbVector {
 public:
  explicit ProbVector(DVector v);
  const DVector& vec() const { return v_; }

 private:
  DVector v_;
};

struct NormalizedPair {
  DVector x;
  DVector y;
  bool padded = false;         // zeros were appended to equalize dimensions
  bool zeros_deleted = false;  // matched zeros were removed from both
};

DVector sort_desc(const DVector& v);
DVector sort_asc(const DVector& v);

/// All pairwise products x_i * z_j (row-major), dimension dim(x)*dim(z).
DVector tensor(const DVector& x, const DVector& z);

/// Delete matched zeros from both vectors, then zero-pad to equal dimension.
NormalizedPair normalize_pair(const DVector& x, const DVector& y);

/// Shannon/von Neumann entropy -sum x_i ln x_i, with 0 ln 0 = 0.
double entropy(const DVector& x);

/// Equal as sorted multisets (exact comparison of stored doubles).
bool sorted_equal(const DVector& x, const DVector& y);

}  // namespace trumping

#endif
