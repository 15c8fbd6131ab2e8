#include "trumping/dvector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace trumping {

DVector::DVector(std::vector<double> components) : vals_(std::move(components)) {
  validate_and_cache();
}

DVector::DVector(std::vector<Rational> components)
    : exact_(std::move(components)), exact_mode_(true) {
  vals_.reserve(exact_.size());
  for (const auto& q : exact_) vals_.push_back(to_double(q));
  validate_and_cache();
}

DVector::DVector(std::initializer_list<double> components)
    : DVector(std::vector<double>(components)) {}

DVector DVector::from_integers(const std::vector<long long>& components) {
  std::vector<Rational> q(components.begin(), components.end());
  return DVector(std::move(q));
}

void DVector::validate_and_cache() {
  if (vals_.empty()) throw std::invalid_argument("DVector: dimension must be >= 1");
  for (double v : vals_) {
    if (!std::isfinite(v)) throw std::invalid_argument("DVector: components must be finite");
    if (v < 0) throw std::invalid_argument("DVector: components must be non-negative");
  }
  if (exact_mode_) {
    for (const auto& q : exact_)
      if (q < 0) throw std::invalid_argument("DVector: components must be non-negative");
  }
  asc_ = vals_;
  std::stable_sort(asc_.begin(), asc_.end());
  desc_ = vals_;
  std::stable_sort(desc_.begin(), desc_.end(), std::greater<>());
  if (exact_mode_) {
    exact_asc_ = exact_;
    std::stable_sort(exact_asc_.begin(), exact_asc_.end());
    exact_desc_ = exact_;
    std::stable_sort(exact_desc_.begin(), exact_desc_.end(), std::greater<>());
  }
}

double DVector::sum() const {
  double s = 0;
  for (double v : vals_) s += v;
  return s;
}

Rational DVector::exact_sum() const {
  if (!exact_mode_) throw std::logic_error("DVector: exact_sum on inexact vector");
  Rational s = 0;
  for (const auto& q : exact_) s += q;
  return s;
}

bool DVector::has_zero() const {
  if (exact_mode_) return exact_asc_.front() == 0;
  return asc_.front() == 0;
}

bool DVector::integral() const {
  if (!exact_mode_) return false;
  for (const auto& q : exact_)
    if (!is_integral(q)) return false;
  return true;
}

ProbVector::ProbVector(DVector v) : v_(std::move(v)) {
  if (v_.exact()) {
    if (v_.exact_sum() != 1)
      throw std::invalid_argument("ProbVector: components must sum to 1");
  } else if (std::abs(v_.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument("ProbVector: components must sum to 1 within 1e-12");
  }
}

DVector sort_desc(const DVector& v) {
  if (v.exact()) return DVector(v.exact_desc());
  return DVector(v.desc());
}

DVector sort_asc(const DVector& v) {
  if (v.exact()) return DVector(v.exact_asc());
  return DVector(v.asc());
}

DVector tensor(const DVector& x, const DVector& z) {
  if (x.exact() && z.exact()) {
    std::vector<Rational> out;
    out.reserve(x.dim() * z.dim());
    for (const auto& a : x.exact_values())
      for (const auto& b : z.exact_values()) out.push_back(a * b);
    return DVector(std::move(out));
  }
  std::vector<double> out;
  out.reserve(x.dim() * z.dim());
  for (double a : x.values())
    for (double b : z.values()) out.push_back(a * b);
  return DVector(std::move(out));
}

namespace {

// Remove up to n_remove zero components; keep everything else in order.
template <typename T>
std::vector<T> drop_zeros(const std::vector<T>& in, std::size_t n_remove) {
  std::vector<T> out;
  out.reserve(in.size());
  for (const auto& v : in) {
    if (n_remove > 0 && v == 0) {
      --n_remove;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

NormalizedPair normalize_pair(const DVector& x, const DVector& y) {
  const auto count_zeros = [](const DVector& v) {
    std::size_t n = 0;
    for (double c : v.values()) n += (c == 0);
    return n;
  };
  const std::size_t matched = std::min(count_zeros(x), count_zeros(y));

  NormalizedPair out{x, y, false, matched > 0};
  const bool exact = x.exact() && y.exact();
  auto rebuild = [&](const DVector& v, std::size_t pad_to) {
    if (exact) {
      auto comps = drop_zeros(v.exact_values(), matched);
      comps.resize(std::max(comps.size(), pad_to), Rational(0));
      return DVector(std::move(comps));
    }
    auto comps = drop_zeros(v.values(), matched);
    comps.resize(std::max(comps.size(), pad_to), 0.0);
    return DVector(std::move(comps));
  };

  DVector nx = rebuild(x, 0);
  DVector ny = rebuild(y, 0);
  const std::size_t d = std::max(nx.dim(), ny.dim());
  out.padded = nx.dim() != ny.dim();
  out.x = rebuild(x, d);
  out.y = rebuild(y, d);
  return out;
}

double entropy(const DVector& x) {
  double s = 0;
  for (double v : x.values())
    if (v > 0) s -= v * std::log(v);
  return s;
}

bool sorted_equal(const DVector& x, const DVector& y) {
  if (x.exact() && y.exact()) return x.exact_asc() == y.exact_asc();
  return x.asc() == y.asc();
}

}  // namespace trumping
