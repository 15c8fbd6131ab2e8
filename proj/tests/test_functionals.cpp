#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "trumping/families.hpp"
#include "trumping/functionals.hpp"

using namespace trumping;

namespace {

const DVector kX{3, 3, 3, 9, 9, 9};
const DVector kY{2, 2, 6, 6, 10, 10};

DVector random_positive(std::mt19937_64& rng, std::size_t d) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> v(d);
  for (double& e : v) e = u(rng);
  return DVector(v);
}

DVector rescale(const DVector& v, double target_sum) {
  std::vector<double> out = v.values();
  const double c = target_sum / v.sum();
  for (double& e : out) e *= c;
  return DVector(out);
}

}  // namespace

TEST_CASE("klimesh_f closed-form values") {
  // r > 1: ln sum x^r
  CHECK(klimesh_f(2, kX).value == doctest::Approx(std::log(270.0)).epsilon(1e-14));
  CHECK(klimesh_f(2, kY).value == doctest::Approx(std::log(280.0)).epsilon(1e-14));
  // r = 1: sum x ln x
  CHECK(klimesh_f(1, DVector{1, 1}).value == doctest::Approx(0.0));
  CHECK(klimesh_f(1, DVector{2, 4}).value ==
        doctest::Approx(2 * std::log(2.0) + 4 * std::log(4.0)).epsilon(1e-14));
  // 0 < r < 1: -ln sum x^r
  CHECK(klimesh_f(0.5, DVector{4, 9}).value ==
        doctest::Approx(-std::log(5.0)).epsilon(1e-14));
  // r = 0: -sum ln x
  CHECK(klimesh_f(0, DVector{2, 4}).value ==
        doctest::Approx(-std::log(8.0)).epsilon(1e-14));
  // r < 0: ln sum x^r
  CHECK(klimesh_f(-1, DVector{2, 4}).value ==
        doctest::Approx(std::log(0.75)).epsilon(1e-14));
  // zeros: +infinity for r <= 0, finite for r > 0
  CHECK(klimesh_f(-1, DVector{0, 1}).infinite);
  CHECK(klimesh_f(0, DVector{0, 1}).infinite);
  CHECK_FALSE(klimesh_f(0.5, DVector{0, 1}).infinite);
  CHECK(klimesh_f(2, DVector{0, 1}).value == doctest::Approx(0.0));
}

TEST_CASE("power_mean values") {
  CHECK(power_mean(2, kX) == doctest::Approx(std::sqrt(45.0)).epsilon(1e-14));
  CHECK(power_mean(1, kX) == doctest::Approx(6.0).epsilon(1e-14));
  // geometric mean at nu = 0: (3^9)^(1/6) = 3^1.5
  CHECK(power_mean(0, kX) == doctest::Approx(std::pow(3.0, 1.5)).epsilon(1e-13));
  CHECK(power_mean(-1, DVector{2, 4}) ==
        doctest::Approx(2.0 / 0.75).epsilon(1e-14));
  CHECK_THROWS_AS(power_mean(0, DVector{0, 1}), std::domain_error);
  CHECK_THROWS_AS(power_mean(-2, DVector{0, 1}), std::domain_error);
}

TEST_CASE("gap closed-form and permutation invariance") {
  CHECK(gap(2, kX, kY).value ==
        doctest::Approx(std::log(280.0 / 270.0)).epsilon(1e-13));
  DVector perm_y{10, 6, 2, 10, 6, 2};
  for (double r : {-3.0, -0.5, 0.0, 0.3, 1.0, 2.5, 7.0})
    CHECK(gap(r, kX, kY).value ==
          doctest::Approx(gap(r, kX, perm_y).value).epsilon(1e-12));
  // both infinite -> undefined
  CHECK_THROWS(gap(-1, DVector{0, 1}, DVector{0, 2}));
}

TEST_CASE("gap scale behaviour") {
  // For r outside [0,1] and within (0,1) the log power sums shift by r ln c
  // on both sides, so the gap is scale invariant.
  for (double r : {-2.0, -0.5, 0.5, 2.0, 5.0}) {
    const double g1 = gap(r, kX, kY).value;
    const double g2 = gap(r, rescale(kX, 1.0), rescale(kY, 1.0)).value;
    CHECK(g1 == doctest::Approx(g2).epsilon(1e-11));
  }
  // At r = 1 with equal sums the gap scales linearly.
  const double c = 3.5;
  CHECK(gap(1, rescale(kX, c * 36), rescale(kY, c * 36)).value ==
        doctest::Approx(c / 36.0 * 36.0 * gap(1, kX, kY).value * 1.0)
            .epsilon(1e-10));
}

TEST_CASE("normalized_gap sign agreement and continuity at 0 and 1") {
  for (double r : {-4.0, -1.0, -0.2, 0.2, 0.6, 1.5, 3.0}) {
    const double raw = gap(r, kX, kY).value;
    const double norm = normalized_gap(r, kX, kY);
    CHECK(std::signbit(raw) == std::signbit(norm));
  }
  const double at_zero = normalized_gap(0, kX, kY);
  const double at_one = normalized_gap(1, kX, kY);
  for (double eps : {1e-3, 1e-5, 1e-7}) {
    CHECK(normalized_gap(eps, kX, kY) ==
          doctest::Approx(at_zero).epsilon(1e-2));
    CHECK(normalized_gap(-eps, kX, kY) ==
          doctest::Approx(at_zero).epsilon(1e-2));
    CHECK(normalized_gap(1 + eps, kX, kY) ==
          doctest::Approx(at_one).epsilon(1e-2));
    CHECK(normalized_gap(1 - eps, kX, kY) ==
          doctest::Approx(at_one).epsilon(1e-2));
  }
  // Analytic boundary limits.
  const double d = 6;
  const double g0 = gap(0, kX, kY).value;  // sum ln x - sum ln y
  CHECK(at_zero == doctest::Approx(g0 / d).epsilon(1e-12));
  const double g1 = gap(1, kX, kY).value;
  CHECK(at_one == doctest::Approx(g1 / kX.sum()).epsilon(1e-12));
}

TEST_CASE("sorted-equal pairs have identically zero gap") {
  DVector a{1, 5, 2, 2};
  DVector b{2, 2, 5, 1};
  for (double r : {-3.0, -1.0, 0.0, 0.4, 1.0, 2.0, 6.0}) {
    CHECK(gap(r, a, b).value == doctest::Approx(0.0));
    CHECK(normalized_gap(r, a, b) == doctest::Approx(0.0));
  }
}

TEST_CASE("tail signs") {
  auto ts = tail_signs(kX, kY);
  CHECK(ts.pos == 1);  // y's largest run (10) beats x's (9)
  CHECK(ts.neg == 1);  // y's smallest run (2) undercuts x's (3)
  auto zero = tail_signs(DVector{1, 2, 3}, DVector{3, 1, 2});
  CHECK(zero.pos == 0);
  CHECK(zero.neg == 0);
  auto rev = tail_signs(kY, kX);
  CHECK(rev.pos == -1);
  CHECK(rev.neg == -1);
}

TEST_CASE("scan_strict_dominance on the canonical pairs") {
  auto holds = scan_strict_dominance(kX, kY);
  CHECK(holds.verdict == Outcome::Holds);
  CHECK(holds.min_gap > 1e-9);

  auto fails = scan_strict_dominance(kY, kX);
  CHECK(fails.verdict == Outcome::Fails);
  CHECK(fails.witness_r.has_value());

  // A majorized pair also strictly dominates when it is not a permutation
  // and the dominance is strict at every r.
  auto [bx, by] = bennett05_pair(2);
  auto m = scan_strict_dominance(bx, by);
  CHECK(m.verdict == Outcome::Holds);
}

TEST_CASE("scan respects zero components") {
  // y contains a zero -> f_r(y) = +inf for r <= 0, never a violation there.
  auto r = scan_strict_dominance(DVector{0.5, 0.5}, DVector{1.0, 0.0});
  CHECK(r.verdict == Outcome::Holds);
  // x must be strictly positive; vanishing components are rejected here and
  // handled by the relation layer.
  CHECK_THROWS_AS(
      scan_strict_dominance(DVector{1.0, 0.0}, DVector{0.6, 0.4}),
      std::invalid_argument);
}

TEST_CASE("turgut conditions on the canonical pairs") {
  auto ok = turgut_conditions(kX, kY);
  CHECK(ok[0]);
  CHECK(ok[1]);
  CHECK(ok[2]);
  auto bad = turgut_conditions(kY, kX);
  const bool all_bad = bad[0] && bad[1] && bad[2];
  CHECK_FALSE(all_bad);

  auto det = turgut_conditions_detailed(kX, kY);
  CHECK(det.entropy_strict);
  CHECK(det.sigma_x > det.sigma_y);
  CHECK(det.below_one == Outcome::Holds);
  CHECK(det.above_one == Outcome::Holds);
}

TEST_CASE("klimesh scan agrees with turgut conditions on random pairs") {
  std::mt19937_64 rng(2024);
  int agreements = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 2 + trial % 5;
    DVector x = random_positive(rng, d);
    DVector y = rescale(random_positive(rng, d), x.sum());
    if (sorted_equal(x, y)) continue;
    auto scan = scan_strict_dominance(x, y);
    if (scan.verdict == Outcome::Inconclusive) continue;
    auto det = turgut_conditions_detailed(x, y);
    if (det.below_one == Outcome::Inconclusive ||
        det.above_one == Outcome::Inconclusive)
      continue;
    const bool turgut_all = det.below_one == Outcome::Holds &&
                            det.above_one == Outcome::Holds &&
                            det.entropy_strict;
    const bool scan_holds = scan.verdict == Outcome::Holds;
    CHECK(scan_holds == turgut_all);
    ++agreements;
  }
  CHECK(agreements > 200);
}

TEST_CASE("scan_minima finds planted minima") {
  ScanConfig cfg;
  cfg.r_lo = -10;
  cfg.r_hi = 10;
  auto rep = detail::scan_minima(
      [](double r) { return (r - 2.5) * (r - 2.5) + 0.125; }, cfg.r_lo,
      cfg.r_hi, cfg);
  CHECK(rep.min_all == doctest::Approx(0.125).epsilon(1e-8));
  CHECK(rep.argmin_all == doctest::Approx(2.5).epsilon(1e-5));
  CHECK_FALSE(rep.any_nonpositive);

  auto neg = detail::scan_minima(
      [](double r) { return std::cos(r); }, cfg.r_lo, cfg.r_hi, cfg);
  CHECK(neg.any_nonpositive);
  CHECK(neg.min_all == doctest::Approx(-1.0).epsilon(1e-8));
}
