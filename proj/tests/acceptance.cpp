// Acceptance gate: one test case per shipped criterion, each printing a
// single PASS/FAIL line with its runtime. Tolerances are pinned in-line.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "trumping/catalysis.hpp"
#include "trumping/families.hpp"
#include "trumping/geometry.hpp"
#include "trumping/relations.hpp"

using namespace trumping;

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int criterion, const char* what, bool pass, double ms) {
  std::printf("[%s] criterion %d: %s (%.1f ms)\n", pass ? "PASS" : "FAIL",
              criterion, what, ms);
  std::fflush(stdout);
}

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

DVector smear(std::mt19937_64& rng, const DVector& y, int moves) {
  std::vector<double> v = y.desc();
  std::uniform_int_distribution<std::size_t> pick(0, v.size() - 2);
  std::uniform_real_distribution<double> tdist(0.0, 0.5);
  for (int m = 0; m < moves; ++m) {
    const std::size_t i = pick(rng);
    const double t = tdist(rng);
    const double a = v[i], b = v[i + 1];
    v[i] = (1 - t) * a + t * b;
    v[i + 1] = t * a + (1 - t) * b;
    std::sort(v.begin(), v.end(), std::greater<>());
  }
  return DVector(v);
}

}  // namespace

TEST_CASE("criterion 1: generator tuples match the published integer pairs") {
  Timer timer;
  BennettPair b2 = bennett_pair(2);
  bool pass = sort_asc(b2.x).values() == std::vector<double>{3, 3, 3, 9, 9, 9} &&
              sort_asc(b2.y).values() == std::vector<double>{2, 2, 6, 6, 10, 10};
  auto [nx, ny] = bennett05_pair(2);
  pass = pass &&
         nx.values() == std::vector<double>{7, 9, 11, 21, 27, 33} &&
         ny.values() == std::vector<double>{5, 7, 15, 21, 25, 35};
  pass = pass && b2.x.exact() && nx.exact();
  const double ms = timer.ms();
  pass = pass && ms < 1.0;
  report(1, "integer tuple reproduction, exact equality, < 1 ms", pass, ms);
  CHECK(pass);
}

TEST_CASE("criterion 2: exact majorization verdicts on the two families") {
  Timer timer;
  BennettPair b2 = bennett_pair(2);
  auto bad = majorize(b2.x, b2.y);
  bool pass = !bad.holds && bad.exact && bad.first_violation_k &&
              *bad.first_violation_k == 3;
  // the ascending flip is 9 < 10 at k = 3
  auto flip = flip_pattern(b2);
  pass = pass && flip.flip_index && *flip.flip_index == 3;
  auto [nx, ny] = bennett05_pair(2);
  auto good = majorize(nx, ny);
  pass = pass && good.holds && good.exact;
  const double ms = timer.ms();
  pass = pass && ms < 1.0;
  report(2, "majorize fails at k=3 on one family, holds on the other, exact, < 1 ms",
         pass, ms);
  CHECK(pass);
}

TEST_CASE("criterion 3: trumping and integer certificates for n = 2..6") {
  Timer timer;
  bool pass = true;
  for (std::size_t n = 2; n <= 6; ++n) {
    BennettPair b = bennett_pair(n);
    auto v = trumped(b.x, b.y);
    pass = pass && v.outcome == Outcome::Holds && v.min_gap &&
           *v.min_gap > 1e-9;
    auto cert = integer_trump_certificate(b.x, b.y);
    pass = pass && cert.verdict.outcome == Outcome::Holds &&
           cert.products_differ;
    // parity: exactly one of the two products is even, so they differ
    pass = pass && (cert.prod_x % 2 == 0) != (cert.prod_y % 2 == 0);
  }
  const double ms = timer.ms();
  pass = pass && ms < 10'000.0;
  report(3, "trumped holds with margin > 1e-9 and exact certificates, n = 2..6, < 10 s",
         pass, ms);
  CHECK(pass);
}

TEST_CASE("criterion 4: criterion equivalences on 1000 random pairs") {
  Timer timer;
  std::mt19937_64 rng(20240817);
  int disagreements_a = 0, disagreements_b = 0, evaluated = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 2 + trial % 5;  // d <= 6
    DVector x = random_positive(rng, d);
    DVector y = rescale(random_positive(rng, d), x.sum());
    if (sorted_equal(x, y)) continue;

    auto scan = scan_strict_dominance(x, y);
    auto det = turgut_conditions_detailed(x, y);
    const bool turgut_conclusive = det.below_one != Outcome::Inconclusive &&
                                   det.above_one != Outcome::Inconclusive;
    if (scan.verdict != Outcome::Inconclusive && turgut_conclusive) {
      const bool klimesh = scan.verdict == Outcome::Holds;
      const bool turgut = det.below_one == Outcome::Holds &&
                          det.above_one == Outcome::Holds && det.entropy_strict;
      if (klimesh != turgut) ++disagreements_a;
    }

    auto direct = power_majorize(x, y);
    auto via = power_majorize_via_klimesh(x, y);
    if (direct.verdict != Outcome::Inconclusive &&
        via.verdict != Outcome::Inconclusive) {
      if (direct.verdict != via.verdict) ++disagreements_b;
    }
    ++evaluated;
  }
  const double ms = timer.ms();
  bool pass = disagreements_a == 0 && disagreements_b == 0 &&
              evaluated > 950 && ms < 60'000.0;
  report(4, "0 disagreements: scan vs power-mean conditions, direct vs indirect power route, < 60 s",
         pass, ms);
  CHECK(pass);
}

TEST_CASE("criterion 5: low-dimension collapse to majorization") {
  Timer timer;
  std::mt19937_64 rng(5150);
  int disagreements = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 2 + trial % 2;  // d in {2, 3}
    DVector x = random_positive(rng, d);
    DVector y = rescale(random_positive(rng, d), x.sum());
    const bool m = majorize(x, y).holds;
    auto v = trumped(x, y);
    if (v.outcome == Outcome::Inconclusive || m != v.holds()) ++disagreements;
  }
  const double ms = timer.ms();
  bool pass = disagreements == 0 && ms < 30'000.0;
  report(5, "trumped = majorize on 1000 pairs with d in {2,3}, 0 disagreements, < 30 s",
         pass, ms);
  CHECK(pass);
}

TEST_CASE("criterion 6: catalyst search success rate and prefilter") {
  Timer timer;
  const DVector x{0.4, 0.4, 0.1, 0.1};
  const DVector y{0.5, 0.25, 0.25, 0.0};
  int successes = 0;
  bool runs_in_budget = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Timer run_timer;
    SearchConfig cfg;
    cfg.max_dim = 4;
    cfg.restarts_per_dim = 64;
    cfg.seed = seed;
    auto rep = search_catalyst(x, y, cfg);
    if (run_timer.ms() >= 10'000.0) runs_in_budget = false;
    if (rep.found && rep.catalyst->dim() == 2 &&
        check_catalyst_exact(x, y, *rep.catalyst))
      ++successes;
  }
  auto blocked = search_catalyst(DVector{1, 3}, DVector{2, 2});
  const double ms = timer.ms();
  bool pass = successes >= 18 && runs_in_budget && !blocked.found &&
              blocked.prefilter.fails();
  report(6, "dimension-2 catalyst found in >= 18/20 seeded runs, exact recheck, prefilter rejection",
         pass, ms);
  CHECK(pass);
}

TEST_CASE("criterion 7: geometry round trips") {
  Timer timer;
  std::mt19937_64 rng(777);
  bool pass = true;

  // 200 random majorized pairs reconstruct through rado_decompose
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 5;  // d <= 6
    DVector y = random_positive(rng, d);
    DVector x = smear(rng, y, 1 + trial % 4);
    auto dec = rado_decompose(x, y);
    double wsum = 0;
    for (const auto& t : dec.terms) wsum += t.weight;
    pass = pass && dec.reconstruction_error < 1e-12 &&
           std::abs(wsum - 1.0) < 1e-12;
  }

  // extreme-point criteria agree on 200 sampled points outside the margins
  int classified = 0;
  while (classified < 200) {
    const std::size_t d = 3 + classified % 3;
    DVector y = random_positive(rng, d);
    DVector x = smear(rng, y, 2);
    if (sorted_equal(x, y)) continue;
    if (in_P(x, y).outcome != Outcome::Holds) continue;
    auto rep = classify_extreme_point(x, y);
    if (rep.trumped_by_y.outcome == Outcome::Inconclusive) continue;
    pass = pass && rep.criteria_agree;
    ++classified;
  }

  // interior-path points land in T(y); Inconclusive scans are re-drawn,
  // a Fails verdict is a failure of the criterion
  std::uniform_real_distribution<double> tdist(0.1, 0.9);
  int landed = 0, attempts = 0;
  while (landed < 200 && attempts < 2000) {
    ++attempts;
    DVector y = random_positive(rng, 4);
    DVector base = smear(rng, y, 3);
    if (sorted_equal(base, y)) continue;
    DVector p = interior_path(base, {1, 2, 3, 0}, tdist(rng));
    auto v = in_T(p, y);
    if (v.outcome == Outcome::Inconclusive) continue;
    pass = pass && v.holds();
    ++landed;
  }
  pass = pass && landed == 200;

  const double ms = timer.ms();
  pass = pass && ms < 120'000.0;
  report(7, "rado reconstruction < 1e-12, extreme criteria agree, interior paths in T(y), < 120 s",
         pass, ms);
  CHECK(pass);
}

TEST_CASE("criterion 8: midpoint-sum monotonicity and its closed form") {
  Timer timer;
  bool pass = true;
  for (double p : {-2.0, -1.0, -0.5, 0.25, 0.5, 0.75, 2.0, 3.0, 5.0})
    pass = pass && midpoint_monotone_check(p, 50, 0, 2);  // margin 1e-13 inside
  for (double p : {-2.0, -1.0, -0.5, 0.25, 0.5, 0.75, 2.0, 3.0, 5.0}) {
    for (std::size_t n = 1; n <= 20; ++n) {
      double s = 0;
      for (std::size_t k = 1; k <= n; ++k)
        s += std::pow(static_cast<double>(2 * k - 1), p);
      s /= std::pow(static_cast<double>(n), p + 1);
      pass = pass && std::abs(midpoint_sum(p, n, 0, 2) - s) <=
                         1e-13 * std::max(1.0, std::abs(s));
    }
  }
  const double ms = timer.ms();
  pass = pass && ms < 5'000.0;
  report(8, "strict monotone direction for 9 exponents, closed-form match to 1e-13, < 5 s",
         pass, ms);
  CHECK(pass);
}

TEST_CASE("criterion 9: interval-inequality verifier on 100 random convex cases") {
  Timer timer;
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> u(0.1, 1.5);
  bool pass = true;
  for (int trial = 0; trial < 100; ++trial) {
    QuadratureCase c;
    c.a = u(rng);
    c.b = c.a + u(rng);
    c.c = c.b + u(rng);
    c.d = c.c + (c.b - c.a) + u(rng);
    c.p = u(rng);
    c.r = c.p + u(rng);
    c.q = (c.p * (c.b - c.a) + c.r * (c.d - c.c)) / (c.c - c.b);
    const double e = 1.0 + u(rng);
    const double lin = u(rng);
    c.g = [e, lin](double t) { return std::pow(t, e) + lin * t; };
    pass = pass && lemma_interval_inequality(c);
  }
  const double ms = timer.ms();
  pass = pass && ms < 10'000.0;
  report(9, "quadrature verifier true on 100 convex polynomial cases, < 10 s",
         pass, ms);
  CHECK(pass);
}
