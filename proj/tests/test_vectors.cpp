#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "trumping/dvector.hpp"
#include "trumping/relations.hpp"

using namespace trumping;

TEST_CASE("sorting") {
  CHECK(sort_desc(DVector{1, 3, 2}).values() == std::vector<double>{3, 2, 1});
  CHECK(sort_desc(DVector{5, 5, 5}).values() == std::vector<double>{5, 5, 5});
  CHECK(sort_desc(DVector{2, 2, 6, 6, 10, 10}).values() ==
        std::vector<double>{10, 10, 6, 6, 2, 2});
  CHECK(sort_asc(DVector{1, 3, 2}).values() == std::vector<double>{1, 2, 3});
  CHECK(sort_asc(DVector{0, 0}).values() == std::vector<double>{0, 0});
  CHECK(sort_asc(DVector{9, 3, 9, 3, 9, 3}).values() ==
        std::vector<double>{3, 3, 3, 9, 9, 9});
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(DVector(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(DVector(std::vector<double>{1, -2}), std::invalid_argument);
  CHECK_THROWS_AS(DVector(std::vector<double>{1, std::nan("")}),
                  std::invalid_argument);
}

TEST_CASE("tensor product") {
  CHECK(tensor(DVector{1, 2}, DVector{3}).values() == std::vector<double>{3, 6});
  CHECK(tensor(DVector{1, 1}, DVector{1, 1}).values() ==
        std::vector<double>{1, 1, 1, 1});
  auto t = tensor(DVector{0.4, 0.1}, DVector{0.6, 0.4});
  CHECK(sort_desc(t).values()[0] == doctest::Approx(0.24).epsilon(1e-14));
  CHECK(t.sum() == doctest::Approx(0.5 * 1.0).epsilon(1e-13));
}

TEST_CASE("tensor associativity up to permutation and sum identity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.01, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(3), b(2), c(2);
    for (auto* v : {&a, &b, &c})
      for (double& e : *v) e = u(rng);
    DVector va(a), vb(b), vc(c);
    auto left = sort_asc(tensor(tensor(va, vb), vc)).values();
    auto right = sort_asc(tensor(va, tensor(vb, vc))).values();
    REQUIRE(left.size() == right.size());
    for (std::size_t i = 0; i < left.size(); ++i)
      CHECK(left[i] == doctest::Approx(right[i]).epsilon(1e-12));
    CHECK(tensor(va, vb).sum() ==
          doctest::Approx(va.sum() * vb.sum()).epsilon(1e-13));
  }
}

TEST_CASE("normalize_pair") {
  auto np = normalize_pair(DVector{1, 0, 2}, DVector{3, 0, 0});
  CHECK(np.x.values() == std::vector<double>{1, 2});
  CHECK(np.y.values() == std::vector<double>{3, 0});
  CHECK(np.zeros_deleted);

  auto np2 = normalize_pair(DVector{1, 2}, DVector{3, 0, 0});
  CHECK(np2.x.values() == std::vector<double>{1, 2, 0});
  CHECK(np2.y.values() == std::vector<double>{3, 0, 0});
  CHECK(np2.padded);

  auto np3 = normalize_pair(DVector{1, 2}, DVector{1, 2});
  CHECK(np3.x.values() == std::vector<double>{1, 2});
  CHECK(np3.y.values() == std::vector<double>{1, 2});
  CHECK_FALSE(np3.padded);
}

TEST_CASE("entropy") {
  CHECK(entropy(DVector{1, 0, 0}) == 0);
  CHECK(entropy(DVector{0.25, 0.25, 0.25, 0.25}) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-14));
  CHECK(entropy(DVector{0.5, 0.25, 0.25}) ==
        doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("entropy additive under normalized tensor, permutation invariant") {
  DVector x{0.5, 0.3, 0.2};
  DVector z{0.6, 0.4};
  CHECK(entropy(tensor(x, z)) ==
        doctest::Approx(entropy(x) * z.sum() + entropy(z) * x.sum()).epsilon(1e-13));
  CHECK(entropy(DVector{0.2, 0.5, 0.3}) == doctest::Approx(entropy(x)).epsilon(1e-15));
}

TEST_CASE("exact mode") {
  DVector v = DVector::from_integers({3, 1, 2});
  CHECK(v.exact());
  CHECK(v.integral());
  CHECK(v.exact_sum() == 6);
  CHECK(sort_desc(v).exact());
  DVector q(std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(q.exact_sum() == 1);
  CHECK_FALSE(q.integral());
}

TEST_CASE("normalize_pair preserves majorization verdicts with injected zeros") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t d = 2 + trial % 5;
    std::vector<double> a(d), b(d);
    for (double& e : a) e = u(rng) < 0.25 ? 0.0 : u(rng);
    for (double& e : b) e = u(rng) < 0.25 ? 0.0 : u(rng);
    if (a == b) continue;
    DVector x(a), y(b);
    auto np = normalize_pair(x, y);
    CHECK(majorize(x, y).holds == majorize(np.x, np.y).holds);
    CHECK(submajorize(x, y).holds == submajorize(np.x, np.y).holds);
    ++checked;
  }
  CHECK(checked > 900);
}
