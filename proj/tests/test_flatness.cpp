#include "oracles.hpp"

#include "quiverlab/errors.hpp"
#include "quiverlab/flatness.hpp"

#include <doctest.h>

using namespace quiverlab;
using quiverlab::testing::make_quiver;

namespace {

Quiver kronecker(int k) {
  IntMatrix a(2);
  a(0, 1) = k;
  return make_quiver(a);
}
Quiver jordan() { return make_quiver(IntMatrix{{1}}); }
Quiver cycle3() { return make_quiver(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}); }

ParamPair params(std::vector<Rational> l, std::vector<Rational> t) { return {std::move(l), std::move(t)}; }

}  // namespace

TEST_CASE("flatness_certificate examples") {
  const auto k3 = flatness_certificate(kronecker(3), {1, 2});
  CHECK(k3.flat);
  CHECK(k3.p_value == 2);
  CHECK_FALSE(k3.witness);

  const auto k2 = flatness_certificate(kronecker(2), {1, 2});
  CHECK_FALSE(k2.flat);
  CHECK(k2.p_value == 0);
  CHECK(k2.best_sum == 1);
  REQUIRE(k2.witness);
  CHECK(*k2.witness == std::vector<DimVector>{{1, 1}, {0, 1}});

  const auto j = flatness_certificate(jordan(), {2});
  CHECK_FALSE(j.flat);
  CHECK(j.p_value == 1);
  CHECK(j.best_sum == 2);
  CHECK(*j.witness == std::vector<DimVector>{{1}, {1}});

  const auto c = flatness_certificate(cycle3(), {1, 1, 1});
  CHECK(c.flat);
  CHECK(c.best_sum == 1);
}

TEST_CASE("flatness errors") {
  CHECK_THROWS_AS(flatness_certificate(jordan(), {0}), ValidationError);
  FlatnessOptions tight;
  tight.budget = 10;
  CHECK_THROWS_AS(flatness_certificate(kronecker(1), {3, 3}, tight), CapacityError);
  CHECK_NOTHROW(flatness_certificate(kronecker(1), {2, 2}, tight));
}

TEST_CASE("threaded table fill matches the serial one") {
  const Quiver q = make_quiver(IntMatrix{{1, 2, 0}, {0, 0, 1}, {1, 0, 0}});
  FlatnessOptions serial, parallel;
  serial.threads = 1;
  parallel.threads = 4;
  for (const DimVector v : {DimVector{4, 3, 5}, DimVector{6, 2, 2}, DimVector{3, 3, 3}}) {
    const auto a = flatness_certificate(q, v, serial), b = flatness_certificate(q, v, parallel);
    CHECK(a.best_sum == b.best_sum);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("sigma_condition") {
  CHECK(sigma_condition(kronecker(2), {1, 1}, ParamPair::zero(2)));
  CHECK_FALSE(sigma_condition(kronecker(1), {1, 1}, ParamPair::zero(2)));
  CHECK(sigma_condition(kronecker(1), {1, 1}, params({0, 0}, {1, -1})));
}

TEST_CASE("sigma versus flatness on the two-vertex family") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 9; ++k) {
      const DimVector v{1, n};
      const bool sigma = sigma_condition(kronecker(k), v, ParamPair::zero(2));
      const auto rep = flatness_certificate(kronecker(k), v);
      const auto naive = quiverlab::testing::naive_decompositions(kronecker(k), v);
      const bool strict = naive.maximizers.empty() && rep.flat;
      CHECK(sigma == strict);
      if (sigma) CHECK(rep.flat);
    }
}

TEST_CASE("is_generic") {
  CHECK(is_generic({1, 1}, params({0, 0}, {1, -1})).generic);
  const auto g = is_generic({1, 1}, ParamPair::zero(2));
  CHECK_FALSE(g.generic);
  CHECK(*g.offender == DimVector{1, 0});
  CHECK(is_generic({2}, ParamPair::zero(1)).generic);
}

TEST_CASE("is_generic is symmetric in lambda and theta") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> nv(1, 3), dv(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    DimVector v(static_cast<std::size_t>(nv(rng)));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = dv(rng);
    if (v.is_zero()) continue;
    const auto x = quiverlab::testing::random_annihilated(rng, v);
    const auto y = quiverlab::testing::random_annihilated(rng, v);
    CHECK(is_generic(v, {x, y}).generic == is_generic(v, {y, x}).generic);
  }
}

TEST_CASE("is_indivisible and expected_dimension") {
  CHECK(is_indivisible({1, 2}));
  CHECK_FALSE(is_indivisible({2, 4}));
  CHECK_FALSE(is_indivisible({3}));
  CHECK_THROWS_AS(is_indivisible({0, 0}), ValidationError);
  CHECK(expected_dimension(make_quiver(IntMatrix{{1, 0}, {1, 0}}), {1, 1}) == 2);
  CHECK(expected_dimension(kronecker(3), {1, 2}) == 4);
  CHECK(expected_dimension(make_quiver(IntMatrix{{0, 1}, {0, 0}}), {1, 1}) == 0);
}

TEST_CASE("property: DP agrees with naive enumeration; witnesses check out") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> nv(1, 3), dv(0, 3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(nv(rng));
    const Quiver q = quiverlab::testing::random_quiver(rng, n, 2);
    DimVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = dv(rng);
    if (v.is_zero() || v.total() > 7) continue;
    FlatnessOptions opts;
    opts.all_witnesses = true;
    const auto rep = flatness_certificate(q, v, opts);
    const auto naive = quiverlab::testing::naive_decompositions(q, v);
    CHECK(rep.best_sum == naive.best);
    CHECK(rep.flat == (naive.best == p_fn(q, v)));
    CHECK(rep.maximizing_count == naive.maximizers.size());
    if (!rep.flat) {
      REQUIRE(rep.witness);
      DimVector sum(n);
      std::int64_t ps = 0;
      for (const auto& u : *rep.witness) {
        CHECK_FALSE(u.is_zero());
        sum = sum + u;
        ps += p_fn(q, u);
      }
      CHECK(sum == v);
      CHECK(ps == rep.best_sum);
      CHECK(ps > rep.p_value);
    }
  }
}
