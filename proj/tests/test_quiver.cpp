#include "oracles.hpp"

#include "quiverlab/errors.hpp"
#include "quiverlab/numeric.hpp"
#include "quiverlab/quiver.hpp"

#include <doctest.h>

using namespace quiverlab;
using quiverlab::testing::make_quiver;
using quiverlab::testing::random_quiver;

namespace {

Quiver jordan() { return Quiver::build({"1"}, {{"1", "1"}}); }
Quiver a2() { return Quiver::build({"1", "2"}, {{"1", "2"}}); }
Quiver kronecker(int k) {
  IntMatrix a(2);
  a(0, 1) = k;
  return make_quiver(a);
}
Quiver cycle3() { return Quiver::build({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"3", "1"}}); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-1/4") == Rational(-1, 4));
  CHECK(parse_rational("+6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/"), ValidationError);
  CHECK_THROWS_AS(parse_rational("a"), ValidationError);
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(factorial(5) == 120);
}

TEST_CASE("build_quiver") {
  CHECK(jordan().adjacency() == IntMatrix{{1}});
  const Quiver k = Quiver::build({"1", "2"}, {{"1", "2"}, {"1", "2"}, {"1", "2"}});
  CHECK(k.adjacency() == IntMatrix{{0, 3}, {0, 0}});
  CHECK_THROWS_AS(Quiver::build({"1", "2"}, {{"1", "3"}}), ValidationError);
  CHECK_THROWS_AS(Quiver::build({"1", "1"}, {}), ValidationError);
  CHECK(k.index_of("2") == 1u);
  CHECK_FALSE(k.index_of("7"));
}

TEST_CASE("cartan_matrix") {
  CHECK(cartan_matrix(jordan()) == IntMatrix{{0}});
  CHECK(cartan_matrix(a2()) == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix(cycle3()) == IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
}

TEST_CASE("p_fn") {
  CHECK(p_fn(jordan(), {3}) == 1);
  CHECK(p_fn(a2(), {1, 1}) == 0);
  CHECK(p_fn(kronecker(3), {1, 2}) == 2);
  CHECK_THROWS_AS(p_fn(a2(), {1}), ValidationError);
}

TEST_CASE("pairings") {
  CHECK(cartan_pairing(a2(), {1, 1}, {1, 0}) == 1);
  CHECK(adjacency_pairing(a2(), {1, 0}, {0, 1}) == 1);
  CHECK(adjacency_pairing(kronecker(3), {1, 1}, {0, 1}) == 3);
}

TEST_CASE("frame") {
  const Quiver a1 = Quiver::build({"1"}, {});
  ParamPair pp{{Rational(5)}, {Rational(1)}};
  const FramedData f = frame(a1, {2}, FramingVector{3}, pp);
  CHECK(f.quiver.labels() == std::vector<std::string>{"1", "inf"});
  CHECK(f.quiver.arrows(1, 0) == 3);
  CHECK(f.dim == DimVector{2, 1});
  CHECK(f.params.lambda == std::vector<Rational>{5, -10});
  CHECK(f.params.theta == std::vector<Rational>{1, -2});

  const FramedData j = frame(jordan(), {1}, FramingVector{1}, ParamPair::zero(1));
  CHECK(j.quiver.adjacency() == IntMatrix{{1, 0}, {1, 0}});
  CHECK(j.dim == DimVector{1, 1});

  CHECK_THROWS_AS(frame(jordan(), {1}, FramingVector{0}, ParamPair::zero(1)), ValidationError);

  const Quiver clash = Quiver::build({"inf"}, {});
  CHECK(frame(clash, {1}, FramingVector{1}, ParamPair::zero(1)).quiver.labels()[1] == "inf'");
}

TEST_CASE("support_components") {
  CHECK(support_components(cycle3(), {1, 1, 1}).size() == 1);
  const Quiver a3 = Quiver::build({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  const auto comps = support_components(a3, {1, 0, 1});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<std::size_t>{0});
  CHECK(comps[1] == std::vector<std::size_t>{2});
  CHECK(support_components(a3, {0, 0, 0}).empty());
}

TEST_CASE("property: cartan symmetry, p on units, expanded form, framing inverse") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> nv(1, 4), dv(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(nv(rng));
    const Quiver q = random_quiver(rng, n, 2);
    CHECK(cartan_matrix(q) == cartan_matrix(q.reversed()));
    CHECK(cartan_matrix(q).is_symmetric());
    for (std::size_t i = 0; i < n; ++i) CHECK(p_fn(q, DimVector::unit(n, i)) == q.loops(i));
    DimVector v(n);
    FramingVector d(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = dv(rng);
      d[i] = dv(rng);
    }
    CHECK(p_fn(q, v) == quiverlab::testing::p_expanded(q, v));
    if (d.is_zero()) continue;
    ParamPair pp{quiverlab::testing::random_annihilated(rng, v), quiverlab::testing::random_annihilated(rng, v)};
    const FramedData f = frame(q, v, d, pp);
    std::vector<std::size_t> keep(n);
    for (std::size_t i = 0; i < n; ++i) keep[i] = i;
    CHECK(f.quiver.induced(keep) == q);
    for (std::size_t i = 0; i < n; ++i) CHECK(f.dim[i] == v[i]);
    CHECK(dot(f.params.lambda, f.dim) == 0);
    CHECK(dot(f.params.theta, f.dim) == 0);
  }
}
