#include "oracles.hpp"

#include "quiverlab/errors.hpp"
#include "quiverlab/hilbert.hpp"
#include "quiverlab/laurent.hpp"

#include <doctest.h>

using namespace quiverlab;
using quiverlab::testing::make_quiver;

namespace {

std::vector<Rational> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

FramedData framed(const Quiver& q, const DimVector& v, const FramingVector& d) {
  return frame(q, v, d, ParamPair::zero(q.size()));
}

Quiver jordan() { return make_quiver(IntMatrix{{1}}); }
Quiver point() { return make_quiver(IntMatrix{{0}}); }
Quiver cycle3() { return make_quiver(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}); }

}  // namespace

TEST_CASE("LaurentPoly arithmetic") {
  const int x[] = {1, 0}, y[] = {0, 1}, xi[] = {-1, 0}, zero[] = {0, 0};
  const LaurentPoly a = LaurentPoly::monomial(x) + LaurentPoly::monomial(y);
  const LaurentPoly b = LaurentPoly::monomial(xi, 2);
  const LaurentPoly ab = a * b;
  CHECK(ab.constant_term() == 2);
  const int yx[] = {-1, 1};
  CHECK(ab.coefficient(yx) == 2);
  CHECK((a - a).is_zero());
  LaurentPoly c(2);
  c.add_shifted(a, xi, 3);
  CHECK(c.coefficient(zero) == 3);
  c.add_shifted(c, x);
  CHECK(c.coefficient(x) == 3);
  const int far[] = {121, 0};
  CHECK_THROWS(LaurentPoly::monomial(far));
}

TEST_CASE("LaurentSeries geometric division inverts multiplication") {
  const int w[] = {1, -1};
  LaurentSeries s = LaurentSeries::one(2, 6);
  s.divide_binomial(w);
  s.multiply_binomial(w, 1);
  const auto ct = s.constant_terms();
  CHECK(ct[0] == 1);
  for (int k = 1; k <= 6; ++k) CHECK(s[k].is_zero());
  LaurentSeries t = LaurentSeries::one(1, 5);
  t.divide_t2();
  CHECK(t.constant_terms() == std::vector<Integer>{1, 0, 1, 0, 1, 0});
}

TEST_CASE("koszul_euler_series examples") {
  CHECK(koszul_euler_series(jordan(), {1}, 5).coefficients == ints({1, 2, 3, 4, 5, 6}));
  const auto adhm1 = framed(jordan(), {1}, FramingVector{1});
  CHECK(koszul_euler_series(adhm1.quiver, adhm1.dim, 8).coefficients == ints({1, 2, 3, 4, 5, 6, 7, 8, 9}));
  const auto sl2 = framed(point(), {1}, FramingVector{2});
  CHECK(koszul_euler_series(sl2.quiver, sl2.dim, 7).coefficients == ints({1, 0, 3, 0, 5, 0, 7, 0}));
  const auto adhm2 = framed(jordan(), {2}, FramingVector{1});
  const auto s = koszul_euler_series(adhm2.quiver, adhm2.dim, 4);
  CHECK(s.coefficients == ints({1, 2, 6, 10, 19}));
  CHECK(s == symmetric_power_series(2, 4));
}

TEST_CASE("matter_series examples") {
  CHECK(matter_series(jordan(), {1}, 4).coefficients == ints({1, 2, 3, 4, 5}));
  const auto adhm1 = framed(jordan(), {1}, FramingVector{1});
  CHECK(matter_series(adhm1.quiver, adhm1.dim, 5).coefficients == ints({1, 2, 4, 6, 9, 12}));
  const auto sl2 = framed(point(), {1}, FramingVector{2});
  CHECK(matter_series(sl2.quiver, sl2.dim, 0).coefficients == ints({1}));
}

TEST_CASE("abelian_invariant_oracle examples") {
  const auto adhm1 = framed(jordan(), {1}, FramingVector{1});
  CHECK(abelian_invariant_oracle(adhm1.quiver, adhm1.dim, 2).coefficients == ints({1, 2, 3}));
  const auto sl2 = framed(point(), {1}, FramingVector{2});
  CHECK(abelian_invariant_oracle(sl2.quiver, sl2.dim, 2).coefficients[2] == 3);
  const auto c = framed(cycle3(), {1, 1, 1}, FramingVector{1, 0, 0});
  CHECK(abelian_invariant_oracle(c.quiver, c.dim, 0).coefficients == ints({1}));
  CHECK_THROWS_AS(abelian_invariant_oracle(jordan(), {2}, 2), ValidationError);
}

TEST_CASE("symmetric_power_series") {
  CHECK(symmetric_power_series(1, 3).coefficients == ints({1, 2, 3, 4}));
  CHECK(symmetric_power_series(2, 4).coefficients == ints({1, 2, 6, 10, 19}));
  CHECK(symmetric_power_series(3, 0).coefficients == ints({1}));
  CHECK(symmetric_power_series(2, 6).integral());
}

TEST_CASE("hilbert input validation") {
  CHECK_THROWS_AS(koszul_euler_series(jordan(), {1}, -1), ValidationError);
  CHECK_THROWS_AS(koszul_euler_series(jordan(), {0}, 2), ValidationError);
  CHECK_THROWS_AS(koszul_euler_series(jordan(), {6}, 2), CapacityError);
  CHECK_THROWS_AS(koszul_euler_series(jordan(), {1}, 11), CapacityError);
}

TEST_CASE("pruning leaves constant terms unchanged") {
  HilbertOptions raw;
  raw.prune = false;
  const auto adhm2 = framed(jordan(), {2}, FramingVector{1});
  CHECK(koszul_euler_series(adhm2.quiver, adhm2.dim, 4) == koszul_euler_series(adhm2.quiver, adhm2.dim, 4, raw));
  const auto c = framed(cycle3(), {1, 1, 1}, FramingVector{1, 0, 0});
  CHECK(koszul_euler_series(c.quiver, c.dim, 4) == koszul_euler_series(c.quiver, c.dim, 4, raw));
  CHECK(matter_series(c.quiver, c.dim, 4) == matter_series(c.quiver, c.dim, 4, raw));
  const Quiver k2 = make_quiver(IntMatrix{{0, 2}, {0, 0}});
  CHECK(koszul_euler_series(k2, {1, 2}, 4) == koszul_euler_series(k2, {1, 2}, 4, raw));
}

TEST_CASE("orientation independence") {
  const auto c = framed(cycle3(), {1, 1, 1}, FramingVector{1, 0, 0});
  CHECK(koszul_euler_series(c.quiver, c.dim, 5) == koszul_euler_series(c.quiver.reversed(), c.dim, 5));
  const Quiver q = make_quiver(IntMatrix{{1, 1}, {0, 0}});
  CHECK(koszul_euler_series(q, {2, 1}, 4) == koszul_euler_series(q.reversed(), {2, 1}, 4));
}

TEST_CASE("flat abelian fixtures agree with the oracle and are nonnegative") {
  const std::vector<FramedData> fixtures{framed(jordan(), {1}, FramingVector{1}),
                                         framed(point(), {1}, FramingVector{2}),
                                         framed(cycle3(), {1, 1, 1}, FramingVector{1, 0, 0})};
  for (const auto& f : fixtures) {
    const auto k = koszul_euler_series(f.quiver, f.dim, 6);
    CHECK(k == abelian_invariant_oracle(f.quiver, f.dim, 6));
    for (const auto& c : k.coefficients) CHECK(c >= 0);
  }
}

TEST_CASE("framed Jordan v=3 matches the third symmetric power") {
  const auto f = framed(jordan(), {3}, FramingVector{1});
  CHECK(koszul_euler_series(f.quiver, f.dim, 8) == symmetric_power_series(3, 8));
}
