#include "helpers.hpp"

#include "hodgekit/errors.hpp"

#include <doctest.h>

using namespace hodgekit;
using testing_support::built;
using testing_support::small_entry;

namespace {

Vector scaled(Vector v, const GaussianRational& s) {
  for (auto& x : v) x *= s;
  return v;
}

}  // namespace

TEST_CASE("central field on Iwasawa: L_X vanishes identically") {
  BuiltModel m = built("iwasawa");
  const Contraction* c = m.find_contraction("central");
  REQUIRE(c);
  CHECK(check_contraction(*c).empty());
  LieDerivative lie = lie_derivative(m.complex, *c);
  CHECK_FALSE(lie.mixed);
  CHECK(lie.result.is_zero());
  CHECK(induced_on_cohomology(m.complex, lie.result).trivial());
}

TEST_CASE("dual of phi1 on Iwasawa") {
  BuiltModel m = built("iwasawa");
  const Contraction* c = m.find_contraction("phi1-dual");
  REQUIRE(c);
  const auto& space = m.complex.space;
  LieDerivative lie = lie_derivative(m.complex, *c);
  CHECK_FALSE(lie.mixed);

  auto l3 = apply(lie.result, {1, 0}, space.unit("phi3"));
  CHECK(l3.at({1, 0}) == scaled(space.unit("phi2"), -1));
  auto l3bar = apply(lie.result, {0, 1}, space.unit("~phi3"));
  CHECK(l3bar.at({0, 1}) == scaled(space.unit("~phi2"), -1));

  Operator lj = lie_derivative_j(m.complex, *c);
  auto j3 = apply(lj, {1, 0}, space.unit("phi3"));
  CHECK(j3.at({1, 0}) == scaled(space.unit("phi2"), GaussianRational(0, -1)));
  CHECK(lj == lie_derivative_j_cartan(m.complex, *c));

  CHECK(holomorphy_check(m.complex, lie.result).ok());
  ActionVerdict v = induced_on_cohomology(m.complex, lie.result);
  CHECK_FALSE(v.trivial());
  const FlavorAction& dol = v.get(Flavor::dolbeault);
  REQUIRE(dol.applicable);
  CHECK_FALSE(dol.is_trivial);
  const ExactMatrix& on10 = dol.induced.at("1,0");
  CHECK(rank(on10) == 1);
  CHECK((on10 * on10).is_zero());
}

TEST_CASE("Cartan identities on every catalog contraction") {
  for (const auto& spec : catalog()) {
    BuiltModel m = build_model(spec);
    for (const auto& c : m.contractions) {
      CAPTURE(spec.name);
      CAPTURE(c.name);
      LieDerivative lie = lie_derivative(m.complex, c);
      CHECK(op_commutator(lie.full, m.complex.d()).is_zero());
      CHECK(op_commutator(lie.full, c.total()).is_zero());
      CHECK(lie_derivative_j(m.complex, c) == lie_derivative_j_cartan(m.complex, c));
    }
  }
}

TEST_CASE("Lee field on the Hopf surface acts trivially") {
  BuiltModel m = built("hopf2");
  const Contraction* c = m.find_contraction("lee");
  REQUIRE(c);
  LieDerivative lie = lie_derivative(m.complex, *c);
  CHECK(induced_on_cohomology(m.complex, lie.result).trivial());
}

TEST_CASE("a non-holomorphic field is reported") {
  // L w2 = ~w1 - w1 has a (0,1) component.
  BuiltModel m = built("kodaira_thurston");
  Contraction c = make_contraction(*m.exterior, "w1-dual", {{"w1", GaussianRational(1)}});
  LieDerivative lie = lie_derivative(m.complex, c);
  HolomorphyReport h = holomorphy_check(m.complex, lie.result);
  CHECK(lie.mixed);
  CHECK_FALSE(h.ok());
  CHECK_FALSE(lie.warnings.empty());
  ActionVerdict v = induced_on_cohomology(m.complex, lie.result);
  CHECK_FALSE(v.get(Flavor::dolbeault).applicable);
  CHECK(v.get(Flavor::derham).applicable);
}

TEST_CASE("contraction errors") {
  BuiltModel m = built("iwasawa");
  CHECK_THROWS_AS(make_contraction(*m.exterior, "x", {{"phi9", GaussianRational(1)}}), InvalidModel);
}

TEST_CASE("homotopy coefficients") {
  SUBCASE("a = b = 1") {
    HomotopySolution s = homotopy_coefficients(1, 1);
    CHECK(s.y1 == GaussianRational::fraction(1, 2));
    CHECK(s.y2 == GaussianRational::fraction(1, 2));
    CHECK(s.field == "rational");
    Operator delta = delta_operator(built("iwasawa").complex, 1, 1);
    CHECK(op_compose(delta, delta).is_zero());
  }
  SUBCASE("degenerate systems are rejected") {
    CHECK_THROWS_AS(homotopy_coefficients(0, 0), DegenerateSystem);
    CHECK_THROWS_AS(homotopy_coefficients(GaussianRational::i(), 1), DegenerateSystem);
  }
  SUBCASE("random coefficients solve the system") {
    std::mt19937_64 rng(101);
    int rejected = 0;
    for (int trial = 0; trial < 100; ++trial) {
      GaussianRational a = small_entry(rng, 2), b = small_entry(rng, 2);
      if (trial % 10 == 0) b = a * GaussianRational::i();  // a^2 + b^2 = 0
      if (a * a + b * b == GaussianRational(0)) {
        CHECK_THROWS_AS(homotopy_coefficients(a, b), DegenerateSystem);
        ++rejected;
        continue;
      }
      HomotopySolution s = homotopy_coefficients(a, b);
      CHECK(a * s.y2 - b * s.y1 == GaussianRational(0));
      CHECK(a * s.y1 + b * s.y2 == GaussianRational(1));
    }
    CHECK(rejected >= 10);
  }
  SUBCASE("purely imaginary solutions are classified") {
    HomotopySolution s = homotopy_coefficients(GaussianRational(0, 2), 0);
    CHECK(s.y1 == GaussianRational(mpq_class(0), mpq_class(-1, 2)));
    CHECK(s.field == "imaginary");
  }
}
