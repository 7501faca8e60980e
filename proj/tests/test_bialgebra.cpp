#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trimod/bialgebra.hpp"
#include "trimod/subspace.hpp"

using namespace trimod;

namespace {

const Field Q = Field::rationals();

BialgebraFD z2() { return monoid_bialgebra(Q, {{0, 1}, {1, 0}}, {"e", "g"}); }
BialgebraFD ks() { return monoid_bialgebra(Q, {{0, 1}, {1, 1}}, {"e", "s"}); }

LinearMap basis_vector(std::size_t n, std::size_t i) {
  LinearMap v(Q, n, 1);
  v.set(i, 0, Rational(1));
  return v;
}

}  // namespace

TEST_CASE("validator names exactly the bialgebra axioms") {
  Report r = validate_bialgebra(trivial_bialgebra(Q));
  std::vector<std::string> names;
  for (const auto& c : r.checks) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"assoc", "unit-left", "unit-right", "coassoc", "counit-left",
                                          "counit-right", "comul-multiplicative", "counit-multiplicative",
                                          "comul-unit", "counit-unit"});
  CHECK(r.ok());
  CHECK(validate_bialgebra(z2()).ok());
  CHECK(validate_bialgebra(ks()).ok());
  CHECK(validate_bialgebra(sweedler_h4(Q)).ok());
  CHECK(validate_bialgebra(sweedler_h4(Field::prime(3))).ok());
}

TEST_CASE("perturbed comultiplication is caught") {
  BialgebraFD b = z2();
  b.comul.add_to(0, 0, Rational(1));
  Report r = validate_bialgebra(b);
  CHECK_FALSE(r.ok());
  bool coalgebra_failure = !r.find("coassoc")->passed || !r.find("counit-left")->passed ||
                           !r.find("counit-right")->passed;
  CHECK(coalgebra_failure);
  CHECK_FALSE(r.find("counit-left")->witness.empty());
}

TEST_CASE("shape mismatch throws") {
  BialgebraFD b = z2();
  b.mul = LinearMap(Q, 2, 3);
  CHECK_THROWS_AS(validate_bialgebra(b), Error);
}

TEST_CASE("convolution") {
  BialgebraFD b = z2();
  LinearMap eta_eps = b.unit_counit();
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> v(-4, 4);
  LinearMap g(Q, 2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) g.set(i, j, Rational(v(rng)));
  }
  CHECK(convolution(eta_eps, g, b) == g);
  CHECK(convolution(g, eta_eps, b) == g);

  // id * id sends each grouplike z to z^2.
  LinearMap sq = convolution(b.id(), b.id(), b);
  CHECK(sq * basis_vector(2, 0) == basis_vector(2, 0));
  CHECK(sq * basis_vector(2, 1) == basis_vector(2, 0));

  BialgebraFD s = ks();
  LinearMap f1(Q, 2, 2), f2(Q, 2, 2), f3(Q, 2, 2);
  for (auto* f : {&f1, &f2, &f3}) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) f->set(i, j, Rational(v(rng)));
    }
  }
  CHECK(convolution(convolution(f1, f2, s), f3, s) == convolution(f1, convolution(f2, f3, s), s));
}

TEST_CASE("antipodes") {
  BialgebraFD b = z2();
  auto a = find_antipode(b);
  REQUIRE(a.antipode.has_value());
  CHECK(a.antipode->is_identity());  // g is its own inverse

  auto none = find_antipode(ks());
  CHECK_FALSE(none.antipode.has_value());
  CHECK(none.rank_coefficients < none.rank_augmented);

  BialgebraFD h = sweedler_h4(Q);
  auto sh = find_antipode(h);
  REQUIRE(sh.antipode.has_value());
  const LinearMap& S = *sh.antipode;
  CHECK(convolution(S, h.id(), h) == h.unit_counit());
  CHECK(convolution(h.id(), S, h) == h.unit_counit());
  CHECK_FALSE(power(S, 2).is_identity());
  CHECK(power(S, 4).is_identity());

  auto tw = find_twisted_antipode(h);
  REQUIRE(tw.antipode.has_value());
  CHECK(*tw.antipode == power(S, 3));
  CHECK((*tw.antipode * S).is_identity());

  CHECK(*find_twisted_antipode(b).antipode == *a.antipode);
  CHECK_FALSE(find_twisted_antipode(ks()).antipode.has_value());
}

TEST_CASE("antipodes map grouplikes to grouplikes") {
  for (const auto& b : {z2(), sweedler_h4(Q)}) {
    LinearMap S = *find_antipode(b).antipode;
    for (std::size_t i = 0; i < b.dim; ++i) {
      if (!is_grouplike(b, i)) continue;
      LinearMap z = S * basis_vector(b.dim, i);
      CHECK(b.comul * z == tensor_map(z, z));
      CHECK((b.counit * z).at(0, 0).is_one());
    }
  }
}

TEST_CASE("monoid bialgebra builder") {
  CHECK(trivial_bialgebra(Q).dim == 1);
  BialgebraFD s = ks();
  CHECK(s.dim == 2);
  CHECK(is_grouplike(s, 0));
  CHECK(is_grouplike(s, 1));
  // s * s = s
  CHECK(s.mul.at(1, 3).is_one());
  CHECK_THROWS_AS(monoid_bialgebra(Q, {{1, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(monoid_bialgebra(Q, {{1, 0}, {0, 1}, {0, 0}}), Error);
}

TEST_CASE("Sweedler algebra") {
  BialgebraFD h = sweedler_h4(Q);
  CHECK(h.dim == 4);
  CHECK(h.counit.at(0, 3).is_zero());
  // comul(gx) = gx (x) g + 1 (x) gx
  LinearMap expected(Q, 16, 1);
  expected.set(3 * 4 + 1, 0, Rational(1));
  expected.set(0 * 4 + 3, 0, Rational(1));
  CHECK(h.comul * basis_vector(4, 3) == expected);
  CHECK_THROWS_AS(sweedler_h4(Field::prime(2)), Error);
}

TEST_CASE("op and cop") {
  BialgebraFD h = sweedler_h4(Q);
  CHECK(op_cop(h, false, false) == h);
  CHECK(op_cop(z2(), false, true) == z2());
  BialgebraFD c = op_cop(h, false, true);
  CHECK(c.comul != h.comul);
  CHECK(validate_bialgebra(c).ok());
  CHECK(validate_bialgebra(op_cop(h, true, false)).ok());
  CHECK(op_cop(op_cop(h, true, false), true, false) == h);
  CHECK(op_cop(c, false, true) == h);
}

TEST_CASE("trace-form semisimplicity") {
  CHECK(is_semisimple_algebra(z2().algebra()));
  CHECK(is_semisimple_algebra(ks().algebra()));
  CHECK_FALSE(is_semisimple_algebra(sweedler_h4(Q).algebra()));
  CHECK_THROWS_AS(is_semisimple_algebra(sweedler_h4(Field::prime(3)).algebra()), Error);
}
