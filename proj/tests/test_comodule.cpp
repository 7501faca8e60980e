#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "trimod/fixtures.hpp"

using namespace trimod;

namespace {

const Field Q = Field::rationals();

BaseFixture ks() { return fixture_base("k[S]"); }
BaseFixture z2() { return fixture_base("k[Z/2]"); }
BaseFixture h4() { return fixture_base("H4"); }

// 1-dim bicomodule of bidegree (x, y) over a monoid bialgebra.
BicomoduleFD graded_point(const BasePtr& b, std::size_t x, std::size_t y) {
  LinearMap l(Q, b->dim, 1), r(Q, b->dim, 1);
  l.set(x, 0, Rational(1));
  r.set(y, 0, Rational(1));
  return {b, 1, l, r, ""};
}

BicomoduleFD graded_sum(const BasePtr& b, const std::vector<std::pair<std::size_t, std::size_t>>& degrees) {
  std::size_t n = b->dim, d = degrees.size();
  LinearMap l(Q, n * d, d), r(Q, d * n, d);
  for (std::size_t k = 0; k < d; ++k) {
    l.set(degrees[k].first * d + k, k, Rational(1));
    r.set(k * n + degrees[k].second, k, Rational(1));
  }
  return {b, d, l, r, ""};
}

// Dimension of the (x, y) component of a bicomodule over a monoid bialgebra.
std::size_t component_dim(const BicomoduleFD& v, std::size_t x, std::size_t y) {
  const BialgebraFD& b = *v.base;
  LinearMap ex(Q, b.dim, 1), ey(Q, b.dim, 1);
  ex.set(x, 0, Rational(1));
  ey.set(y, 0, Rational(1));
  LinearMap id = LinearMap::identity(Q, v.dim);
  LinearMap stacked = vstack({v.left - tensor_map(ex, id), v.right - tensor_map(id, ey)}, Q, v.dim);
  return v.dim - oracle::rank(stacked);
}

}  // namespace

TEST_CASE("bicomodule validation") {
  auto f = ks();
  CHECK(validate_bicomodule(regular_bicomodule(f.base)).ok());
  CHECK(validate_bicomodule(graded_point(f.base, 0, 0)).ok());
  CHECK(validate_left_comodule(simple_graded_comodule(f.base, 0)).ok());

  BicomoduleFD bad = regular_bicomodule(f.base);
  bad.right = LinearMap::from_ints(Q, 4, 2, {1, 0, 0, 1, 0, 0, 1, 0});
  Report r = validate_bicomodule(bad);
  CHECK_FALSE(r.ok());
  bool witnessed = false;
  for (const auto& c : r.checks) witnessed |= !c.passed && !c.witness.empty();
  CHECK(witnessed);

  BicomoduleFD wrong = regular_bicomodule(f.base);
  wrong.left = LinearMap(Q, 3, 2);
  CHECK_THROWS_AS(validate_bicomodule(wrong), Error);
}

TEST_CASE("comodule hom spaces") {
  auto f = ks();
  auto de = simple_graded_comodule(f.base, 0), ds = simple_graded_comodule(f.base, 1);
  CHECK(comodule_hom_space(de, ds).empty());
  for (const auto& m : f.pool) {
    auto homs = comodule_hom_space(m, m);
    CHECK(is_left_colinear(LinearMap::identity(Q, m.dim), m, m));
    // identity lies in the span: adding it does not raise the rank
    std::vector<LinearMap> cols;
    for (const auto& h : homs) cols.push_back(LinearMap::from_column(Q, h.entries()));
    LinearMap span = hstack(cols, Q, m.dim * m.dim);
    LinearMap with_id = hstack({span, LinearMap::from_column(Q, LinearMap::identity(Q, m.dim).entries())}, Q,
                               m.dim * m.dim);
    CHECK(oracle::rank(span) == oracle::rank(with_id));
  }

  auto g = z2();
  auto reg = regular_left(g.base);
  auto homs = comodule_hom_space(reg, reg);
  CHECK(homs.size() == 2);
  std::size_t n = g.base->dim;
  std::size_t brute = oracle::solution_dim(2, 2, [&](const LinearMap& x) {
    return tensor_map(LinearMap::identity(Q, n), x) * reg.coaction - reg.coaction * x;
  });
  CHECK(brute == 2);
  CHECK_THROWS_AS(comodule_hom_space(reg, regular_left(ks().base)), Error);
}

TEST_CASE("cotensor with the regular bicomodule is the identity") {
  for (const auto& f : fixture_bases()) {
    for (const auto& m : f.pool) {
      CotensorSpace c = cotensor(regular_bicomodule(f.base), m);
      CHECK(c.dim() == m.dim);
      LinearMap eps_id = tensor_map(f.base->counit, LinearMap::identity(Q, m.dim)) * c.inclusion();
      CHECK(oracle::rank(eps_id) == m.dim);
      CHECK(validate_left_comodule(c.as_left()).ok());
    }
  }
}

TEST_CASE("graded cotensor components") {
  auto f = ks();
  // V has components (e,e), (e,s), (s,s); W has (e,s), (s,e), (s,s).
  BicomoduleFD v = graded_sum(f.base, {{0, 0}, {0, 1}, {1, 1}});
  BicomoduleFD w = graded_sum(f.base, {{0, 1}, {1, 0}, {1, 1}});
  REQUIRE(validate_bicomodule(v).ok());
  REQUIRE(validate_bicomodule(w).ok());
  BicomoduleFD vw = cotensor(v, w).as_bicomodule();
  CHECK(validate_bicomodule(vw).ok());
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      std::size_t expected = 0;
      for (std::size_t z = 0; z < 2; ++z) expected += component_dim(v, x, z) * component_dim(w, z, y);
      CHECK(component_dim(vw, x, y) == expected);
    }
  }
}

TEST_CASE("tensor products of comodules") {
  for (const auto& f : fixture_bases()) {
    auto k = trivial_left(f.base);
    for (const auto& m : f.pool) {
      CHECK(tensor_comodules(m, k).coaction == m.coaction);
      CHECK(validate_left_comodule(tensor_comodules(m, m)).ok());
    }
  }
  auto f = ks();
  auto de = simple_graded_comodule(f.base, 0), ds = simple_graded_comodule(f.base, 1);
  CHECK(tensor_comodules(ds, ds).coaction == ds.coaction);
  CHECK(tensor_comodules(de, ds).coaction == ds.coaction);
  auto g = z2();
  auto dg = simple_graded_comodule(g.base, 1);
  CHECK(tensor_comodules(dg, dg).coaction == simple_graded_comodule(g.base, 0).coaction);
}

TEST_CASE("cofree comodules") {
  auto f = h4();
  auto zero = cofree_comodule(f.base, 0);
  CHECK(zero.dim == 0);
  CHECK(validate_left_comodule(zero).ok());
  CHECK(cofree_comodule(f.base, 1).coaction == regular_left(f.base).coaction);
  for (const auto& b : fixture_bases()) {
    for (std::size_t d : {1u, 2u}) {
      auto cf = cofree_comodule(b.base, d);
      CHECK(validate_left_comodule(cf).ok());
      for (const auto& m : b.pool) CHECK(comodule_hom_space(m, cf).size() == m.dim * d);
    }
  }
}

TEST_CASE("zero-dimensional comodules pass through every operation") {
  auto f = h4();
  auto zero = cofree_comodule(f.base, 0);
  CHECK(comodule_hom_space(zero, regular_left(f.base)).empty());
  CHECK(cotensor(regular_bicomodule(f.base), zero).dim() == 0);
  CHECK(tensor_comodules(zero, regular_left(f.base)).dim == 0);
  CHECK(is_injective_comodule(zero));
}

TEST_CASE("injective comodules") {
  for (const auto& m : ks().pool) CHECK(is_injective_comodule(m));
  CHECK(is_injective_comodule(regular_left(z2().base)));
  auto f = h4();
  // Frozen solver verdict: the trivial comodule over Sweedler's algebra does
  // not split off its cofree envelope.
  CHECK_FALSE(is_injective_comodule(trivial_left(f.base)));
  CHECK(is_injective_comodule(regular_left(f.base)));
}

TEST_CASE("right coinvariants") {
  auto f = ks();
  LinearMap rs(Q, 2, 1);
  rs.set(1, 0, Rational(1));
  RightComoduleFD ds{f.base, 1, rs, "delta_s"};
  CHECK(right_coinvariants(ds).dim() == 0);

  auto g = z2();
  Subspace c = right_coinvariants(regular_right(g.base));
  CHECK(c.dim() == 1);
  CHECK(c.contains(g.base->unit));

  for (const auto& b : fixture_bases()) {
    BicomoduleFD reg = regular_bicomodule(b.base);
    Subspace co = right_coinvariants(reg);
    LinearMap lam = reg.left * co.inclusion();
    CHECK(padded(co, b.base->dim, 1).contains(lam));
  }
}

TEST_CASE("graded simples") {
  auto f = ks();
  CHECK(simple_graded_comodule(f.base, 0).coaction == trivial_left(f.base).coaction);
  CHECK(validate_left_comodule(simple_graded_comodule(f.base, 1)).ok());
  for (std::size_t z = 0; z < 2; ++z) {
    for (std::size_t w = 0; w < 2; ++w) {
      auto homs = comodule_hom_space(simple_graded_comodule(f.base, z), simple_graded_comodule(f.base, w));
      CHECK(homs.empty() == (z != w));
    }
  }
  CHECK_THROWS_AS(simple_graded_comodule(h4().base, 2), Error);
}

TEST_CASE("iterated cotensor conditions commute") {
  for (const auto& f : fixture_bases()) {
    BicomoduleFD x = regular_bicomodule(f.base);
    for (const auto& z : f.pool) {
      std::size_t n = f.base->dim;
      Subspace xy = cotensor(x, x).subspace;
      Subspace yz = cotensor(x, z).subspace;
      Subspace first = subspace_intersection(padded(xy, 1, z.dim), padded(yz, n, 1));
      Subspace second = subspace_intersection(padded(yz, n, 1), padded(xy, 1, z.dim));
      CHECK(first == second);
      CHECK(first.dim() == z.dim);
    }
  }
}

TEST_CASE("pool comodules validate") {
  for (const auto& f : fixture_bases()) {
    for (const auto& m : f.pool) CHECK_MESSAGE(validate_left_comodule(m).ok(), f.name << " " << m.label);
  }
  CHECK(fixture_base("H4").pool.back().dim == 2);
}
