#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trimod/bialgebra.hpp"
#include "trimod/linear_system.hpp"
#include "trimod/subspace.hpp"

using namespace trimod;

namespace {

const Field Q = Field::rationals();

// Plain dense Gaussian elimination over mpq_class, kept separate from the
// library's sparse reducer.
std::size_t oracle_rank(const LinearMap& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).to_mpq();
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Residue rank over Z/p by the same naive method.
std::size_t oracle_rank_mod(const std::vector<std::vector<long long>>& rows, long long p) {
  auto a = rows;
  std::size_t n = a.empty() ? 0 : a[0].size();
  auto inv = [p](long long v) {
    long long r = 1, b = v % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t q = r;
    while (q < a.size() && a[q][c] % p == 0) ++q;
    if (q == a.size()) continue;
    std::swap(a[q], a[r]);
    long long iv = inv(((a[r][c] % p) + p) % p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r) continue;
      long long f = ((a[i][c] % p) + p) % p * iv % p;
      for (std::size_t j = 0; j < n; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

LinearMap random_map(std::mt19937& rng, std::size_t r, std::size_t c, int density_pct = 60) {
  std::uniform_int_distribution<int> val(-3, 3), pct(0, 99);
  LinearMap m(Q, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (pct(rng) < density_pct) m.set(i, j, Rational(val(rng), 1 + std::abs(val(rng))));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic and canonical text") {
  CHECK((Rational(1, 2) + Rational(1, 3)).to_string() == "5/6");
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK((Rational(2, 3) / Rational(-4, 9)).to_string() == "-3/2");

  Rational big(1LL << 62);
  Rational sq = big * big * big;
  CHECK_FALSE(sq.is_small());
  CHECK((sq / big / big) == big);
  CHECK((sq / big / big).is_small());

  for (const char* ok : {"0", "7", "-12", "3/4", "-5/9", "123456789012345678901234567890/11"}) {
    auto r = Rational::parse_canonical(ok);
    REQUIRE(r.has_value());
    CHECK(r->to_string() == ok);
  }
  for (const char* bad : {"2/4", "-0", "01", "1/1", "3/-4", "", "1/0", "0/5", "+3", "1.5", " 1"}) {
    CHECK_FALSE(Rational::parse_canonical(bad).has_value());
  }
}

TEST_CASE("parse then serialize is the identity") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (int i = 0; i < 500; ++i) {
    long long den = d(rng);
    if (den == 0) continue;
    Rational r(d(rng), den);
    auto back = Rational::parse_canonical(r.to_string());
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
}

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(7);
  CHECK(f.mul(f.from_int(3), f.inv(f.from_int(3))).is_one());
  CHECK(f.from_int(-1) == Rational(6));
  CHECK(f.reduce(Rational(1, 2)) == Rational(4));
  CHECK(f.parse("6").has_value());
  CHECK_FALSE(f.parse("7").has_value());
  CHECK_FALSE(f.parse("1/2").has_value());
  CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(LinearMap::zero(Q, 3, 2)).dim() == 2);
  CHECK(kernel_basis(LinearMap::identity(Q, 3)).dim() == 0);

  // Galois map h (x) h' -> h_(1) h' (x) h_(2) of k[S], assembled from the
  // monoid table directly: z (x) w -> zw (x) z.
  std::size_t table[2][2] = {{0, 1}, {1, 1}};
  LinearMap galois(Q, 4, 4);
  for (std::size_t z = 0; z < 2; ++z) {
    for (std::size_t w = 0; w < 2; ++w) galois.set(table[z][w] * 2 + z, z * 2 + w, Rational(1));
  }
  Subspace k = kernel_basis(galois);
  CHECK(k.dim() == 4 - oracle_rank(galois));
  CHECK(k.dim() == 1);
  CHECK((galois * k.inclusion()).is_zero());
}

TEST_CASE("cokernel projection examples") {
  Cokernel c = cokernel_projection(LinearMap::zero(Q, 2, 3));
  CHECK(c.dim == 2);
  CHECK(c.projection.is_identity());

  LinearMap surj = LinearMap::from_ints(Q, 2, 3, {1, 0, 1, 0, 1, 1});
  CHECK(cokernel_projection(surj).dim == 0);
}

TEST_CASE("tensor map examples") {
  CHECK(tensor_map(LinearMap::identity(Q, 2), LinearMap::identity(Q, 3)).is_identity());
  std::mt19937 rng(11);
  for (int i = 0; i < 10; ++i) {
    LinearMap f = random_map(rng, 3, 2, 50), g = random_map(rng, 2, 3, 50);
    CHECK(rank(tensor_map(f, g)) == rank(f) * rank(g));
  }
  BialgebraFD z2 = monoid_bialgebra(Q, {{0, 1}, {1, 0}});
  LinearMap t = tensor_map(z2.comul, LinearMap::identity(Q, 1));
  CHECK(t == z2.comul);
  // Entry for e_1 -> e_1 (x) e_1 sits at row 1*2+1.
  CHECK(t.at(3, 1).is_one());
}

TEST_CASE("subspace intersection examples") {
  std::mt19937 rng(5);
  Subspace u = image(random_map(rng, 5, 3));
  CHECK(subspace_intersection(u, u) == u);

  LinearMap a = LinearMap::from_ints(Q, 4, 2, {1, 0, 0, 1, 0, 0, 0, 0});
  LinearMap b = LinearMap::from_ints(Q, 4, 2, {0, 0, 0, 0, 1, 0, 0, 1});
  CHECK(subspace_intersection(image(a), image(b)).dim() == 0);

  LinearMap c = LinearMap::from_ints(Q, 3, 2, {1, 0, 0, 1, 0, 0});
  LinearMap d = LinearMap::from_ints(Q, 3, 2, {0, 1, 1, 0, 0, 1});
  Subspace i = subspace_intersection(image(c), image(d));
  CHECK(i.dim() == 1);
  CHECK(image(c).contains(i.inclusion()));
  CHECK(image(d).contains(i.inclusion()));

  CHECK_THROWS_AS(subspace_intersection(Subspace::whole(Q, 2), Subspace::whole(Q, 3)), Error);
}

TEST_CASE("solve right inverse examples") {
  auto id = solve_right_inverse(LinearMap::identity(Q, 3));
  REQUIRE(id.has_value());
  CHECK(id->is_identity());

  CHECK_FALSE(solve_right_inverse(LinearMap::from_ints(Q, 2, 2, {1, 2, 2, 4})).has_value());

  // The regular coaction of k[Z/2] splits: its transpose has a right
  // inverse, whose transpose retracts the coaction.
  BialgebraFD z2 = monoid_bialgebra(Q, {{0, 1}, {1, 0}});
  auto s = solve_right_inverse(transpose(z2.comul));
  REQUIRE(s.has_value());
  CHECK((transpose(*s) * z2.comul).is_identity());
}

TEST_CASE("rank-nullity against the oracle") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(0, 7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    LinearMap m = random_map(rng, r, c, 20 + trial % 70);
    std::size_t rk = oracle_rank(m);
    Subspace k = kernel_basis(m);
    CHECK(k.dim() + rk == c);
    CHECK(rank(m) == rk);
    CHECK((m * k.inclusion()).is_zero());
    Cokernel q = cokernel_projection(m);
    CHECK(q.dim + rk == r);
    CHECK((q.projection * m).is_zero());
    CHECK((q.projection * q.section).is_identity());
    CHECK(oracle_rank(q.projection) == q.dim);
  }
}

TEST_CASE("rank-nullity over a prime field") {
  Field f = Field::prime(5);
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> val(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + trial % 6, c = 1 + (trial / 6) % 6;
    std::vector<std::vector<long long>> raw(r, std::vector<long long>(c));
    LinearMap m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        raw[i][j] = val(rng) * (val(rng) > 1 ? 1 : 0);
        m.set(i, j, f.from_int(raw[i][j]));
      }
    }
    std::size_t rk = oracle_rank_mod(raw, 5);
    Subspace k = kernel_basis(m);
    CHECK(k.dim() + rk == c);
    CHECK((m * k.inclusion()).is_zero());
  }
}

TEST_CASE("tensor map associativity") {
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    LinearMap f = random_map(rng, 2, 3), g = random_map(rng, 3, 1), h = random_map(rng, 2, 2);
    CHECK(tensor_map(tensor_map(f, g), h) == tensor_map(f, tensor_map(g, h)));
  }
}

TEST_CASE("canonical subspace basis is span-invariant") {
  std::mt19937 rng(17);
  for (int i = 0; i < 30; ++i) {
    LinearMap gens = random_map(rng, 6, 3);
    LinearMap mix = random_map(rng, 3, 3, 100);
    if (rank(mix) < 3) continue;
    CHECK(image(gens) == image(gens * mix));
    Subspace k = kernel_basis(transpose(gens));
    CHECK(Subspace::span(k.inclusion()) == k);
  }
}

TEST_CASE("matrix equation system solves for a matrix unknown") {
  // Find X with A X B = C and compare against a known solution.
  std::mt19937 rng(8);
  LinearMap a = random_map(rng, 3, 2, 100), b = random_map(rng, 2, 3, 100);
  LinearMap x0 = random_map(rng, 2, 2, 100);
  LinearMap c = a * x0 * b;
  MatrixEquationSystem sys(Q, 2, 2);
  sys.add_equation({{Rational(1), &a, 1, 1, &b}}, &c);
  auto sol = sys.solve();
  REQUIRE(sol.x.has_value());
  CHECK(a * *sol.x * b == c);
  CHECK(sol.rank_coefficients == sol.rank_augmented);

  // Kronecker-padded unknown: (I_2 (x) X) v = 0 for all X in the kernel.
  LinearMap v = LinearMap::from_ints(Q, 4, 1, {1, 1, 0, 0});
  MatrixEquationSystem hom(Q, 2, 2);
  hom.add_equation({{Rational(1), nullptr, 2, 1, &v}});
  auto ker = hom.kernel();
  CHECK(ker.size() == 2);
  for (const auto& k : ker) CHECK((tensor_map(LinearMap::identity(Q, 2), k) * v).is_zero());
}
