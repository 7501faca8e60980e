#include "trimod/bialgebra.hpp"

#include "trimod/linear_system.hpp"

namespace trimod {

namespace {

void check_shapes(const BialgebraFD& b) {
  std::size_t n = b.dim;
  auto expect = [](const LinearMap& m, std::size_t r, std::size_t c, const char* what) {
    if (m.rows() != r || m.cols() != c) {
      throw Error("shape-mismatch", std::string(what) + " has shape " + shape_string(m));
    }
  };
  expect(b.mul, n, n * n, "mul");
  expect(b.unit, n, 1, "unit");
  expect(b.comul, n * n, n, "comul");
  expect(b.counit, 1, n, "counit");
}

void compare(Report& r, const std::string& name, const LinearMap& lhs, const LinearMap& rhs) {
  r.add(name, lhs == rhs, mismatch_witness(lhs, rhs));
}

}  // namespace

LinearMap tensor_square_mul(const BialgebraFD& b) {
  std::size_t n = b.dim;
  LinearMap middle = tensor_map({LinearMap::identity(b.field, n), swap_map(b.field, n, n),
                                 LinearMap::identity(b.field, n)});
  return tensor_map(b.mul, b.mul) * middle;
}

bool is_grouplike(const BialgebraFD& b, std::size_t index) {
  LinearMap e(b.field, b.dim, 1);
  e.set(index, 0, Rational(1));
  return b.comul * e == tensor_map(e, e) && (b.counit * e).at(0, 0).is_one();
}

Report validate_bialgebra(const BialgebraFD& b) {
  check_shapes(b);
  const Field& f = b.field;
  LinearMap id = b.id();
  Report r;
  r.subject = "bialgebra";
  compare(r, "assoc", b.mul * tensor_map(b.mul, id), b.mul * tensor_map(id, b.mul));
  compare(r, "unit-left", b.mul * tensor_map(b.unit, id), id);
  compare(r, "unit-right", b.mul * tensor_map(id, b.unit), id);
  compare(r, "coassoc", tensor_map(b.comul, id) * b.comul, tensor_map(id, b.comul) * b.comul);
  compare(r, "counit-left", tensor_map(b.counit, id) * b.comul, id);
  compare(r, "counit-right", tensor_map(id, b.counit) * b.comul, id);
  compare(r, "comul-multiplicative", b.comul * b.mul, tensor_square_mul(b) * tensor_map(b.comul, b.comul));
  compare(r, "counit-multiplicative", b.counit * b.mul, tensor_map(b.counit, b.counit));
  compare(r, "comul-unit", b.comul * b.unit, tensor_map(b.unit, b.unit));
  compare(r, "counit-unit", b.counit * b.unit, LinearMap::identity(f, 1));
  return r;
}

LinearMap convolution(const LinearMap& f, const LinearMap& g, const CoalgebraFD& c, const AlgebraFD& a) {
  if (f.cols() != c.dim || g.cols() != c.dim || f.rows() != a.dim || g.rows() != a.dim) {
    throw Error("shape-mismatch", "convolution operands must map the coalgebra into the algebra");
  }
  return a.mul * tensor_map(f, g) * c.comul;
}

LinearMap convolution(const LinearMap& f, const LinearMap& g, const BialgebraFD& b) {
  return convolution(f, g, b.coalgebra(), b.algebra());
}

AntipodeSearch find_antipode(const BialgebraFD& b) {
  check_shapes(b);
  std::size_t n = b.dim;
  MatrixEquationSystem sys(b.field, n, n);
  LinearMap target = b.unit_counit();
  // S * id and id * S, both equal to unit o counit.
  sys.add_equation({{Rational(1), &b.mul, 1, n, &b.comul}}, &target);
  sys.add_equation({{Rational(1), &b.mul, n, 1, &b.comul}}, &target);
  auto sol = sys.solve();
  AntipodeSearch out;
  out.antipode = sol.x;
  out.rank_coefficients = sol.rank_coefficients;
  out.rank_augmented = sol.rank_augmented;
  out.unknowns = sys.unknowns();
  return out;
}

AntipodeSearch find_twisted_antipode(const BialgebraFD& b) { return find_antipode(op_cop(b, false, true)); }

std::size_t monoid_identity(const MonoidTable& t) {
  std::size_t n = t.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[e][x] == x && t[x][e] == x;
    if (ok) return e;
  }
  throw Error("not-a-monoid", "table has no two-sided identity");
}

BialgebraFD monoid_bialgebra(Field f, const MonoidTable& t, std::vector<std::string> names) {
  std::size_t n = t.size();
  if (n == 0) throw Error("not-a-monoid", "empty table");
  for (const auto& row : t) {
    if (row.size() != n) throw Error("not-a-monoid", "table is not square");
    for (auto v : row) {
      if (v >= n) throw Error("not-a-monoid", "table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) {
          throw Error("not-a-monoid", "associativity fails at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  std::size_t e = monoid_identity(t);
  BialgebraFD b;
  b.field = f;
  b.dim = n;
  b.mul = LinearMap(f, n, n * n);
  b.unit = LinearMap(f, n, 1);
  b.comul = LinearMap(f, n * n, n);
  b.counit = LinearMap(f, 1, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) b.mul.set(t[x][y], x * n + y, Rational(1));
    b.comul.set(x * n + x, x, Rational(1));
    b.counit.set(0, x, Rational(1));
  }
  b.unit.set(e, 0, Rational(1));
  if (names.empty()) {
    for (std::size_t x = 0; x < n; ++x) names.push_back("m" + std::to_string(x));
  }
  if (names.size() != n) throw Error("shape-mismatch", "one name per monoid element required");
  b.basis = std::move(names);
  return b;
}

BialgebraFD trivial_bialgebra(Field f) { return monoid_bialgebra(f, {{0}}, {"1"}); }

BialgebraFD sweedler_h4(Field f) {
  if (f.characteristic() == 2) throw Error("unsupported-field", "Sweedler's algebra needs characteristic other than 2");
  // Basis g^a x^c has index a + 2c: 1, g, x, gx.
  const std::size_t n = 4;
  BialgebraFD b;
  b.field = f;
  b.dim = n;
  b.basis = {"1", "g", "x", "gx"};
  b.mul = LinearMap(f, n, n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t a = u % 2, c = u / 2, a2 = v % 2, c2 = v / 2;
      if (c + c2 >= 2) continue;
      // x g = -g x
      long long sign = (c * a2) % 2 ? -1 : 1;
      b.mul.set((a + a2) % 2 + 2 * (c + c2), u * n + v, f.from_int(sign));
    }
  }
  b.unit = LinearMap::from_ints(f, n, 1, {1, 0, 0, 0});
  b.counit = LinearMap::from_ints(f, 1, n, {1, 1, 0, 0});
  b.comul = LinearMap(f, n * n, n);
  b.comul.set(0, 0, Rational(1));                // 1 -> 1 (x) 1
  b.comul.set(1 * n + 1, 1, Rational(1));        // g -> g (x) g
  b.comul.set(2 * n + 0, 2, Rational(1));        // x -> x (x) 1
  b.comul.set(1 * n + 2, 2, Rational(1));        //    + g (x) x
  // gx is determined multiplicatively: comul(g) comul(x).
  LinearMap g = LinearMap::from_ints(f, n, 1, {0, 1, 0, 0});
  LinearMap x = LinearMap::from_ints(f, n, 1, {0, 0, 1, 0});
  LinearMap dgx = tensor_square_mul(b) * tensor_map(b.comul * g, b.comul * x);
  for (std::size_t r = 0; r < n * n; ++r) b.comul.set(r, 3, dgx.at(r, 0));
  return b;
}

BialgebraFD op_cop(const BialgebraFD& b, bool flip_mul, bool flip_comul) {
  BialgebraFD out = b;
  if (flip_mul) out.mul = b.mul * swap_map(b.field, b.dim, b.dim);
  if (flip_comul) out.comul = swap_map(b.field, b.dim, b.dim) * b.comul;
  return out;
}

LinearMap left_multiplication(const AlgebraFD& a, std::size_t index) {
  std::size_t n = a.dim;
  LinearMap l(a.field, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) l.set(k, j, a.mul.at(k, index * n + j));
  }
  return l;
}

bool is_semisimple_algebra(const AlgebraFD& a) {
  if (!a.field.is_rational()) {
    throw Error("unsupported-field", "trace-form semisimplicity test requires characteristic 0");
  }
  std::size_t n = a.dim;
  std::vector<LinearMap> ls;
  for (std::size_t i = 0; i < n; ++i) ls.push_back(left_multiplication(a, i));
  LinearMap form(a.field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      LinearMap p = ls[i] * ls[j];
      Rational tr;
      for (std::size_t k = 0; k < n; ++k) tr += p.at(k, k);
      form.set(i, j, tr);
    }
  }
  return rank(form) == n;
}

}  // namespace trimod
