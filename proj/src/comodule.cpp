#include "trimod/comodule.hpp"

#include <list>
#include <mutex>

#include "trimod/linear_system.hpp"

namespace trimod {

namespace {

void expect_shape(const LinearMap& m, std::size_t r, std::size_t c, const std::string& what) {
  if (m.rows() != r || m.cols() != c) throw Error("shape-mismatch", what + " has shape " + shape_string(m));
}

void compare(Report& r, const std::string& name, const LinearMap& lhs, const LinearMap& rhs) {
  r.add(name, lhs == rhs, mismatch_witness(lhs, rhs));
}

void left_laws(Report& r, const BialgebraFD& b, std::size_t m, const LinearMap& lambda, const std::string& prefix) {
  std::size_t n = b.dim;
  compare(r, prefix + "coassoc", kron_apply({Factor::of(b.comul), Factor::id(m)}, lambda),
          kron_apply({Factor::id(n), Factor::of(lambda)}, lambda));
  compare(r, prefix + "counit", kron_apply({Factor::of(b.counit), Factor::id(m)}, lambda),
          LinearMap::identity(b.field, m));
}

void right_laws(Report& r, const BialgebraFD& b, std::size_t m, const LinearMap& rho, const std::string& prefix) {
  std::size_t n = b.dim;
  compare(r, prefix + "coassoc", kron_apply({Factor::of(rho), Factor::id(n)}, rho),
          kron_apply({Factor::id(m), Factor::of(b.comul)}, rho));
  compare(r, prefix + "counit", kron_apply({Factor::id(m), Factor::of(b.counit)}, rho),
          LinearMap::identity(b.field, m));
}

}  // namespace

void require_same_base(const BasePtr& a, const BasePtr& b) {
  if (!a || !b) throw Error("base-mismatch", "missing base bialgebra");
  if (a != b && !(*a == *b)) throw Error("base-mismatch", "structures live over different bialgebras");
}

LinearMap corestrict_padded(const Subspace& s, std::size_t l, std::size_t r, const LinearMap& f,
                            const std::string& what) {
  std::size_t n = s.ambient(), d = s.dim();
  if (f.rows() != l * n * r) throw Error("shape-mismatch", "corestriction target has wrong ambient dimension");
  std::vector<std::size_t> coords;
  coords.reserve(l * d * r);
  for (std::size_t a = 0; a < l; ++a) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t b = 0; b < r; ++b) coords.push_back((a * n + s.coords()[k]) * r + b);
    }
  }
  LinearMap g = select_rows(f, coords);
  if (kron_apply({Factor::id(l), Factor::of(s.inclusion()), Factor::id(r)}, g) != f) {
    throw Error("corestriction-failure", "image of " + what + " is not contained in the subspace");
  }
  return g;
}

Report validate_left_comodule(const LeftComoduleFD& m) {
  expect_shape(m.coaction, m.base->dim * m.dim, m.dim, "left coaction");
  Report r;
  r.subject = "comodule-left";
  left_laws(r, *m.base, m.dim, m.coaction, "");
  return r;
}

Report validate_right_comodule(const RightComoduleFD& m) {
  expect_shape(m.coaction, m.dim * m.base->dim, m.dim, "right coaction");
  Report r;
  r.subject = "comodule-right";
  right_laws(r, *m.base, m.dim, m.coaction, "");
  return r;
}

Report validate_bicomodule(const BicomoduleFD& x) {
  const BialgebraFD& b = *x.base;
  std::size_t n = b.dim;
  expect_shape(x.left, n * x.dim, x.dim, "left coaction");
  expect_shape(x.right, x.dim * n, x.dim, "right coaction");
  Report r;
  r.subject = "bicomodule";
  left_laws(r, b, x.dim, x.left, "left-");
  right_laws(r, b, x.dim, x.right, "right-");
  compare(r, "bicomodule-compat", kron_apply({Factor::id(n), Factor::of(x.right)}, x.left),
          kron_apply({Factor::of(x.left), Factor::id(n)}, x.right));
  return r;
}

std::vector<LinearMap> comodule_hom_space(const LeftComoduleFD& m, const LeftComoduleFD& p) {
  require_same_base(m.base, p.base);
  std::size_t n = m.base->dim;
  MatrixEquationSystem sys(m.base->field, p.dim, m.dim);
  sys.add_equation({{Rational(1), nullptr, n, 1, &m.coaction}, {Rational(-1), &p.coaction, 1, 1, nullptr}});
  return sys.kernel();
}

std::vector<LinearMap> right_comodule_hom_space(const RightComoduleFD& m, const RightComoduleFD& p) {
  require_same_base(m.base, p.base);
  std::size_t n = m.base->dim;
  MatrixEquationSystem sys(m.base->field, p.dim, m.dim);
  sys.add_equation({{Rational(1), nullptr, 1, n, &m.coaction}, {Rational(-1), &p.coaction, 1, 1, nullptr}});
  return sys.kernel();
}

bool is_left_colinear(const LinearMap& f, const LeftComoduleFD& m, const LeftComoduleFD& p) {
  return kron_apply({Factor::id(m.base->dim), Factor::of(f)}, m.coaction) == p.coaction * f;
}

LeftComoduleFD CotensorSpace::as_left(std::string label) const {
  if (!left) throw Error("shape-mismatch", "cotensor has no left coaction");
  return {base, dim(), *left, std::move(label)};
}

BicomoduleFD CotensorSpace::as_bicomodule(std::string label) const {
  if (!left || !right) throw Error("shape-mismatch", "cotensor is not a bicomodule");
  return {base, dim(), *left, *right, std::move(label)};
}

Subspace cotensor_subspace(const BialgebraFD& b, std::size_t dim_x, const LinearMap& rho_x, std::size_t dim_y,
                           const LinearMap& lambda_y) {
  SparseMatrix eq(b.field, dim_x * b.dim * dim_y, dim_x * dim_y);
  eq.add_kron(Rational(1), {Factor::of(rho_x), Factor::id(dim_y)});
  eq.add_kron(Rational(-1), {Factor::id(dim_x), Factor::of(lambda_y)});
  return Subspace::kernel_of(eq);
}

namespace {

CotensorSpace build_cotensor(const BasePtr& base, std::size_t dx, const LinearMap& rho_x, const LinearMap* lambda_x,
                             std::size_t dy, const LinearMap& lambda_y, const LinearMap* rho_y) {
  const BialgebraFD& b = *base;
  CotensorSpace c;
  c.base = base;
  c.dim_x = dx;
  c.dim_y = dy;
  c.subspace = cotensor_subspace(b, dx, rho_x, dy, lambda_y);
  const LinearMap& incl = c.subspace.inclusion();
  if (lambda_x) {
    LinearMap l = kron_apply({Factor::of(*lambda_x), Factor::id(dy)}, incl);
    c.left = corestrict_padded(c.subspace, b.dim, 1, l, "left coaction on the cotensor product");
  }
  if (rho_y) {
    LinearMap r = kron_apply({Factor::id(dx), Factor::of(*rho_y)}, incl);
    c.right = corestrict_padded(c.subspace, 1, b.dim, r, "right coaction on the cotensor product");
  }
  return c;
}

}  // namespace

namespace {

// Recently built A box M spaces; the monad asks for the same ones repeatedly.
struct CotensorMemo {
  struct Entry {
    BasePtr base;
    LinearMap right, left, coaction;
    CotensorSpace value;
  };
  static constexpr std::size_t kCapacity = 48;
  std::mutex lock;
  std::list<Entry> entries;
};

CotensorMemo& cotensor_memo() {
  static CotensorMemo memo;
  return memo;
}

}  // namespace

CotensorSpace cotensor(const BicomoduleFD& x, const LeftComoduleFD& y) {
  require_same_base(x.base, y.base);
  CotensorMemo& memo = cotensor_memo();
  {
    std::lock_guard<std::mutex> g(memo.lock);
    for (auto it = memo.entries.begin(); it != memo.entries.end(); ++it) {
      if (it->base == x.base && it->coaction.cols() == y.dim && it->right.cols() == x.dim && it->coaction == y.coaction &&
          it->right == x.right && it->left == x.left) {
        memo.entries.splice(memo.entries.begin(), memo.entries, it);
        return memo.entries.front().value;
      }
    }
  }
  CotensorSpace c = build_cotensor(x.base, x.dim, x.right, &x.left, y.dim, y.coaction, nullptr);
  std::lock_guard<std::mutex> g(memo.lock);
  memo.entries.push_front({x.base, x.right, x.left, y.coaction, c});
  if (memo.entries.size() > CotensorMemo::kCapacity) memo.entries.pop_back();
  return c;
}

CotensorSpace cotensor(const BicomoduleFD& x, const BicomoduleFD& y) {
  require_same_base(x.base, y.base);
  return build_cotensor(x.base, x.dim, x.right, &x.left, y.dim, y.left, &y.right);
}

CotensorSpace cotensor(const RightComoduleFD& x, const LeftComoduleFD& y) {
  require_same_base(x.base, y.base);
  return build_cotensor(x.base, x.dim, x.coaction, nullptr, y.dim, y.coaction, nullptr);
}

LeftComoduleFD tensor_comodules(const LeftComoduleFD& m, const LeftComoduleFD& p) {
  require_same_base(m.base, p.base);
  const BialgebraFD& b = *m.base;
  std::size_t n = b.dim;
  LinearMap both = tensor_map(m.coaction, p.coaction);
  LinearMap sw = swap_map(b.field, m.dim, n);
  LinearMap grouped = kron_apply({Factor::id(n), Factor::of(sw), Factor::id(p.dim)}, both);
  LinearMap coaction = kron_apply({Factor::of(b.mul), Factor::id(m.dim), Factor::id(p.dim)}, grouped);
  std::string label = m.label.empty() || p.label.empty() ? std::string() : m.label + "⊗" + p.label;
  return {m.base, m.dim * p.dim, std::move(coaction), std::move(label)};
}

LeftComoduleFD cofree_comodule(const BasePtr& base, std::size_t d) {
  return {base, base->dim * d, tensor_map(base->comul, LinearMap::identity(base->field, d)),
          "cofree" + std::to_string(d)};
}

LeftComoduleFD regular_left(const BasePtr& base) { return {base, base->dim, base->comul, "regular"}; }

LeftComoduleFD trivial_left(const BasePtr& base) { return {base, 1, base->unit, "k"}; }

RightComoduleFD regular_right(const BasePtr& base) { return {base, base->dim, base->comul, "regular"}; }

BicomoduleFD regular_bicomodule(const BasePtr& base) {
  return {base, base->dim, base->comul, base->comul, "regular"};
}

LeftComoduleFD simple_graded_comodule(const BasePtr& base, std::size_t z) {
  if (z >= base->dim || !is_grouplike(*base, z)) {
    throw Error("not-grouplike", "basis element " + std::to_string(z) + " is not grouplike");
  }
  LinearMap coaction(base->field, base->dim, 1);
  coaction.set(z, 0, Rational(1));
  std::string name = z < base->basis.size() ? base->basis[z] : std::to_string(z);
  return {base, 1, std::move(coaction), "delta_" + name};
}

LeftComoduleFD subcomodule(const LeftComoduleFD& m, const Subspace& s, std::string label) {
  LinearMap restricted = m.coaction * s.inclusion();
  LinearMap coaction = corestrict_padded(s, m.base->dim, 1, restricted, "coaction on the subcomodule");
  return {m.base, s.dim(), std::move(coaction), std::move(label)};
}

LeftComoduleFD direct_sum(const LeftComoduleFD& m, const LeftComoduleFD& p) {
  require_same_base(m.base, p.base);
  std::size_t n = m.base->dim, d = m.dim + p.dim;
  LinearMap coaction(m.base->field, n * d, d);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t i = 0; i < m.dim; ++i) {
      for (std::size_t j = 0; j < m.dim; ++j) coaction.set(b * d + i, j, m.coaction.at(b * m.dim + i, j));
    }
    for (std::size_t i = 0; i < p.dim; ++i) {
      for (std::size_t j = 0; j < p.dim; ++j) {
        coaction.set(b * d + m.dim + i, m.dim + j, p.coaction.at(b * p.dim + i, j));
      }
    }
  }
  return {m.base, d, std::move(coaction), m.label + "⊕" + p.label};
}

bool is_injective_comodule(const LeftComoduleFD& m) {
  const BialgebraFD& b = *m.base;
  std::size_t n = b.dim;
  // A colinear retraction r: B (x) M -> M of the coaction.
  MatrixEquationSystem sys(b.field, m.dim, n * m.dim);
  LinearMap cofree = tensor_map(b.comul, LinearMap::identity(b.field, m.dim));
  sys.add_equation({{Rational(1), nullptr, n, 1, &cofree}, {Rational(-1), &m.coaction, 1, 1, nullptr}});
  LinearMap id = LinearMap::identity(b.field, m.dim);
  sys.add_equation({{Rational(1), nullptr, 1, 1, &m.coaction}}, &id);
  return sys.solve().x.has_value();
}

Subspace right_coinvariants(const RightComoduleFD& x) {
  const BialgebraFD& b = *x.base;
  return kernel_basis(x.coaction - tensor_map(LinearMap::identity(b.field, x.dim), b.unit));
}

Subspace right_coinvariants(const BicomoduleFD& x) { return right_coinvariants(x.right_comodule()); }

}  // namespace trimod
