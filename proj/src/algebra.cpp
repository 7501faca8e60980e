#include "trimod/algebra.hpp"

#include <cstdint>
#include <list>
#include <map>
#include <mutex>
#include <random>

#include "trimod/fixtures.hpp"
#include "trimod/linear_system.hpp"

namespace trimod {

namespace {

LinearMap id(const Field& f, std::size_t n) { return LinearMap::identity(f, n); }

void expect_shape(const LinearMap& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error("shape-mismatch", what + " is " + shape_string(m) + ", expected " + std::to_string(rows) + "x" +
                                      std::to_string(cols));
  }
}

void compare(Report& r, const std::string& name, const LinearMap& a, const LinearMap& b) {
  bool same = a == b;
  r.add(name, same, same ? std::string() : mismatch_witness(a, b));
}

// Runs a check whose computation may hit a failed corestriction.
template <class F>
void guarded(Report& r, const std::string& name, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    r.add(name, false, e.what());
  }
}

std::string morphism_witness(const LinearMap& f, const HopfTrimoduleFD& x, const HopfTrimoduleFD& y) {
  const Field& k = x.base()->field;
  LinearMap in = id(k, x.base()->dim);
  LinearMap a = tensor_map(in, f) * x.bicomodule.left, b = y.bicomodule.left * f;
  if (a != b) return "left coaction: " + mismatch_witness(a, b);
  a = tensor_map(f, in) * x.bicomodule.right;
  b = y.bicomodule.right * f;
  if (a != b) return "right coaction: " + mismatch_witness(a, b);
  a = f * x.action;
  b = y.action * tensor_map(in, f);
  if (a != b) return "action: " + mismatch_witness(a, b);
  return {};
}

LinearMap mul_on(const TrimoduleAlgebraFD& a, const Subspace& sq, std::size_t l, std::size_t r, const LinearMap& v) {
  LinearMap g = corestrict_padded(sq, l, r, v, "product argument in A box A");
  return kron_apply({Factor::id(l), Factor::of(a.mul), Factor::id(r)}, g);
}

// A box (A box X) embedded in A (x) A (x) X.
LinearMap nested_embedding(const BicomoduleFD& a, const CotensorSpace& ax, CotensorSpace* outer = nullptr) {
  CotensorSpace d = cotensor(a, ax.as_left());
  LinearMap e = kron_apply({Factor::id(a.dim), Factor::of(ax.inclusion())}, d.inclusion());
  if (outer) *outer = std::move(d);
  return e;
}

LinearMap flatten(const LinearMap& m) { return LinearMap::from_column(m.field(), m.entries()); }

LinearMap unflatten(const LinearMap& column, std::size_t rows, std::size_t cols) {
  LinearMap out(column.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, column.at(i * cols + j, 0));
  }
  return out;
}

LinearMap random_combination(const std::vector<LinearMap>& basis, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  LinearMap out = scale(Rational(0), basis.front());
  for (const auto& h : basis) out = out + scale(Rational(coef(rng)), h);
  if (out.is_zero()) out = basis.front();
  return out;
}

}  // namespace

AlgebraPtr share(TrimoduleAlgebraFD a) { return std::make_shared<const TrimoduleAlgebraFD>(std::move(a)); }

LinearMap apply_mul(const TrimoduleAlgebraFD& a, std::size_t l, std::size_t r, const LinearMap& v) {
  return mul_on(a, a.square().subspace, l, r, v);
}

Report validate_trimodule_algebra(const TrimoduleAlgebraFD& a) {
  const BialgebraFD& b = *a.base();
  const Field& f = b.field;
  std::size_t n = b.dim, d = a.dim();
  CotensorSpace sq = a.square();
  expect_shape(a.mul, d, sq.dim(), "multiplication");
  expect_shape(a.unit, d, n, "unit");
  Report r;
  r.subject = "trimodule-algebra";

  std::string w = morphism_witness(a.mul, trimodule_cotensor(a.carrier, a.carrier), a.carrier);
  r.add("mul-trimodule-morphism", w.empty(), w);
  w = morphism_witness(a.unit, regular_trimodule(a.base()), a.carrier);
  r.add("unit-trimodule-morphism", w.empty(), w);

  guarded(r, "assoc", [&] {
    LinearMap triple = nested_embedding(a.carrier.bicomodule, sq);
    LinearMap lhs = mul_on(a, sq.subspace, 1, 1, mul_on(a, sq.subspace, 1, d, triple));
    LinearMap rhs = mul_on(a, sq.subspace, 1, 1, mul_on(a, sq.subspace, d, 1, triple));
    compare(r, "assoc", lhs, rhs);
  });
  BicomoduleFD reg = regular_bicomodule(a.base());
  guarded(r, "unit-left", [&] {
    CotensorSpace c = cotensor(reg, a.carrier.bicomodule);
    LinearMap lhs = mul_on(a, sq.subspace, 1, 1, tensor_map(a.unit, id(f, d)) * c.inclusion());
    compare(r, "unit-left", lhs, tensor_map(b.counit, id(f, d)) * c.inclusion());
  });
  guarded(r, "unit-right", [&] {
    CotensorSpace c = cotensor(a.carrier.bicomodule, reg);
    LinearMap lhs = mul_on(a, sq.subspace, 1, 1, tensor_map(id(f, d), a.unit) * c.inclusion());
    compare(r, "unit-right", lhs, tensor_map(id(f, d), b.counit) * c.inclusion());
  });
  r.merge(validate_trimodule(a.carrier), "carrier ");
  return r;
}

TrimoduleAlgebraFD unit_algebra(const BasePtr& base) {
  const BialgebraFD& b = *base;
  TrimoduleAlgebraFD a;
  a.carrier = regular_trimodule(base);
  a.carrier.bicomodule.label = "B";
  a.mul = tensor_map(b.counit, b.id()) * a.square().inclusion();
  a.unit = b.id();
  return a;
}

TrimoduleAlgebraFD b_dot_b(const BasePtr& base) {
  const BialgebraFD& b = *base;
  const Field& f = b.field;
  std::size_t n = b.dim;
  LinearMap in = b.id();
  TrimoduleAlgebraFD a;
  a.carrier.bicomodule = {base, n * n, tensor_map(b.comul, in), tensor_map(in, b.comul), "B•B"};
  a.carrier.action = tensor_square_mul(b) * tensor_map(b.comul, id(f, n * n));
  a.mul = tensor_map({in, b.counit, b.counit, in}) * a.square().inclusion();
  a.unit = b.comul;
  return a;
}

std::vector<std::pair<std::size_t, std::size_t>> pointed_basis(const std::vector<int>& eps) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t w = 0; w < eps.size(); ++w) {
    for (std::size_t z = 0; z < eps.size(); ++z) {
      if (eps[w] == 1 && eps[z] == 1) out.emplace_back(w, z);
    }
  }
  return out;
}

TrimoduleAlgebraFD reconstruct_pointed(const BasePtr& base, const MonoidTable& table, const std::vector<int>& eps) {
  const BialgebraFD& b = *base;
  const Field& f = b.field;
  std::size_t n = table.size();
  if (b.dim != n || eps.size() != n) throw Error("shape-mismatch", "monoid, base and character sizes differ");
  if (monoid_bialgebra(f, table).mul != b.mul) throw Error("base-mismatch", "base is not the monoid bialgebra");
  std::size_t e = monoid_identity(table);
  for (std::size_t u = 0; u < n; ++u) {
    if (eps[u] != 0 && eps[u] != 1) throw Error("not-multiplicative", "character values must be 0 or 1");
  }
  if (eps[e] != 1) throw Error("not-multiplicative", "character is 0 on the identity");
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (eps[table[u][v]] != eps[u] * eps[v]) {
        throw Error("not-multiplicative", "eps(" + b.basis[u] + b.basis[v] + ") != eps(" + b.basis[u] + ")eps(" +
                                              b.basis[v] + ")");
      }
    }
  }
  auto pairs = pointed_basis(eps);
  std::size_t d = pairs.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < d; ++k) index[pairs[k]] = k;

  LinearMap left(f, n * d, d), right(f, d * n, d), action(f, d, n * d), unit(f, d, n), flat(f, d, d * d);
  for (std::size_t k = 0; k < d; ++k) {
    auto [w, z] = pairs[k];
    left.set(w * d + k, k, Rational(1));
    right.set(k * n + z, k, Rational(1));
    for (std::size_t u = 0; u < n; ++u) {
      if (eps[u] == 1) action.set(index.at({table[u][w], table[u][z]}), u * d + k, Rational(1));
    }
    for (std::size_t k2 = 0; k2 < d; ++k2) {
      if (pairs[k2].first == z) flat.set(index.at({w, pairs[k2].second}), k * d + k2, Rational(1));
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (eps[u] == 1) unit.set(index.at({u, u}), u, Rational(1));
  }
  std::string label = "pointed(";
  for (std::size_t u = 0; u < n; ++u) label += (u ? "," : "") + std::to_string(eps[u]);
  label += ")";
  TrimoduleAlgebraFD a;
  a.carrier = {{base, d, std::move(left), std::move(right), label}, std::move(action)};
  a.mul = flat * a.square().inclusion();
  a.unit = std::move(unit);
  return a;
}

TrimoduleAlgebraFD reconstruct_pointed(const MonoidTable& table, const std::vector<int>& eps) {
  return reconstruct_pointed(make_base(monoid_bialgebra(Field::rationals(), table)), table, eps);
}

LinearMap module_unit_map(const TrimoduleAlgebraFD& a, const LeftComoduleFD& m) {
  CotensorSpace am = cotensor(a.carrier.bicomodule, m);
  return am.subspace.corestrict(tensor_map(a.unit, id(a.base()->field, m.dim)) * m.coaction, "unit image in A box M");
}

namespace {

// Recently built free modules, keyed by algebra and coaction.
struct FreeMemo {
  struct Entry {
    AlgebraPtr algebra;
    LinearMap coaction;
    LinearMap module_coaction;
    LinearMap act;
  };
  static constexpr std::size_t kCapacity = 32;
  std::mutex lock;
  std::list<Entry> entries;
};

FreeMemo& free_memo() {
  static FreeMemo memo;
  return memo;
}

}  // namespace

TrimoduleModuleFD free_module(const AlgebraPtr& a, const LeftComoduleFD& m) {
  require_same_base(a->base(), m.base);
  TrimoduleModuleFD out;
  out.algebra = a;
  out.free_on = m;
  FreeMemo& memo = free_memo();
  {
    std::lock_guard<std::mutex> g(memo.lock);
    for (auto it = memo.entries.begin(); it != memo.entries.end(); ++it) {
      if (it->algebra == a && it->coaction.cols() == m.dim && it->coaction == m.coaction) {
        memo.entries.splice(memo.entries.begin(), memo.entries, it);
        const FreeMemo::Entry& e = memo.entries.front();
        out.comodule = {a->base(), e.act.rows(), e.module_coaction, a->label() + "□" + m.label};
        out.act = e.act;
        return out;
      }
    }
  }
  CotensorSpace am = cotensor(a->carrier.bicomodule, m);
  LinearMap nested = nested_embedding(a->carrier.bicomodule, am);
  LinearMap prod = mul_on(*a, a->square().subspace, 1, m.dim, nested);
  out.comodule = am.as_left(a->label() + "□" + m.label);
  out.act = am.subspace.corestrict(prod, "free action");
  std::lock_guard<std::mutex> g(memo.lock);
  memo.entries.push_front({a, m.coaction, out.comodule.coaction, out.act});
  if (memo.entries.size() > FreeMemo::kCapacity) memo.entries.pop_back();
  return out;
}

TrimoduleModuleFD act_on_free(const LeftComoduleFD& v, const TrimoduleModuleFD& free) {
  if (!free.free_on || !free.algebra) throw Error("provenance-missing", "module was not built as a free module");
  return free_module(free.algebra, tensor_comodules(v, *free.free_on));
}

Report validate_module(const TrimoduleModuleFD& m) {
  const TrimoduleAlgebraFD& a = *m.algebra;
  const BialgebraFD& b = *a.base();
  const Field& f = b.field;
  std::size_t n = b.dim, d = a.dim(), dm = m.comodule.dim;
  CotensorSpace am = cotensor(a.carrier.bicomodule, m.comodule);
  expect_shape(m.act, dm, am.dim(), "module action");
  Report r;
  r.subject = "module";
  compare(r, "act-colinear", m.comodule.coaction * m.act, tensor_map(id(f, n), m.act) * *am.left);
  guarded(r, "assoc", [&] {
    CotensorSpace outer;
    LinearMap nested = nested_embedding(a.carrier.bicomodule, am, &outer);
    LinearMap lhs = m.act * am.subspace.corestrict(mul_on(a, a.square().subspace, 1, dm, nested), "product");
    LinearMap inner = kron_apply({Factor::id(d), Factor::of(m.act)}, outer.inclusion());
    LinearMap rhs = m.act * am.subspace.corestrict(inner, "iterated action");
    compare(r, "assoc", lhs, rhs);
  });
  guarded(r, "unit", [&] {
    CotensorSpace c = cotensor(regular_bicomodule(a.base()), m.comodule);
    LinearMap lhs = m.act * am.subspace.corestrict(tensor_map(a.unit, id(f, dm)) * c.inclusion(), "unit image");
    compare(r, "unit", lhs, tensor_map(b.counit, id(f, dm)) * c.inclusion());
  });
  return r;
}

std::vector<LinearMap> module_hom_space(const TrimoduleModuleFD& m, const TrimoduleModuleFD& p) {
  require_same_base(m.comodule.base, p.comodule.base);
  const TrimoduleAlgebraFD& a = *m.algebra;
  std::size_t n = a.base()->dim, d = a.dim();
  CotensorSpace am = cotensor(a.carrier.bicomodule, m.comodule);
  CotensorSpace ap = cotensor(a.carrier.bicomodule, p.comodule);
  // act_P after selecting the coordinates of A box P
  LinearMap spread(a.base()->field, p.comodule.dim, d * p.comodule.dim);
  for (std::size_t k = 0; k < ap.dim(); ++k) {
    for (std::size_t i = 0; i < p.comodule.dim; ++i) spread.set(i, ap.subspace.coords()[k], p.act.at(i, k));
  }
  MatrixEquationSystem sys(a.base()->field, p.comodule.dim, m.comodule.dim);
  using T = MatrixEquationSystem::Term;
  sys.add_equation({T{Rational(1), nullptr, n, 1, &m.comodule.coaction}, T{Rational(-1), &p.comodule.coaction, 1, 1, nullptr}});
  sys.add_equation({T{Rational(1), nullptr, 1, 1, &m.act}, T{Rational(-1), &spread, d, 1, &am.inclusion()}});
  return sys.kernel();
}

bool is_module_morphism(const LinearMap& f, const TrimoduleModuleFD& m, const TrimoduleModuleFD& p) {
  if (!is_left_colinear(f, m.comodule, p.comodule)) return false;
  const TrimoduleAlgebraFD& a = *m.algebra;
  CotensorSpace am = cotensor(a.carrier.bicomodule, m.comodule);
  CotensorSpace ap = cotensor(a.carrier.bicomodule, p.comodule);
  auto lifted = ap.subspace.try_corestrict(tensor_map(id(f.field(), a.dim()), f) * am.inclusion());
  return lifted && f * m.act == p.act * *lifted;
}

JFunctor::JFunctor(AlgebraPtr bb, const LeftComoduleFD& m, const LeftComoduleFD& p) : bb_(std::move(bb)) {
  const BialgebraFD& b = *bb_->base();
  const Field& f = b.field;
  free_m_ = free_module(bb_, m);
  free_p_ = free_module(bb_, p);
  unit_m_ = module_unit_map(*bb_, m);
  CotensorSpace bp = cotensor(bb_->carrier.bicomodule, p);
  LinearMap ip = id(f, p.dim);
  collapse_ = tensor_map({b.counit, b.counit, ip}) * bp.inclusion();
  auto inv = inverse(tensor_map({b.id(), b.counit, ip}) * bp.inclusion());
  if (!inv) throw Error("corestriction-failure", "(B.B) box P does not collapse onto B (x) P");
  w_inv_ = *inv;
}

LinearMap JFunctor::to_linear(const LinearMap& sigma) const { return collapse_ * sigma * unit_m_; }

LinearMap JFunctor::from_linear(const LinearMap& phi) const {
  const BialgebraFD& b = *bb_->base();
  const LeftComoduleFD& m = *free_m_.free_on;
  LinearMap g = w_inv_ * tensor_map(b.id(), phi) * m.coaction;
  CotensorSpace from = cotensor(bb_->carrier.bicomodule, m);
  CotensorSpace to = cotensor(bb_->carrier.bicomodule, free_p_.comodule);
  return free_p_.act * cotensor_map(from, to, id(b.field, bb_->dim()), g);
}

JFunctor j_functor(const BasePtr& base, const LeftComoduleFD& m, const LeftComoduleFD& p) {
  return JFunctor(share(b_dot_b(base)), m, p);
}

LinearMap dual_coaction(const BicomoduleFD& a) {
  std::size_t n = a.base->dim, d = a.dim;
  LinearMap k(a.base->field, n * d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < d; ++i) {
        const Rational& v = a.right.at(j * n + c, i);
        if (!v.is_zero()) k.set(c * d + i, j, v);
      }
    }
  }
  return k;
}

CohomFD cohom(const HopfTrimoduleFD& a, const LeftComoduleFD& m) {
  require_same_base(a.base(), m.base);
  const BialgebraFD& b = *a.base();
  const Field& f = b.field;
  std::size_t n = b.dim, d = a.dim(), dm = m.dim;
  const LinearMap& la = a.bicomodule.left;
  const LinearMap& lm = m.coaction;
  LinearMap kappa = dual_coaction(a.bicomodule);

  // (beta_k |> a^j) (x) m_t - a^j (x) (m_t <| beta_k), then the subcomodule they generate
  std::vector<SparseRow> generators;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t t = 0; t < dm; ++t) {
        std::map<std::size_t, Rational> rel;
        for (std::size_t i = 0; i < d; ++i) {
          const Rational& v = la.at(k * d + j, i);
          if (!v.is_zero()) rel[i * dm + t] = f.add(rel[i * dm + t], v);
        }
        for (std::size_t s = 0; s < dm; ++s) {
          const Rational& v = lm.at(k * dm + s, t);
          if (!v.is_zero()) rel[j * dm + s] = f.sub(rel[j * dm + s], v);
        }
        for (std::size_t c = 0; c < n; ++c) {
          std::map<std::size_t, Rational> leg;
          for (const auto& [pos, v] : rel) {
            if (v.is_zero()) continue;
            std::size_t i = pos / dm, tt = pos % dm;
            for (std::size_t i2 = 0; i2 < d; ++i2) {
              const Rational& kv = kappa.at(c * d + i2, i);
              if (!kv.is_zero()) leg[i2 * dm + tt] = f.add(leg[i2 * dm + tt], f.mul(kv, v));
            }
          }
          SparseRow row;
          for (const auto& [pos, v] : leg) {
            if (!v.is_zero()) row.emplace_back(pos, v);
          }
          if (!row.empty()) generators.push_back(std::move(row));
        }
      }
    }
  }
  Cokernel q = quotient_by_rows(f, d * dm, generators);

  CohomFD out;
  out.algebra_dim = d;
  out.source = m;
  out.projection = q.projection;
  out.section = q.section;
  LinearMap coaction = kron_apply({Factor::id(n), Factor::of(q.projection)},
                                  kron_apply({Factor::of(kappa), Factor::id(dm)}, q.section));
  out.value = {m.base, q.dim, std::move(coaction), "cohom(" + a.label() + "," + m.label + ")"};
  LinearMap unit(f, d * q.dim, dm);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t c = 0; c < q.dim; ++c) {
      for (std::size_t t = 0; t < dm; ++t) {
        const Rational& v = q.projection.at(c, i * dm + t);
        if (!v.is_zero()) unit.set(i * q.dim + c, t, v);
      }
    }
  }
  out.a_box_value = cotensor(a.bicomodule, out.value);
  out.unit = out.a_box_value.subspace.corestrict(unit, "cohom adjunction unit");
  return out;
}

LinearMap cohom_transpose(const HopfTrimoduleFD& a, const CohomFD& c, const LeftComoduleFD& v, const LinearMap& h) {
  CotensorSpace av = cotensor(a.bicomodule, v);
  LinearMap amb = kron_apply({Factor::id(a.dim()), Factor::of(h)}, c.a_box_value.inclusion() * c.unit);
  return av.subspace.corestrict(amb, "transposed map into A box V");
}

LinearMap cohom_untranspose(const HopfTrimoduleFD& a, const CohomFD& c, const LeftComoduleFD& v, const LinearMap& g) {
  CotensorSpace av = cotensor(a.bicomodule, v);
  LinearMap amb = av.inclusion() * g;
  std::size_t d = a.dim(), dm = c.source.dim;
  LinearMap big(g.field(), v.dim, d * dm);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t x = 0; x < v.dim; ++x) {
      for (std::size_t t = 0; t < dm; ++t) big.set(x, j * dm + t, amb.at(j * v.dim + x, t));
    }
  }
  return big * c.section;
}

LinearMap cohom_map(const CohomFD& from, const CohomFD& to, const LinearMap& u) {
  return to.projection * tensor_map(id(u.field(), from.algebra_dim), u) * from.section;
}

Report certify_cohom(const HopfTrimoduleFD& a, const LeftComoduleFD& m, const std::vector<LeftComoduleFD>& pool,
                     std::size_t samples, unsigned seed) {
  Report r;
  r.subject = "cohom " + a.label() + " " + m.label;
  CohomFD c = cohom(a, m);
  for (const auto& v : pool) {
    CotensorSpace av = cotensor(a.bicomodule, v);
    LeftComoduleFD avl = av.as_left();
    auto left = comodule_hom_space(c.value, v);
    auto right = comodule_hom_space(m, avl);
    r.add("hom-dims " + v.label, left.size() == right.size(),
          std::to_string(left.size()) + " vs " + std::to_string(right.size()));
    bool round = true;
    std::string witness;
    for (const auto& h : left) {
      LinearMap g = cohom_transpose(a, c, v, h);
      if (!is_left_colinear(g, m, avl) || cohom_untranspose(a, c, v, g) != h) {
        round = false;
        witness = "transpose of a basis map does not return";
      }
    }
    for (const auto& g : right) {
      LinearMap h = cohom_untranspose(a, c, v, g);
      if (!is_left_colinear(h, c.value, v) || cohom_transpose(a, c, v, h) != g) {
        round = false;
        witness = "untranspose of a basis map does not return";
      }
    }
    r.add("round-trip " + v.label, round, witness);
  }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t done = 0, attempts = 0;
  while (done < samples && attempts < 50 * (samples + 1)) {
    ++attempts;
    const LeftComoduleFD& v = pool[pick(rng)];
    auto hs = comodule_hom_space(c.value, v);
    LinearMap h = hs.empty() ? LinearMap(v.coaction.field(), v.dim, c.value.dim) : random_combination(hs, rng);
    const LeftComoduleFD& w = pool[pick(rng)];
    if (done % 2 == 0) {
      auto fs = comodule_hom_space(v, w);
      if (fs.empty()) continue;
      LinearMap fv = random_combination(fs, rng);
      LinearMap along = cotensor_map(cotensor(a.bicomodule, v), cotensor(a.bicomodule, w), id(fv.field(), a.dim()), fv);
      compare(r, "natural-in-V " + std::to_string(done), cohom_transpose(a, c, w, fv * h),
              along * cohom_transpose(a, c, v, h));
    } else {
      auto us = comodule_hom_space(w, m);
      if (us.empty()) continue;
      LinearMap u = random_combination(us, rng);
      CohomFD cw = cohom(a, w);
      compare(r, "natural-in-M " + std::to_string(done), cohom_transpose(a, cw, v, h * cohom_map(cw, c, u)),
              cohom_transpose(a, c, v, h) * u);
    }
    ++done;
  }
  r.add("naturality-samples", done == samples,
        done == samples ? std::string() : "only " + std::to_string(done) + " squares sampled");
  return r;
}

LinearMap comonad_counit(const TrimoduleAlgebraFD& a, const CohomFD& c) {
  return cohom_untranspose(a.carrier, c, c.source, module_unit_map(a, c.source));
}

LinearMap comonad_comul(const AlgebraPtr& a, const CohomFD& c) {
  const HopfTrimoduleFD& x = a->carrier;
  CohomFD c2 = cohom(x, c.value);
  // M -> A box Q1 -> A box (A box Q2) -> A box Q2, applied to the columns only
  LinearMap lifted = kron_apply({Factor::id(x.dim()), Factor::of(c2.a_box_value.inclusion() * c2.unit)},
                                c.a_box_value.inclusion() * c.unit);
  LinearMap prod = mul_on(*a, a->square().subspace, 1, c2.value.dim, lifted);
  LinearMap g = c2.a_box_value.subspace.corestrict(prod, "comultiplication image");
  return cohom_untranspose(x, c, c2.value, g);
}

ContramoduleFD free_contramodule(const AlgebraPtr& a, const LeftComoduleFD& m) {
  CohomFD c = cohom(a->carrier, m);
  return {a, c.value, comonad_comul(a, c)};
}

Report contramodule_validate(const ContramoduleFD& c) {
  const TrimoduleAlgebraFD& a = *c.algebra;
  CohomFD cn = cohom(a.carrier, c.comodule);
  expect_shape(c.coact, cn.value.dim, c.comodule.dim, "contramodule coaction");
  Report r;
  r.subject = "contramodule";
  bool colinear = is_left_colinear(c.coact, c.comodule, cn.value);
  r.add("comodule-morphism", colinear, colinear ? std::string() : "coaction is not colinear");
  guarded(r, "coassoc", [&] {
    CohomFD ccn = cohom(a.carrier, cn.value);
    compare(r, "coassoc", comonad_comul(c.algebra, cn) * c.coact, cohom_map(cn, ccn, c.coact) * c.coact);
  });
  guarded(r, "counit", [&] {
    compare(r, "counit", comonad_counit(a, cn) * c.coact, id(c.coact.field(), c.comodule.dim));
  });
  return r;
}

std::vector<LinearMap> contramodule_hom_space(const ContramoduleFD& c, const ContramoduleFD& e) {
  require_same_base(c.comodule.base, e.comodule.base);
  const TrimoduleAlgebraFD& a = *c.algebra;
  std::size_t n = a.base()->dim;
  CohomFD cc = cohom(a.carrier, c.comodule), ce = cohom(a.carrier, e.comodule);
  LinearMap right = cc.section * c.coact;
  MatrixEquationSystem sys(a.base()->field, e.comodule.dim, c.comodule.dim);
  using T = MatrixEquationSystem::Term;
  sys.add_equation({T{Rational(1), nullptr, n, 1, &c.comodule.coaction}, T{Rational(-1), &e.comodule.coaction, 1, 1, nullptr}});
  sys.add_equation({T{Rational(1), &e.coact, 1, 1, nullptr}, T{Rational(-1), &ce.projection, a.dim(), 1, &right}});
  return sys.kernel();
}

LeftComoduleFD projective_generator(const BasePtr& base) {
  LeftComoduleFD p{base, base->dim, dual_coaction(regular_bicomodule(base)), "B*"};
  return p;
}

bool preserves_cokernels(const TrimoduleAlgebraFD& a, const std::vector<LeftComoduleFD>& pool) {
  const BialgebraFD& b = *a.base();
  for (const auto& m : pool) {
    for (const auto& p : pool) {
      for (const auto& f : comodule_hom_space(m, p)) {
        Cokernel ck = cokernel_projection(f);
        LinearMap coaction = tensor_map(b.id(), ck.projection) * p.coaction * ck.section;
        LeftComoduleFD k{a.base(), ck.dim, coaction, "coker"};
        CotensorSpace am = cotensor(a.carrier.bicomodule, m), ap = cotensor(a.carrier.bicomodule, p);
        LinearMap lifted = cotensor_map(am, ap, id(b.field, a.dim()), f);
        if (cotensor(a.carrier.bicomodule, k).dim() != ap.dim() - rank(lifted)) return false;
      }
    }
  }
  return true;
}

AlgebraFD endomorphism_algebra(const Field& f, std::size_t dim, const std::vector<LinearMap>& maps) {
  std::vector<LinearMap> cols;
  for (const auto& m : maps) cols.push_back(flatten(m));
  Subspace s = Subspace::span(hstack(cols, f, dim * dim));
  std::size_t e = s.dim();
  std::vector<LinearMap> basis;
  for (std::size_t k = 0; k < e; ++k) basis.push_back(unflatten(select_cols(s.inclusion(), {k}), dim, dim));
  AlgebraFD out{f, e, LinearMap(f, e, e * e), LinearMap(f, e, 1)};
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) {
      // opposite product: e_i e_j = e_j o e_i
      LinearMap c = s.corestrict(flatten(basis[j] * basis[i]), "composite of endomorphisms");
      for (std::size_t k = 0; k < e; ++k) out.mul.set(k, i * e + j, c.at(k, 0));
    }
  }
  out.unit = s.corestrict(flatten(id(f, dim)), "identity endomorphism");
  return out;
}

std::size_t center_dim(const AlgebraFD& e) {
  std::vector<LinearMap> blocks;
  for (std::size_t i = 0; i < e.dim; ++i) {
    LinearMap ei(e.field, e.dim, 1);
    ei.set(i, 0, Rational(1));
    blocks.push_back(e.mul * tensor_map(id(e.field, e.dim), ei) - e.mul * tensor_map(ei, id(e.field, e.dim)));
  }
  if (blocks.empty()) return 0;
  return kernel_basis(vstack(blocks, e.field, e.dim)).dim();
}

AlgebraFD module_endomorphism_algebra(const AlgebraPtr& a) {
  TrimoduleModuleFD free = free_module(a, projective_generator(a->base()));
  return endomorphism_algebra(a->base()->field, free.comodule.dim, module_hom_space(free, free));
}

AlgebraFD contramodule_endomorphism_algebra(const AlgebraPtr& a) {
  ContramoduleFD c = free_contramodule(a, regular_left(a->base()));
  return endomorphism_algebra(a->base()->field, c.comodule.dim, contramodule_hom_space(c, c));
}

bool is_semisimple_trimodule_algebra(const AlgebraPtr& a) {
  if (!a->base()->field.is_rational()) {
    throw Error("unsupported-field", "semisimplicity is decided in characteristic 0 only");
  }
  if (!preserves_cokernels(*a, comodule_pool(a->base()))) {
    throw Error("precondition-failure", "A box - does not preserve cokernels on the comodule pool");
  }
  return is_semisimple_algebra(module_endomorphism_algebra(a));
}

SimpleCounts contra_vs_modules_count(const AlgebraPtr& a) {
  if (!is_semisimple_trimodule_algebra(a)) throw Error("not-semisimple", a->label() + " is not semisimple");
  return {center_dim(module_endomorphism_algebra(a)), center_dim(contramodule_endomorphism_algebra(a))};
}

}  // namespace trimod
