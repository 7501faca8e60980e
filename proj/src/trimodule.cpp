#include "trimod/trimodule.hpp"

#include <random>

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

// chi formula on k^l (x) M (x) X (x) W: the M and X legs are interchanged.
LinearMap chi_formula_padded(const HopfTrimoduleFD& x, const LeftComoduleFD& m, std::size_t l, std::size_t w,
                             const LinearMap& v) {
  const BialgebraFD& b = *x.base();
  std::size_t n = b.dim;
  LinearMap legs = kron_apply({Factor::id(l), Factor::of(m.coaction), Factor::id(x.dim() * w)}, v);
  LinearMap sw = swap_map(b.field, m.dim, x.dim());
  LinearMap moved = kron_apply({Factor::id(l * n), Factor::of(sw), Factor::id(w)}, legs);
  return kron_apply({Factor::id(l), Factor::of(x.action), Factor::id(m.dim * w)}, moved);
}

std::string pair_name(const LeftComoduleFD& m, const LeftComoduleFD& n) { return "(" + m.label + "," + n.label + ")"; }

LinearMap random_combination(const std::vector<LinearMap>& basis, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  LinearMap out = scale(Rational(0), basis.front());
  for (const auto& h : basis) out = out + scale(Rational(coef(rng)), h);
  if (out.is_zero()) out = basis.front();
  return out;
}

}  // namespace

Report validate_trimodule(const HopfTrimoduleFD& x) {
  const BialgebraFD& b = *x.base();
  std::size_t n = b.dim, m = x.dim();
  expect_shape(x.action, m, n * m, "action");
  expect_shape(x.bicomodule.left, n * m, m, "left coaction");
  expect_shape(x.bicomodule.right, m * n, m, "right coaction");
  const LinearMap& alpha = x.action;
  const LinearMap& lambda = x.bicomodule.left;
  const LinearMap& rho = x.bicomodule.right;
  Report r;
  r.subject = "trimodule";

  compare(r, "module-assoc", alpha * tensor_map(b.mul, id(b.field, m)), alpha * tensor_map(id(b.field, n), alpha));
  compare(r, "module-unit", alpha * tensor_map(b.unit, id(b.field, m)), id(b.field, m));

  LinearMap dl = tensor_map(b.comul, lambda);
  dl = kron_apply({Factor::id(n), Factor::of(swap_map(b.field, n, n)), Factor::id(m)}, dl);
  compare(r, "left-colinear", lambda * alpha, kron_apply({Factor::of(b.mul), Factor::of(alpha)}, dl));

  LinearMap dr = tensor_map(b.comul, rho);
  dr = kron_apply({Factor::id(n), Factor::of(swap_map(b.field, n, m)), Factor::id(n)}, dr);
  compare(r, "right-colinear", rho * alpha, kron_apply({Factor::of(alpha), Factor::of(b.mul)}, dr));

  r.merge(validate_bicomodule(x.bicomodule));
  return r;
}

HopfTrimoduleFD regular_trimodule(const BasePtr& base) { return {regular_bicomodule(base), base->mul}; }

HopfTrimoduleFD trimodule_from_comodule(const LeftComoduleFD& m) {
  const BialgebraFD& b = *m.base;
  std::size_t n = b.dim, d = m.dim;
  LinearMap left = tensor_map(b.comul, m.coaction);
  left = kron_apply({Factor::id(n), Factor::of(swap_map(b.field, n, n)), Factor::id(d)}, left);
  left = kron_apply({Factor::of(b.mul), Factor::id(n * d)}, left);
  LinearMap right = kron_apply({Factor::id(n), Factor::of(swap_map(b.field, n, d))}, tensor_map(b.comul, id(b.field, d)));
  LinearMap action = tensor_map(b.mul, id(b.field, d));
  return {{m.base, n * d, std::move(left), std::move(right), "B⊗" + m.label}, std::move(action)};
}

LinearMap chi_formula(const HopfTrimoduleFD& x, const LeftComoduleFD& m, std::size_t w, const LinearMap& v) {
  return chi_formula_padded(x, m, 1, w, v);
}

Interchange interchange_data(const HopfTrimoduleFD& x, const LeftComoduleFD& m, const LeftComoduleFD& n) {
  require_same_base(x.base(), m.base);
  require_same_base(x.base(), n.base);
  Interchange out{cotensor(x.bicomodule, n), {}, tensor_comodules(m, n), {}};
  out.target = cotensor(x.bicomodule, out.m_tensor_n);
  LinearMap domain = tensor_map(id(x.base()->field, m.dim), out.inner.inclusion());
  LinearMap image = chi_formula(x, m, n.dim, domain);
  out.chi = out.target.subspace.corestrict(image, "interchange image in X box (M (x) N)");
  return out;
}

LinearMap interchange(const HopfTrimoduleFD& x, const LeftComoduleFD& m, const LeftComoduleFD& n) {
  return interchange_data(x, m, n).chi;
}

HopfTrimoduleFD trimodule_cotensor(const HopfTrimoduleFD& x, const HopfTrimoduleFD& y) {
  require_same_base(x.base(), y.base());
  const BialgebraFD& b = *x.base();
  std::size_t n = b.dim;
  CotensorSpace c = cotensor(x.bicomodule, y.bicomodule);
  std::string label = x.label().empty() || y.label().empty() ? std::string() : x.label() + "□" + y.label();
  LinearMap v = tensor_map(id(b.field, n), c.inclusion());
  v = kron_apply({Factor::of(b.comul), Factor::id(x.dim() * y.dim())}, v);
  v = kron_apply({Factor::id(n), Factor::of(swap_map(b.field, n, x.dim())), Factor::id(y.dim())}, v);
  v = kron_apply({Factor::of(x.action), Factor::of(y.action)}, v);
  LinearMap action = c.subspace.corestrict(v, "diagonal action on the cotensor product");
  return {c.as_bicomodule(label), std::move(action)};
}

Subspace triple_cotensor(const HopfTrimoduleFD& x, const HopfTrimoduleFD& y, const LeftComoduleFD& n) {
  require_same_base(x.base(), y.base());
  Subspace xy = cotensor(x.bicomodule, y.bicomodule).subspace;
  Subspace yn = cotensor(y.bicomodule, n).subspace;
  return subspace_intersection(padded(xy, 1, n.dim), padded(yn, x.dim(), 1));
}

ComposedInterchange compose_interchange(const HopfTrimoduleFD& x, const HopfTrimoduleFD& y,
                                        const LeftComoduleFD& m, const LeftComoduleFD& n) {
  const Field& f = x.base()->field;
  Subspace domain = padded(triple_cotensor(x, y, n), m.dim, 1);
  LeftComoduleFD mn = tensor_comodules(m, n);
  Subspace target = triple_cotensor(x, y, mn);

  LinearMap first = chi_formula_padded(x, m, 1, y.dim() * n.dim, domain.inclusion());
  LinearMap second = chi_formula_padded(y, m, x.dim(), n.dim, first);
  ComposedInterchange out;
  out.composite = target.corestrict(second, "composite interchange image in X box Y box (M (x) N)");

  // chi^{X box Y} in its own coordinates, moved onto the same subspaces.
  HopfTrimoduleFD xy = trimodule_cotensor(x, y);
  Interchange direct = interchange_data(xy, m, n);
  CotensorSpace xy_space = cotensor(x.bicomodule, y.bicomodule);
  const LinearMap& xy_incl = xy_space.inclusion();
  LinearMap dom_embed = tensor_map(id(f, m.dim), kron_apply({Factor::of(xy_incl), Factor::id(n.dim)},
                                                            direct.inner.inclusion()));
  LinearMap cod_embed = kron_apply({Factor::of(xy_incl), Factor::id(mn.dim)}, direct.target.inclusion());
  auto back = inverse(domain.coordinates(dom_embed));
  if (!back) throw Error("corestriction-failure", "iterated cotensor bases do not span the same subspace");
  out.direct = target.coordinates(cod_embed * direct.chi) * *back;
  return out;
}

StructureTheorem structure_theorem_check(const HopfTrimoduleFD& x) {
  const BialgebraFD& b = *x.base();
  const Field& f = b.field;
  std::size_t n = b.dim, m = x.dim();
  const LinearMap& rho = x.bicomodule.right;
  StructureTheorem out;
  out.coinvariants = right_coinvariants(x.bicomodule);
  std::size_t c = out.coinvariants.dim();
  out.backward = x.action * tensor_map(id(f, n), out.coinvariants.inclusion());
  LinearMap sw = swap_map(f, c, n);
  out.tau = LinearMap(f, c, m);

  auto forward_of = [&](const LinearMap& tau) { return sw * tensor_map(tau, id(f, n)) * rho; };
  auto inverse_pair = [&](const LinearMap& fw) {
    return out.backward * fw == id(f, m) && fw * out.backward == id(f, n * c);
  };

  AntipodeSearch twisted = find_twisted_antipode(b);
  if (twisted.antipode) {
    LinearMap full = x.action * tensor_map(*twisted.antipode, id(f, m)) * swap_map(f, m, n) * rho;
    if (auto tau = out.coinvariants.try_corestrict(full)) {
      out.tau = *tau;
      out.forward = forward_of(out.tau);
      out.is_iso = inverse_pair(out.forward);
    }
  }
  if (!out.is_iso) {
    MatrixEquationSystem sys(f, c, m);
    LinearMap left = out.backward * sw;
    LinearMap right = rho * out.backward;
    LinearMap id_x = id(f, m), id_bc = id(f, n * c);
    sys.add_equation({{Rational(1), &left, 1, n, &rho}}, &id_x);
    sys.add_equation({{Rational(1), &sw, 1, n, &right}}, &id_bc);
    auto sol = sys.solve();
    if (sol.x) {
      out.tau = *sol.x;
      out.used_fallback = true;
      out.forward = forward_of(out.tau);
      out.is_iso = inverse_pair(out.forward);
    }
  }
  if (out.forward.rows() == 0 && out.forward.cols() == 0) out.forward = forward_of(out.tau);
  if (!out.is_iso) {
    if (n * c != m) {
      out.witness = "dim B⊗X^coB = " + std::to_string(n * c) + " vs dim X = " + std::to_string(m);
    } else {
      out.witness = "no linear map tau makes the restricted action invertible";
    }
  }
  return out;
}

std::vector<LinearMap> trimodule_hom_space(const HopfTrimoduleFD& x, const HopfTrimoduleFD& y) {
  require_same_base(x.base(), y.base());
  std::size_t n = x.base()->dim;
  MatrixEquationSystem sys(x.base()->field, y.dim(), x.dim());
  using T = MatrixEquationSystem::Term;
  sys.add_equation({T{Rational(1), nullptr, n, 1, &x.bicomodule.left}, T{Rational(-1), &y.bicomodule.left, 1, 1, nullptr}});
  sys.add_equation({T{Rational(1), nullptr, 1, n, &x.bicomodule.right}, T{Rational(-1), &y.bicomodule.right, 1, 1, nullptr}});
  sys.add_equation({T{Rational(1), nullptr, 1, 1, &x.action}, T{Rational(-1), &y.action, n, 1, nullptr}});
  return sys.kernel();
}

bool is_trimodule_morphism(const LinearMap& f, const HopfTrimoduleFD& x, const HopfTrimoduleFD& y) {
  require_same_base(x.base(), y.base());
  const Field& k = x.base()->field;
  std::size_t n = x.base()->dim;
  LinearMap in = id(k, n);
  return tensor_map(in, f) * x.bicomodule.left == y.bicomodule.left * f &&
         tensor_map(f, in) * x.bicomodule.right == y.bicomodule.right * f &&
         f * x.action == y.action * tensor_map(in, f);
}

LinearMap cotensor_map(const CotensorSpace& from, const CotensorSpace& to, const LinearMap& f, const LinearMap& g) {
  return to.subspace.corestrict(tensor_map(f, g) * from.inclusion(), "induced map between cotensor products");
}

Report interchange_suite(const HopfTrimoduleFD& x, const std::vector<LeftComoduleFD>& pool,
                         std::size_t morphism_samples, unsigned seed) {
  const BialgebraFD& b = *x.base();
  const Field& f = b.field;
  std::size_t n = b.dim;
  Report r;
  r.subject = "interchange " + x.label();

  for (const auto& m : pool) {
    for (const auto& p : pool) {
      std::string tag = pair_name(m, p);
      Interchange data;
      try {
        data = interchange_data(x, m, p);
      } catch (const Error& e) {
        r.add("image-containment " + tag, false, e.what());
        continue;
      }
      r.add("image-containment " + tag, true);
      LeftComoduleFD dom = tensor_comodules(m, data.inner.as_left());
      compare(r, "left-colinear " + tag, *data.target.left * data.chi, tensor_map(id(f, n), data.chi) * dom.coaction);
    }
  }

  LeftComoduleFD k = trivial_left(x.base());
  for (const auto& p : pool) {
    compare(r, "unit-triangle " + p.label, interchange(x, k, p), id(f, cotensor(x.bicomodule, p).dim()));
  }

  for (const auto& m : pool) {
    for (const auto& m2 : pool) {
      for (const auto& p : pool) {
        std::string tag = "(" + m.label + "," + m2.label + "," + p.label + ")";
        LeftComoduleFD mm = tensor_comodules(m, m2);
        Interchange outer = interchange_data(x, mm, p);
        Interchange inner = interchange_data(x, m2, p);
        Interchange last = interchange_data(x, m, inner.m_tensor_n);
        bool same_target = outer.target.subspace == last.target.subspace;
        if (!same_target) {
          r.add("hexagon " + tag, false, "targets differ as subspaces");
          continue;
        }
        compare(r, "hexagon " + tag, outer.chi, last.chi * tensor_map(id(f, m.dim), inner.chi));
      }
    }
  }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t done = 0, attempts = 0;
  while (done < morphism_samples && attempts < 50 * (morphism_samples + 1)) {
    ++attempts;
    const LeftComoduleFD& a = pool[pick(rng)];
    const LeftComoduleFD& a2 = pool[pick(rng)];
    const LeftComoduleFD& other = pool[pick(rng)];
    auto homs = comodule_hom_space(a, a2);
    if (homs.empty()) continue;
    LinearMap h = random_combination(homs, rng);
    std::string tag = std::to_string(done) + " " + a.label + "->" + a2.label;
    if (done % 2 == 0) {
      // naturality in M
      Interchange src = interchange_data(x, a, other), dst = interchange_data(x, a2, other);
      LinearMap along = cotensor_map(src.target, dst.target, id(f, x.dim()), tensor_map(h, id(f, other.dim)));
      compare(r, "natural-in-M " + tag, dst.chi * tensor_map(h, id(f, src.inner.dim())), along * src.chi);
    } else {
      // naturality in N
      Interchange src = interchange_data(x, other, a), dst = interchange_data(x, other, a2);
      LinearMap inner_map = cotensor_map(src.inner, dst.inner, id(f, x.dim()), h);
      LinearMap along = cotensor_map(src.target, dst.target, id(f, x.dim()), tensor_map(id(f, other.dim), h));
      compare(r, "natural-in-N " + tag, dst.chi * tensor_map(id(f, other.dim), inner_map), along * src.chi);
    }
    ++done;
  }
  r.add("naturality-samples", done == morphism_samples,
        done == morphism_samples ? std::string() : "only " + std::to_string(done) + " morphisms sampled");
  return r;
}

Report intertwining_suite(const HopfTrimoduleFD& x, const HopfTrimoduleFD& y, const std::vector<LinearMap>& morphisms,
                          const std::vector<LeftComoduleFD>& pool) {
  const Field& f = x.base()->field;
  Report r;
  r.subject = "intertwining " + x.label() + " -> " + y.label();
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const LinearMap& h = morphisms[i];
    r.add("morphism " + std::to_string(i), is_trimodule_morphism(h, x, y));
    for (const auto& m : pool) {
      for (const auto& p : pool) {
        Interchange cx = interchange_data(x, m, p), cy = interchange_data(y, m, p);
        LinearMap outer = cotensor_map(cx.target, cy.target, h, id(f, m.dim * p.dim));
        LinearMap inner = cotensor_map(cx.inner, cy.inner, h, id(f, p.dim));
        compare(r, "intertwine " + std::to_string(i) + " " + pair_name(m, p), outer * cx.chi,
                cy.chi * tensor_map(id(f, m.dim), inner));
      }
    }
  }
  return r;
}

Report unitor_suite(const HopfTrimoduleFD& x) {
  const BialgebraFD& b = *x.base();
  const Field& f = b.field;
  std::size_t n = b.dim, m = x.dim();
  HopfTrimoduleFD reg = regular_trimodule(x.base());
  Report r;
  r.subject = "unitors " + x.label();
  for (bool right : {true, false}) {
    std::string side = right ? "right-unitor" : "left-unitor";
    CotensorSpace c = right ? cotensor(x.bicomodule, reg.bicomodule) : cotensor(reg.bicomodule, x.bicomodule);
    HopfTrimoduleFD t = right ? trimodule_cotensor(x, reg) : trimodule_cotensor(reg, x);
    LinearMap u = (right ? tensor_map(id(f, m), b.counit) : tensor_map(b.counit, id(f, m))) * c.inclusion();
    bool bijective = u.rows() == u.cols() && inverse(u).has_value();
    r.add(side + " bijective", bijective, bijective ? std::string() : "counit map is " + shape_string(u) + " and not invertible");
    if (!bijective) continue;
    compare(r, side + " left-coaction", x.bicomodule.left * u, tensor_map(id(f, n), u) * t.bicomodule.left);
    compare(r, side + " right-coaction", x.bicomodule.right * u, tensor_map(u, id(f, n)) * t.bicomodule.right);
    compare(r, side + " action", x.action * tensor_map(id(f, n), u), u * t.action);
  }
  return r;
}

}  // namespace trimod
