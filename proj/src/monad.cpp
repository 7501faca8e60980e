#include "trimod/monad.hpp"

#include <random>

namespace trimod {

namespace {

LinearMap id(const Field& f, std::size_t n) { return LinearMap::identity(f, n); }

void compare(Report& r, const std::string& name, const LinearMap& a, const LinearMap& b) {
  bool same = a == b;
  r.add(name, same, same ? std::string() : mismatch_witness(a, b));
}

template <class F>
void guarded(Report& r, const std::string& name, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    r.add(name, false, e.what());
  }
}

LinearMap combination(const std::vector<LinearMap>& basis, std::size_t rows, std::size_t cols, const Field& f,
                      std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  LinearMap out(f, rows, cols);
  for (const auto& h : basis) out = out + scale(Rational(coef(rng)), h);
  if (out.is_zero() && !basis.empty()) out = basis.front();
  return out;
}

// phi with phi * projection = g; throws descent-failure when g does not
// vanish on the kernel of the projection.
LinearMap descend(const LinearMap& g, const LinearMap& projection, const LinearMap& section, const std::string& what) {
  LinearMap phi = g * section;
  if (phi * projection != g) throw Error("descent-failure", what + " does not factor through the coequalizer");
  return phi;
}

bool same_comodule(const LeftComoduleFD& a, const LeftComoduleFD& b) {
  return a.dim == b.dim && a.coaction == b.coaction;
}

void require_pointed(const BialgebraFD& b) {
  for (std::size_t z = 0; z < b.dim; ++z) {
    if (!is_grouplike(b, z)) throw Error("unsupported-base", "basis vector " + b.basis[z] + " is not grouplike");
  }
}

bool is_pointed(const BialgebraFD& b) {
  for (std::size_t z = 0; z < b.dim; ++z) {
    if (!is_grouplike(b, z)) return false;
  }
  return true;
}

}  // namespace

MonadInstanceFD::MonadInstanceFD(AlgebraPtr a) : a_(std::move(a)) {
  if (!a_) throw Error("shape-mismatch", "monad needs an algebra");
}

CotensorSpace MonadInstanceFD::space(const LeftComoduleFD& m) const {
  require_same_base(base(), m.base);
  return cotensor(a_->carrier.bicomodule, m);
}

LeftComoduleFD MonadInstanceFD::apply(const LeftComoduleFD& m) const {
  return space(m).as_left(a_->label() + "□" + m.label);
}

LinearMap MonadInstanceFD::apply(const LeftComoduleFD& m, const LeftComoduleFD& n, const LinearMap& f) const {
  return cotensor_map(space(m), space(n), id(base()->field, a_->dim()), f);
}

LinearMap MonadInstanceFD::unit(const LeftComoduleFD& m) const { return module_unit_map(*a_, m); }

LinearMap MonadInstanceFD::mul(const LeftComoduleFD& m) const { return free(m).act; }

LinearMap MonadInstanceFD::interchange(const LeftComoduleFD& v, const LeftComoduleFD& m) const {
  return trimod::interchange(a_->carrier, v, m);
}

TrimoduleModuleFD MonadInstanceFD::free(const LeftComoduleFD& m) const { return free_module(a_, m); }

Report validate_monad(const MonadInstanceFD& t, const std::vector<LeftComoduleFD>& pool) {
  const Field& f = t.base()->field;
  Report r;
  r.subject = "monad " + t.algebra()->label();
  for (const auto& m : pool) {
    guarded(r, "laws " + m.label, [&] {
      LeftComoduleFD tm = t.apply(m), ttm = t.apply(tm);
      LinearMap mu = t.mul(m);
      LinearMap one = id(f, tm.dim);
      compare(r, "left-unit " + m.label, mu * t.unit(tm), one);
      compare(r, "right-unit " + m.label, mu * t.apply(m, tm, t.unit(m)), one);
      compare(r, "assoc " + m.label, mu * t.mul(tm), mu * t.apply(ttm, tm, mu));
    });
  }
  for (const auto& v : pool) {
    for (const auto& m : pool) {
      std::string at = v.label + "," + m.label;
      guarded(r, "module-transformations " + at, [&] {
        LeftComoduleFD vm = tensor_comodules(v, m), tm = t.apply(m);
        LinearMap chi = t.interchange(v, m);
        compare(r, "unit-module " + at, chi * tensor_map(id(f, v.dim), t.unit(m)), t.unit(vm));
        LinearMap lhs = t.mul(vm) * t.apply(tensor_comodules(v, tm), t.apply(vm), chi) * t.interchange(v, tm);
        compare(r, "mul-module " + at, lhs, chi * tensor_map(id(f, v.dim), t.mul(m)));
      });
    }
  }
  return r;
}

FreeForgetful::FreeForgetful(const MonadInstanceFD& t, LeftComoduleFD x, TrimoduleModuleFD y)
    : t_(&t), x_(std::move(x)), y_(std::move(y)) {
  require_same_base(t.base(), x_.base);
  require_same_base(t.base(), y_.comodule.base);
  free_ = t.free(x_);
  eta_ = t.unit(x_);
}

LinearMap FreeForgetful::to_comodule_map(const LinearMap& f) const { return f * eta_; }

LinearMap FreeForgetful::to_module_map(const LinearMap& g) const {
  return y_.act * t_->apply(x_, y_.comodule, g);
}

FreeForgetful free_forgetful_iso(const MonadInstanceFD& t, const LeftComoduleFD& x, const TrimoduleModuleFD& y) {
  return FreeForgetful(t, x, y);
}

Report certify_free_forgetful(const MonadInstanceFD& t, const LeftComoduleFD& x, const TrimoduleModuleFD& y,
                              const std::vector<LeftComoduleFD>& pool, std::size_t samples, unsigned seed) {
  const Field& f = t.base()->field;
  FreeForgetful iso(t, x, y);
  const TrimoduleModuleFD& tx = iso.free();
  std::size_t dy = y.comodule.dim;
  Report r;
  r.subject = "free-forgetful " + x.label;

  auto homs_mod = module_hom_space(tx, y);
  auto homs_co = comodule_hom_space(x, y.comodule);
  r.add("hom-dims", homs_mod.size() == homs_co.size(),
        std::to_string(homs_mod.size()) + " module maps vs " + std::to_string(homs_co.size()) + " comodule maps");

  std::string w;
  for (const auto& h : homs_mod) {
    LinearMap back = iso.to_module_map(iso.to_comodule_map(h));
    if (back != h && w.empty()) w = "module side: " + mismatch_witness(back, h);
  }
  for (const auto& g : homs_co) {
    LinearMap lifted = iso.to_module_map(g);
    if (!is_module_morphism(lifted, tx, y) && w.empty()) w = "lift is not a module map";
    LinearMap back = iso.to_comodule_map(lifted);
    if (back != g && w.empty()) w = "comodule side: " + mismatch_witness(back, g);
  }
  r.add("round-trip", w.empty(), w);

  std::mt19937 rng(seed);
  auto endos = module_hom_space(y, y);
  w.clear();
  for (std::size_t i = 0; i < samples && w.empty() && !pool.empty(); ++i) {
    LinearMap fm = combination(homs_mod, dy, tx.comodule.dim, f, rng);
    LinearMap g = combination(homs_co, dy, x.dim, f, rng);
    if (i % 2 == 0) {
      const LeftComoduleFD& x2 = pool[(i / 2) % pool.size()];
      LinearMap u = combination(comodule_hom_space(x2, x), x.dim, x2.dim, f, rng);
      FreeForgetful iso2(t, x2, y);
      LinearMap tu = t.apply(x2, x, u);
      LinearMap a = iso2.to_comodule_map(fm * tu), b = iso.to_comodule_map(fm) * u;
      if (a != b) w = "in X via " + x2.label + ": " + mismatch_witness(a, b);
      a = iso2.to_module_map(g * u);
      b = iso.to_module_map(g) * tu;
      if (a != b && w.empty()) w = "lift in X via " + x2.label + ": " + mismatch_witness(a, b);
    } else {
      LinearMap p = combination(endos, dy, dy, f, rng);
      LinearMap a = iso.to_comodule_map(p * fm), b = p * iso.to_comodule_map(fm);
      if (a != b) w = "in Y: " + mismatch_witness(a, b);
      a = iso.to_module_map(p * g);
      b = p * iso.to_module_map(g);
      if (a != b && w.empty()) w = "lift in Y: " + mismatch_witness(a, b);
    }
  }
  r.add("naturality", w.empty(), w);
  return r;
}

LintonCoequalizer linton_coequalizer(const MonadInstanceFD& t, const LeftComoduleFD& v, const TrimoduleModuleFD& m) {
  require_same_base(t.base(), v.base);
  require_same_base(t.base(), m.comodule.base);
  const BialgebraFD& b = *t.base();
  const Field& f = b.field;
  const LeftComoduleFD& mc = m.comodule;
  LeftComoduleFD vtm = tensor_comodules(v, t.apply(mc));
  LeftComoduleFD vm = tensor_comodules(v, mc);
  LeftComoduleFD tvm = t.apply(vm);

  LintonCoequalizer out;
  out.v_tensor_m = vm;
  out.first = t.apply(vtm, vm, tensor_map(id(f, v.dim), m.act));
  out.second = t.mul(vm) * t.apply(vtm, tvm, t.interchange(v, mc));
  Cokernel c = cokernel_projection(out.first - out.second);
  out.projection = c.projection;
  out.section = c.section;

  LinearMap pushed = tensor_map(id(f, b.dim), c.projection) * tvm.coaction;
  LeftComoduleFD q{t.base(), c.dim, descend(pushed, c.projection, c.section, "coaction"),
                   v.label + "▶" + mc.label};
  LinearMap tpi = t.apply(tvm, q, c.projection);
  auto lift = solve_right_inverse(tpi);
  if (!lift) throw Error("descent-failure", "A box - does not preserve the coequalizer");
  LinearMap target = c.projection * t.mul(vm);
  LinearMap act = target * *lift;
  if (act * tpi != target) throw Error("descent-failure", "action does not factor through the coequalizer");
  out.module = {t.algebra(), std::move(q), std::move(act), std::nullopt};
  return out;
}

TrimoduleModuleFD linton_action(const MonadInstanceFD& t, const LeftComoduleFD& v, const TrimoduleModuleFD& m) {
  return linton_coequalizer(t, v, m).module;
}

LinearMap linton_map(const MonadInstanceFD& t, const LeftComoduleFD& v, const LintonCoequalizer& from,
                     const LintonCoequalizer& to, const LinearMap& f) {
  LinearMap g = to.projection * t.apply(from.v_tensor_m, to.v_tensor_m, tensor_map(id(f.field(), v.dim), f));
  return descend(g, from.projection, from.section, "V |> f");
}

LinearMap linton_map(const MonadInstanceFD& t, const LintonCoequalizer& from, const LintonCoequalizer& to,
                     const LeftComoduleFD& m_comodule, const LinearMap& u) {
  LinearMap g = to.projection * t.apply(from.v_tensor_m, to.v_tensor_m, tensor_map(u, id(u.field(), m_comodule.dim)));
  return descend(g, from.projection, from.section, "u |> M");
}

LinearMap linton_unitor(const MonadInstanceFD& t, const TrimoduleModuleFD& m) {
  LeftComoduleFD k = trivial_left(t.base());
  LintonCoequalizer c = linton_coequalizer(t, k, m);
  if (!same_comodule(c.v_tensor_m, m.comodule)) throw Error("shape-mismatch", "k (x) M differs from M");
  return descend(m.act, c.projection, c.section, "unitor");
}

LinearMap linton_free_iso(const MonadInstanceFD& t, const LeftComoduleFD& v, const LeftComoduleFD& x) {
  LintonCoequalizer c = linton_coequalizer(t, v, t.free(x));
  LeftComoduleFD vx = tensor_comodules(v, x);
  LeftComoduleFD vtx = tensor_comodules(v, t.apply(x));
  LinearMap g = t.mul(vx) * t.apply(vtx, t.apply(vx), t.interchange(v, x));
  return descend(g, c.projection, c.section, "free comparison");
}

LinearMap linton_associator(const MonadInstanceFD& t, const LeftComoduleFD& v, const LeftComoduleFD& w,
                            const TrimoduleModuleFD& m) {
  const Field& f = t.base()->field;
  LintonCoequalizer src = linton_coequalizer(t, tensor_comodules(v, w), m);
  LintonCoequalizer inner = linton_coequalizer(t, w, m);
  LintonCoequalizer dst = linton_coequalizer(t, v, inner.module);
  LinearMap h = inner.projection * t.unit(inner.v_tensor_m);
  LinearMap g = dst.projection * t.apply(src.v_tensor_m, dst.v_tensor_m, tensor_map(id(f, v.dim), h));
  return descend(g, src.projection, src.section, "associator");
}

namespace {

void check_iso(Report& r, const std::string& name, const LinearMap& phi, const TrimoduleModuleFD& from,
               const TrimoduleModuleFD& to) {
  if (!inverse(phi)) {
    r.add(name, false, "not invertible: " + shape_string(phi) + " of rank " + std::to_string(rank(phi)));
    return;
  }
  bool ok = is_module_morphism(phi, from, to);
  r.add(name, ok, ok ? std::string() : "not a module map");
}

}  // namespace

Report linton_isomorphisms(const MonadInstanceFD& t, const LeftComoduleFD& v, const LeftComoduleFD& w,
                           const TrimoduleModuleFD& m) {
  Report r;
  r.subject = "linton " + v.label + "," + w.label + "," + m.comodule.label;
  LeftComoduleFD k = trivial_left(t.base());
  guarded(r, "unitor", [&] {
    check_iso(r, "unitor", linton_unitor(t, m), linton_action(t, k, m), m);
  });
  guarded(r, "free-iso", [&] {
    const LeftComoduleFD& x = m.comodule;
    check_iso(r, "free-iso", linton_free_iso(t, v, x), linton_action(t, v, t.free(x)), t.free(tensor_comodules(v, x)));
  });
  guarded(r, "associator", [&] {
    TrimoduleModuleFD src = linton_action(t, tensor_comodules(v, w), m);
    TrimoduleModuleFD dst = linton_action(t, v, linton_action(t, w, m));
    check_iso(r, "associator", linton_associator(t, v, w, m), src, dst);
  });
  return r;
}

Report check_linton_coherence(const MonadInstanceFD& t, const std::vector<LintonSample>& samples) {
  const Field& f = t.base()->field;
  LeftComoduleFD k = trivial_left(t.base());
  Report r;
  r.subject = "linton coherence " + t.algebra()->label();
  for (const auto& s : samples) {
    const LeftComoduleFD &v = s.v, &w = s.w;
    const TrimoduleModuleFD& m = s.m;
    std::string at = v.label + "," + w.label + "," + m.comodule.label;

    guarded(r, "pentagon " + at, [&] {
      // U = V, then W, then V again
      const LeftComoduleFD &u = v, &v2 = w, &w2 = v;
      TrimoduleModuleFD w_m = linton_action(t, w2, m);
      LinearMap lhs = linton_associator(t, u, v2, w_m) * linton_associator(t, tensor_comodules(u, v2), w2, m);
      LeftComoduleFD vw = tensor_comodules(v2, w2);
      LintonCoequalizer from = linton_coequalizer(t, u, linton_action(t, vw, m));
      LintonCoequalizer to = linton_coequalizer(t, u, linton_action(t, v2, w_m));
      LinearMap rhs = linton_map(t, u, from, to, linton_associator(t, v2, w2, m)) * linton_associator(t, u, vw, m);
      TrimoduleModuleFD left_src = linton_action(t, tensor_comodules(tensor_comodules(u, v2), w2), m);
      TrimoduleModuleFD right_src = linton_action(t, tensor_comodules(u, vw), m);
      if (!same_comodule(left_src.comodule, right_src.comodule)) {
        r.add("pentagon " + at, false, "sources differ");
        return;
      }
      compare(r, "pentagon " + at, lhs, rhs);
    });

    guarded(r, "triangle " + at, [&] {
      LinearMap a = linton_associator(t, v, k, m);
      LintonCoequalizer from = linton_coequalizer(t, v, linton_action(t, k, m));
      LintonCoequalizer to = linton_coequalizer(t, v, m);
      LinearMap right = linton_map(t, v, from, to, linton_unitor(t, m)) * a;
      compare(r, "triangle " + at, right, id(f, right.rows()));
      TrimoduleModuleFD vm = linton_action(t, v, m);
      LinearMap left = linton_unitor(t, vm) * linton_associator(t, k, v, m);
      compare(r, "left-triangle " + at, left, id(f, left.rows()));
    });

    guarded(r, "strong " + at, [&] {
      const LeftComoduleFD& x = m.free_on ? *m.free_on : m.comodule;
      TrimoduleModuleFD tx = t.free(x);
      LeftComoduleFD wx = tensor_comodules(w, x);
      LinearMap direct = linton_free_iso(t, tensor_comodules(v, w), x);
      LintonCoequalizer from = linton_coequalizer(t, v, linton_action(t, w, tx));
      LintonCoequalizer to = linton_coequalizer(t, v, t.free(wx));
      LinearMap via = linton_free_iso(t, v, wx) * linton_map(t, v, from, to, linton_free_iso(t, w, x)) *
                      linton_associator(t, v, w, tx);
      compare(r, "strong " + at, direct, via);
      compare(r, "strong-unit " + at, linton_free_iso(t, k, x), linton_unitor(t, tx));
    });
  }
  return r;
}

std::vector<std::size_t> graded_dims(const LeftComoduleFD& m) {
  const BialgebraFD& b = *m.base;
  require_pointed(b);
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < b.dim; ++z) {
    LinearMap ez(b.field, b.dim, 1);
    ez.set(z, 0, Rational(1));
    out.push_back(m.dim - rank(m.coaction - tensor_map(ez, id(b.field, m.dim))));
  }
  return out;
}

std::vector<std::size_t> internal_hom_components(const MonadInstanceFD& t, const TrimoduleModuleFD& n) {
  const BialgebraFD& b = *t.base();
  require_pointed(b);
  TrimoduleModuleFD x = t.free(trivial_left(t.base()));
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < b.dim; ++z) {
    TrimoduleModuleFD vx = linton_action(t, simple_graded_comodule(t.base(), z), x);
    out.push_back(module_hom_space(vx, n).size());
  }
  return out;
}

Report reconstruction_identity(const MonadInstanceFD& t, const std::vector<LeftComoduleFD>& pool,
                               std::size_t samples, unsigned seed) {
  const BialgebraFD& b = *t.base();
  const Field& f = b.field;
  LeftComoduleFD k = trivial_left(t.base());
  TrimoduleModuleFD x = t.free(k);
  Report r;
  r.subject = "reconstruction " + t.algebra()->label();

  struct Side {
    LintonCoequalizer c;
    LinearMap to_free;    // V |> X -> T(V)
    LinearMap from_free;  // T(V) -> V |> X
    LinearMap eta;        // V -> T(V)
    LeftComoduleFD vk;
  };
  std::vector<Side> sides;
  for (const auto& v : pool) {
    LintonCoequalizer c = linton_coequalizer(t, v, x);
    LinearMap phi = linton_free_iso(t, v, k);
    auto inv = inverse(phi);
    if (!inv) throw Error("descent-failure", "V |> T(k) is not free on " + v.label);
    LeftComoduleFD vk = tensor_comodules(v, k);
    LinearMap eta = t.unit(vk);
    sides.push_back({std::move(c), std::move(phi), std::move(*inv), std::move(eta), std::move(vk)});
  }
  auto forward = [&](std::size_t i, const LinearMap& h) { return h * sides[i].from_free * sides[i].eta; };
  auto backward = [&](std::size_t i, const TrimoduleModuleFD& m, const LinearMap& g) {
    return m.act * t.apply(sides[i].vk, m.comodule, g) * sides[i].to_free;
  };

  std::vector<TrimoduleModuleFD> targets;
  for (const auto& p : pool) targets.push_back(t.free(p));

  std::string dims_w, trip_w;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (const auto& m : targets) {
      auto homs_mod = module_hom_space(sides[i].c.module, m);
      auto homs_co = comodule_hom_space(pool[i], m.comodule);
      if (homs_mod.size() != homs_co.size() && dims_w.empty()) {
        dims_w = pool[i].label + " into " + m.comodule.label + ": " + std::to_string(homs_mod.size()) + " vs " +
                 std::to_string(homs_co.size());
      }
      for (const auto& h : homs_mod) {
        LinearMap back = backward(i, m, forward(i, h));
        if (back != h && trip_w.empty()) trip_w = "module side: " + mismatch_witness(back, h);
      }
      for (const auto& g : homs_co) {
        LinearMap back = forward(i, backward(i, m, g));
        if (back != g && trip_w.empty()) trip_w = "comodule side: " + mismatch_witness(back, g);
      }
    }
  }
  r.add("hom-dims", dims_w.empty(), dims_w);
  r.add("round-trip", trip_w.empty(), trip_w);

  std::mt19937 rng(seed);
  std::string nat_w;
  for (std::size_t s = 0; s < samples && nat_w.empty() && !pool.empty(); ++s) {
    std::size_t i = s % pool.size();
    const TrimoduleModuleFD& m = targets[(s / pool.size()) % targets.size()];
    LinearMap h = combination(module_hom_space(sides[i].c.module, m), m.comodule.dim, sides[i].c.module.comodule.dim,
                              f, rng);
    if (s % 2 == 0) {
      std::size_t j = (s / 2) % pool.size();
      LinearMap u = combination(comodule_hom_space(pool[j], pool[i]), pool[i].dim, pool[j].dim, f, rng);
      LinearMap ux = linton_map(t, sides[j].c, sides[i].c, x.comodule, u);
      LinearMap a = forward(j, h * ux), c = forward(i, h) * u;
      if (a != c) nat_w = "in V via " + pool[j].label + ": " + mismatch_witness(a, c);
    } else {
      LinearMap p = combination(module_hom_space(m, m), m.comodule.dim, m.comodule.dim, f, rng);
      LinearMap a = forward(i, p * h), c = p * forward(i, h);
      if (a != c) nat_w = "in M: " + mismatch_witness(a, c);
    }
  }
  r.add("naturality", nat_w.empty(), nat_w);

  if (is_pointed(b)) {
    for (std::size_t z = 0; z < b.dim; ++z) {
      TrimoduleModuleFD n = linton_action(t, simple_graded_comodule(t.base(), z), x);
      auto comps = internal_hom_components(t, n);
      auto expect = graded_dims(n.comodule);
      std::string w;
      if (comps != expect) {
        for (std::size_t d = 0; d < b.dim; ++d) {
          w += b.basis[d] + ":" + std::to_string(comps[d]) + "/" + std::to_string(expect[d]) + " ";
        }
      }
      r.add("components " + b.basis[z], w.empty(), w);
    }
  }
  return r;
}

LinearMap fusion_operator(const BialgebraFD& h, std::size_t v, std::size_t w) {
  const Field& f = h.field;
  std::size_t n = h.dim;
  LinearMap galois = tensor_map(h.mul, h.id()) * tensor_map(h.id(), swap_map(f, n, n)) * tensor_map(h.comul, h.id());
  LinearMap spread = tensor_map({h.id(), swap_map(f, n, v), id(f, w)});
  return spread * tensor_map({galois, id(f, v), id(f, w)});
}

LinearMap fusion_inverse_from_antipode(const BialgebraFD& h, const LinearMap& antipode) {
  auto s_inv = inverse(antipode);
  if (!s_inv) throw Error("not-invertible", "antipode is not invertible");
  const Field& f = h.field;
  std::size_t n = h.dim;
  LinearMap sw = swap_map(f, n, n);
  LinearMap split = tensor_map(sw, h.id()) * tensor_map(h.comul, h.id()) * sw;
  return tensor_map(h.id(), h.mul) * tensor_map({h.id(), *s_inv, h.id()}) * split;
}

bool is_right_hopf(const BialgebraFD& h) {
  LinearMap g = fusion_operator(h, 1, 1);
  bool invertible = rank(g) == g.rows();
  bool antipode = find_antipode(h).antipode.has_value();
  if (invertible != antipode) {
    throw Error("witness-mismatch", std::string("fusion operator is ") + (invertible ? "" : "not ") +
                                        "invertible but an antipode " + (antipode ? "exists" : "does not exist"));
  }
  return invertible;
}

}  // namespace trimod
