#include "trimod/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "trimod/fixtures.hpp"
#include "trimod/io.hpp"
#include "trimod/monad.hpp"

namespace trimod {
namespace {

using Clock = std::chrono::steady_clock;

const Field Q = Field::rationals();

LinearMap id(std::size_t n) { return LinearMap::identity(Q, n); }

void expect(Report& r, const std::string& name, bool ok, const std::string& witness) {
  r.add(name, ok, ok ? std::string() : witness);
}

void compare(Report& r, const std::string& name, const LinearMap& a, const LinearMap& b) {
  bool same = a.rows() == b.rows() && a.cols() == b.cols() && a == b;
  r.add(name, same, same ? std::string() : mismatch_witness(a, b));
}

void guarded(Report& r, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    r.add(name, false, e.what());
  }
}

std::string list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// Plain Gaussian elimination over mpq, kept apart from the library reducer.
std::size_t dense_rank(const LinearMap& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).to_mpq();
  }
  std::size_t rows = a.size(), cols = m.cols(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

LinearMap random_map(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> coef(-2, 2);
  LinearMap out(Q, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, Rational(coef(rng)));
  }
  return out;
}

AlgebraPtr pointed_algebra(const BaseFixture& s) { return share(reconstruct_pointed(s.base, example_monoid(), {1, 0})); }

// Trimodules exercised per base: regular, B.B, B (x) M over the pool, and
// the pointed example over k[S].
std::vector<HopfTrimoduleFD> trimodules(const BaseFixture& f) {
  std::vector<HopfTrimoduleFD> xs{regular_trimodule(f.base), b_dot_b(f.base).carrier};
  for (const auto& m : f.pool) xs.push_back(trimodule_from_comodule(m));
  if (f.name == "k[S]") xs.push_back(pointed_algebra(f)->carrier);
  return xs;
}

// The cokernel of first - second assembled from dense structure constants.
std::size_t linton_dim_oracle(const MonadInstanceFD& t, const LeftComoduleFD& v, const TrimoduleModuleFD& m) {
  const TrimoduleAlgebraFD& a = *t.algebra();
  std::size_t n = t.base()->dim, d = a.dim(), dv = v.dim, dm = m.comodule.dim;
  CotensorSpace tm = t.space(m.comodule);
  CotensorSpace dom = t.space(tensor_comodules(v, tm.as_left()));
  CotensorSpace cod = t.space(tensor_comodules(v, m.comodule));
  LinearMap first = tensor_map({id(d), id(dv), m.act}) * dom.inclusion();
  LinearMap chi = tensor_map({a.carrier.action, id(dv), id(dm)}) *
                  tensor_map({id(n), swap_map(Q, dv, d), id(dm)}) * tensor_map({v.coaction, id(d), id(dm)});
  LinearMap expanded = tensor_map({id(d), chi}) * tensor_map({id(d), id(dv), tm.inclusion()}) * dom.inclusion();
  CotensorSpace sq = a.square();
  LinearMap mul_dense(Q, d, d * d);
  for (std::size_t k = 0; k < sq.dim(); ++k) {
    for (std::size_t i = 0; i < d; ++i) mul_dense.set(i, sq.subspace.coords()[k], a.mul.at(i, k));
  }
  LinearMap second = tensor_map({mul_dense, id(dv), id(dm)}) * expanded;
  return cod.dim() - dense_rank(first - second);
}

Report pointed_example() {
  Report r;
  auto s = fixture_base("k[S]");
  TrimoduleAlgebraFD a = reconstruct_pointed(s.base, example_monoid(), {1, 0});
  r.merge(validate_trimodule_algebra(a), "validate ");
  expect(r, "dimension", a.dim() == 1, "dim " + std::to_string(a.dim()));
  if (a.dim() != 1) return r;
  LinearMap at_e = LinearMap::from_ints(Q, 2, 1, {1, 0});
  compare(r, "left degree e", a.carrier.bicomodule.left, at_e);
  compare(r, "right degree e", a.carrier.bicomodule.right, at_e);
  compare(r, "e acts by 1, s by 0", a.carrier.action, LinearMap::from_ints(Q, 1, 2, {1, 0}));
  compare(r, "square basis", a.square().inclusion(), LinearMap::from_ints(Q, 1, 1, {1}));
  compare(r, "multiplication", a.mul, LinearMap::from_ints(Q, 1, 1, {1}));
  compare(r, "unit", a.unit, LinearMap::from_ints(Q, 1, 2, {1, 0}));
  std::size_t free_dim = cotensor(a.carrier.bicomodule, regular_left(s.base)).dim();
  expect(r, "free module on B is 1-dim", free_dim == 1, "dim " + std::to_string(free_dim));
  std::size_t at_s = cotensor(a.carrier.bicomodule, simple_graded_comodule(s.base, 1)).dim();
  expect(r, "A box delta_s = 0", at_s == 0, "dim " + std::to_string(at_s));
  std::string bytes = serialize(a);
  expect(r, "deterministic", serialize(reconstruct_pointed(s.base, example_monoid(), {1, 0})) == bytes,
         "second construction serializes differently");
  expect(r, "round trip", serialize(parse(bytes)) == bytes, "parse then serialize changes the bytes");
  return r;
}

Report pointed_hom_data() {
  auto s = fixture_base("k[S]");
  MonadInstanceFD p(pointed_algebra(s));
  Report r = reconstruction_identity(p, s.pool, 10, 3);
  TrimoduleModuleFD x = p.free(trivial_left(s.base));
  std::vector<std::size_t> at_e =
      internal_hom_components(p, linton_action(p, simple_graded_comodule(s.base, 0), x));
  std::vector<std::size_t> at_s =
      internal_hom_components(p, linton_action(p, simple_graded_comodule(s.base, 1), x));
  std::vector<std::size_t> delta_e = graded_dims(simple_graded_comodule(s.base, 0));
  expect(r, "[X, delta_e |> X] = delta_e", at_e == delta_e, list(at_e) + " vs " + list(delta_e));
  expect(r, "[X, delta_s |> X] = 0", at_s == std::vector<std::size_t>{0, 0}, list(at_s));
  return r;
}

Report b_dot_b_suite() {
  Report r;
  for (const auto& f : fixture_bases()) {
    AlgebraPtr bb = share(b_dot_b(f.base));
    r.merge(validate_trimodule_algebra(*bb), f.name + " validate ");
    for (const auto& n : f.pool) {
      std::size_t got = cotensor(bb->carrier.bicomodule, n).dim();
      expect(r, f.name + " dim box " + n.label, got == f.base->dim * n.dim, std::to_string(got));
    }
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, f.pool.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
      const auto& m = f.pool[pick(rng)];
      const auto& p = f.pool[pick(rng)];
      const auto& q = f.pool[pick(rng)];
      std::string tag = f.name + " J (" + m.label + "," + p.label + "," + q.label + ")";
      guarded(r, tag, [&] {
        JFunctor mp(bb, m, p), pq(bb, p, q), mq(bb, m, q);
        auto sigmas = mp.morphisms();
        expect(r, tag + " hom dim", sigmas.size() == m.dim * p.dim, std::to_string(sigmas.size()));
        bool back = true;
        for (const auto& s : sigmas) back = back && mp.from_linear(mp.to_linear(s)) == s;
        expect(r, tag + " module round trip", back, "from_linear o to_linear differs from the identity");
        LinearMap phi = random_map(rng, p.dim, m.dim), psi = random_map(rng, q.dim, p.dim);
        LinearMap sigma = mp.from_linear(phi), tau = pq.from_linear(psi);
        expect(r, tag + " module morphism", is_module_morphism(sigma, mp.source(), mp.target()),
               "from_linear is not a module map");
        compare(r, tag + " linear round trip", mp.to_linear(sigma), phi);
        compare(r, tag + " composition", mq.to_linear(tau * sigma), psi * phi);
      });
    }
  }
  return r;
}

Report semisimplicity() {
  Report r;
  auto counts = [&](const std::string& tag, const AlgebraPtr& a) {
    guarded(r, tag + " counts", [&] {
      SimpleCounts c = contra_vs_modules_count(a);
      expect(r, tag + " counts", c.modules == c.contramodules,
             std::to_string(c.modules) + " modules vs " + std::to_string(c.contramodules) + " contramodules");
    });
  };
  for (const auto& f : fixture_bases()) {
    AlgebraPtr bb = share(b_dot_b(f.base));
    expect(r, f.name + " B.B semisimple", is_semisimple_trimodule_algebra(bb), "not semisimple");
    counts(f.name + " B.B", bb);
  }
  auto s = fixture_base("k[S]");
  AlgebraPtr x = pointed_algebra(s);
  expect(r, "pointed semisimple", is_semisimple_trimodule_algebra(x), "not semisimple");
  std::size_t rank = module_endomorphism_algebra(x).dim;
  expect(r, "pointed rank one", rank == 1, "endomorphisms of dim " + std::to_string(rank));
  counts("pointed", x);
  expect(r, "H4 unit algebra not semisimple",
         !is_semisimple_trimodule_algebra(share(unit_algebra(fixture_base("H4").base))), "reported semisimple");
  return r;
}

void convolution_inverse(Report& r, const std::string& tag, const BialgebraFD& b, const LinearMap& s) {
  compare(r, tag + " S * id", convolution(s, b.id(), b), b.unit_counit());
  compare(r, tag + " id * S", convolution(b.id(), s, b), b.unit_counit());
}

Report antipode_suite() {
  Report r;
  BasePtr z2 = fixture_base("k[Z/2]").base, h4 = fixture_base("H4").base, ks = fixture_base("k[S]").base;
  AntipodeSearch az = find_antipode(*z2);
  expect(r, "k[Z/2] antipode", az.antipode.has_value(), "none found");
  if (az.antipode) convolution_inverse(r, "k[Z/2]", *z2, *az.antipode);

  AntipodeSearch ah = find_antipode(*h4);
  expect(r, "H4 antipode", ah.antipode.has_value(), "none found");
  if (ah.antipode) {
    const LinearMap& s = *ah.antipode;
    convolution_inverse(r, "H4", *h4, s);
    expect(r, "H4 S^2 != id", power(s, 2) != h4->id(), "S^2 is the identity");
    compare(r, "H4 S^4 = id", power(s, 4), h4->id());
    AntipodeSearch tw = find_twisted_antipode(*h4);
    expect(r, "H4 twisted antipode", tw.antipode.has_value(), "none found");
    if (tw.antipode) compare(r, "H4 twisted = S^3", *tw.antipode, power(s, 3));
  }

  AntipodeSearch as = find_antipode(*ks);
  expect(r, "k[S] no antipode", !as.antipode.has_value(), "antipode found");
  expect(r, "k[S] rank certificate", as.rank_coefficients < as.rank_augmented,
         "ranks " + std::to_string(as.rank_coefficients) + " and " + std::to_string(as.rank_augmented));
  return r;
}

Report fusion_suite() {
  Report r;
  for (const auto& f : fixture_bases()) {
    bool hopf = find_antipode(*f.base).antipode.has_value();
    guarded(r, f.name + " right Hopf", [&] {
      bool right = is_right_hopf(*f.base);
      expect(r, f.name + " right Hopf", right == hopf, right ? "fusion invertible" : "fusion singular");
    });
  }
  BasePtr ks = fixture_base("k[S]").base;
  std::size_t rk = dense_rank(fusion_operator(*ks, 1, 1));
  expect(r, "k[S] Galois rank 3 of 4", rk == 3, "rank " + std::to_string(rk));
  for (const char* name : {"k[Z/2]", "H4"}) {
    BasePtr base = fixture_base(name).base;
    const BialgebraFD& h = *base;
    auto s = find_antipode(h).antipode;
    if (!s) {
      r.add(std::string(name) + " inverse", false, "no antipode");
      continue;
    }
    LinearMap g = fusion_operator(h, 1, 1), inv = fusion_inverse_from_antipode(h, *s);
    compare(r, std::string(name) + " G o inverse", g * inv, id(h.dim * h.dim));
    compare(r, std::string(name) + " inverse o G", inv * g, id(h.dim * h.dim));
  }
  return r;
}

Report interchange_criterion() {
  Report r;
  unsigned seed = 20;
  for (const auto& f : fixture_bases()) {
    auto xs = trimodules(f);
    for (const auto& x : xs) {
      std::string tag = f.name + " " + x.label() + " ";
      guarded(r, tag + "suite", [&] { r.merge(interchange_suite(x, f.pool, 20, seed++), tag); });
      guarded(r, tag + "intertwining", [&] {
        r.merge(intertwining_suite(x, x, trimodule_hom_space(x, x), f.pool), tag);
      });
    }
    guarded(r, f.name + " intertwining regular to B.B", [&] {
      r.merge(intertwining_suite(xs[0], xs[1], trimodule_hom_space(xs[0], xs[1]), f.pool), f.name + " ");
    });
  }
  return r;
}

Report monoidality() {
  Report r;
  for (const auto& f : fixture_bases()) {
    auto xs = trimodules(f);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) pairs.emplace_back(i, j);
    }
    for (auto [i, j] : pairs) {
      for (const auto& m : f.pool) {
        for (const auto& n : f.pool) {
          std::string tag = f.name + " " + xs[i].label() + " box " + xs[j].label() + " (" + m.label + "," + n.label + ")";
          guarded(r, tag, [&] {
            ComposedInterchange c = compose_interchange(xs[i], xs[j], m, n);
            compare(r, tag, c.composite, c.direct);
          });
        }
      }
    }
  }
  return r;
}

Report structure_theorem() {
  Report r;
  for (const char* name : {"H4", "k[Z/2]"}) {
    auto f = fixture_base(name);
    std::vector<HopfTrimoduleFD> xs{b_dot_b(f.base).carrier};
    for (const auto& m : f.pool) xs.push_back(trimodule_from_comodule(m));
    for (const auto& x : xs) {
      std::string tag = f.name + " " + x.label();
      StructureTheorem st = structure_theorem_check(x);
      expect(r, tag + " iso", st.is_iso, st.witness);
      if (!st.is_iso) continue;
      compare(r, tag + " backward o forward", st.backward * st.forward, id(x.dim()));
      compare(r, tag + " forward o backward", st.forward * st.backward, id(st.forward.rows()));
    }
  }
  auto s = fixture_base("k[S]");
  StructureTheorem st = structure_theorem_check(pointed_algebra(s)->carrier);
  expect(r, "pointed not iso", !st.is_iso, "reported iso");
  const std::string want = "dim B⊗X^coB = 2 vs dim X = 1";
  expect(r, "pointed witness", st.witness == want, st.witness);
  return r;
}

Report linton_suite() {
  Report r;
  struct Case {
    BaseFixture f;
    MonadInstanceFD t;
    std::vector<LeftComoduleFD> pool;
  };
  std::vector<Case> cases;
  for (const auto& f : fixture_bases()) {
    cases.push_back({f, MonadInstanceFD(share(unit_algebra(f.base))), f.pool});
    // over H4, B.B applied to the regular comodule is too large for dense maps
    std::vector<LeftComoduleFD> pool;
    for (const auto& m : f.pool) {
      if (f.name != "H4" || m.dim <= 2) pool.push_back(m);
    }
    cases.push_back({f, MonadInstanceFD(share(b_dot_b(f.base))), pool});
  }
  auto s = fixture_base("k[S]");
  cases.push_back({s, MonadInstanceFD(pointed_algebra(s)), s.pool});

  for (const auto& c : cases) {
    const auto& pool = c.pool;
    std::string name = c.f.name + " " + c.t.algebra()->label();
    for (const auto& p : pool) {
      TrimoduleModuleFD m = c.t.free(p);
      for (const auto& v : pool) {
        std::string tag = name + " " + v.label + " |> T(" + p.label + ")";
        guarded(r, tag, [&] {
          LintonCoequalizer q = linton_coequalizer(c.t, v, m);
          r.merge(validate_module(q.module), tag + " ");
          expect(r, tag + " coequalizes", (q.projection * (q.first - q.second)).is_zero(), "pi(first - second) != 0");
          std::size_t want = linton_dim_oracle(c.t, v, m);
          expect(r, tag + " oracle", q.module.comodule.dim == want,
                 std::to_string(q.module.comodule.dim) + " vs " + std::to_string(want));
          for (const auto& w : pool) r.merge(linton_isomorphisms(c.t, v, w, m), name + " ");
        });
      }
    }
    std::vector<LintonSample> samples;
    for (std::size_t i = 0; samples.size() < 5; ++i) {
      const auto& v = pool[i % pool.size()];
      const auto& w = pool[(i / pool.size() + i) % pool.size()];
      samples.push_back({v, w, c.t.free(pool[(i * 7 + 1) % pool.size()])});
    }
    guarded(r, name + " coherence", [&] { r.merge(check_linton_coherence(c.t, samples), name + " "); });
  }
  return r;
}

Report adjunctions() {
  Report r;
  unsigned seed = 100;
  for (const auto& f : fixture_bases()) {
    std::vector<AlgebraPtr> algebras{share(unit_algebra(f.base)), share(b_dot_b(f.base))};
    if (f.name == "k[S]") algebras.push_back(pointed_algebra(f));
    for (const auto& a : algebras) {
      MonadInstanceFD t(a);
      std::string name = f.name + " " + a->label() + " ";
      for (const auto& x : f.pool) {
        for (const auto& p : f.pool) {
          guarded(r, name + "free-forgetful", [&] {
            r.merge(certify_free_forgetful(t, x, t.free(p), f.pool, 10, seed++), name);
          });
        }
        guarded(r, name + "cohom", [&] { r.merge(certify_cohom(a->carrier, x, f.pool, 10, seed++), name); });
      }
    }
  }
  return r;
}

struct Perturbation {
  std::string name;
  std::function<Report(bool)> run;  // validates the perturbed structure, or the original for false
};

LinearMap bump(LinearMap m, std::size_t i, std::size_t j) {
  m.set(i, j, m.at(i, j) + Rational(1));
  return m;
}

std::vector<Perturbation> perturbations() {
  std::vector<Perturbation> out;
  auto bialgebra = [&](const std::string& base, const std::string& what, LinearMap BialgebraFD::*field, std::size_t i,
                       std::size_t j) {
    out.push_back({base + " " + what, [=](bool on) {
                     BialgebraFD b = *fixture_base(base).base;
                     if (on) b.*field = bump(b.*field, i, j);
                     return validate_bialgebra(b);
                   }});
  };
  bialgebra("k[Z/2]", "mul", &BialgebraFD::mul, 1, 1);
  bialgebra("H4", "comul", &BialgebraFD::comul, 0, 0);
  bialgebra("k[S]", "counit", &BialgebraFD::counit, 0, 1);
  bialgebra("H4", "unit", &BialgebraFD::unit, 2, 0);

  auto bicomodule = [&](const std::string& base, const std::string& what, LinearMap BicomoduleFD::*field,
                        std::size_t i, std::size_t j) {
    out.push_back({base + " regular bicomodule " + what, [=](bool on) {
                     BicomoduleFD x = regular_bicomodule(fixture_base(base).base);
                     if (on) x.*field = bump(x.*field, i, j);
                     return validate_bicomodule(x);
                   }});
  };
  bicomodule("k[Z/2]", "left", &BicomoduleFD::left, 0, 0);
  bicomodule("H4", "right", &BicomoduleFD::right, 3, 1);
  bicomodule("k[S]", "left", &BicomoduleFD::left, 1, 1);

  auto trimodule = [&](const std::string& label, std::function<HopfTrimoduleFD()> make, std::size_t i, std::size_t j) {
    out.push_back({label + " action", [=](bool on) {
                     HopfTrimoduleFD x = make();
                     if (on) x.action = bump(x.action, i, j);
                     return validate_trimodule(x);
                   }});
  };
  trimodule("k[Z/2] regular trimodule", [] { return regular_trimodule(fixture_base("k[Z/2]").base); }, 0, 1);
  trimodule("H4 B (x) span{1,x}", [] {
    auto f = fixture_base("H4");
    return trimodule_from_comodule(f.pool.back());
  }, 1, 0);

  auto algebra = [&](const std::string& label, std::function<TrimoduleAlgebraFD()> make, bool mul, std::size_t i,
                     std::size_t j) {
    out.push_back({label + (mul ? " mul" : " unit"), [=](bool on) {
                     TrimoduleAlgebraFD a = make();
                     if (on) (mul ? a.mul : a.unit) = bump(mul ? a.mul : a.unit, i, j);
                     return validate_trimodule_algebra(a);
                   }});
  };
  algebra("k[Z/2] B.B", [] { return b_dot_b(fixture_base("k[Z/2]").base); }, true, 0, 0);
  algebra("H4 B.B", [] { return b_dot_b(fixture_base("H4").base); }, false, 5, 0);
  algebra("pointed", [] { return reconstruct_pointed(fixture_base("k[S]").base, example_monoid(), {1, 0}); }, true,
          0, 0);
  return out;
}

Report robustness() {
  Report r;
  for (const auto& p : perturbations()) {
    guarded(r, p.name, [&] {
      Report clean = p.run(false);
      expect(r, p.name + " original passes", clean.ok(), "the unperturbed structure already fails");
      Report bad = p.run(true);
      const Check* hit = nullptr;
      for (const auto& c : bad.checks) {
        if (!c.passed && !c.witness.empty()) {
          hit = &c;
          break;
        }
      }
      expect(r, p.name + " detected", hit != nullptr, "no failing check with a witness");
      if (hit) r.add(p.name + " witness: " + hit->name + ": " + hit->witness, true);
    });
  }
  std::size_t n = perturbations().size();
  expect(r, "twelve perturbations", n == 12, std::to_string(n));
  return r;
}

struct Criterion {
  int id;
  const char* key;
  const char* title;
  Report (*run)();
  double limit;  // seconds, 0 for none
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "pointed-example", "pointed reconstruction over S = {e,s} with eps(s) = 0", pointed_example, 1},
      {2, "pointed-hom-data", "internal homs of the pointed example", pointed_hom_data, 0},
      {3, "b-dot-b", "B.B validates with the expected dimensions and J is an equivalence", b_dot_b_suite, 10},
      {4, "semisimplicity", "semisimplicity verdicts and simple-object counts", semisimplicity, 0},
      {5, "antipode", "antipodes with their orders, or a rank certificate when absent", antipode_suite, 0},
      {6, "fusion", "right Hopf verdicts and Galois map inverses", fusion_suite, 0},
      {7, "interchange", "interchange containment, colinearity, naturality and intertwining", interchange_criterion, 0},
      {8, "monoidality", "composed interchange equals interchange of the cotensor", monoidality, 0},
      {9, "structure-theorem", "B (x) X^coB = X exactly when expected", structure_theorem, 0},
      {10, "linton", "Linton isomorphisms checked against a cokernel oracle", linton_suite, 0},
      {11, "adjunctions", "free-forgetful and cohom bijections", adjunctions, 0},
      {12, "robustness", "single-entry perturbations are caught with witnesses", robustness, 0},
  };
  return all;
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", s);
  return buf;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    CriterionResult res;
    res.id = c.id;
    res.key = c.key;
    res.title = c.title;
    auto start = Clock::now();
    try {
      res.report = c.run();
    } catch (const std::exception& e) {
      res.report.add("completed", false, e.what());
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    res.report.subject = c.key;
    if (c.limit > 0) {
      expect(res.report, "time under " + seconds_text(c.limit) + " s", res.seconds < c.limit,
             seconds_text(res.seconds) + " s");
    }
    res.passed = res.report.ok() && !res.report.checks.empty();
    if (res.passed) {
      res.detail = std::to_string(res.report.checks.size()) + " checks";
    } else if (res.report.checks.empty()) {
      res.detail = "no checks ran";
    } else {
      for (const auto& ch : res.report.checks) {
        if (ch.passed) continue;
        res.detail = std::to_string(res.report.failures()) + " of " + std::to_string(res.report.checks.size()) +
                     " checks failed; first: " + ch.name + ": " + ch.witness;
        break;
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::string acceptance_text(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    os << (r.passed ? "PASS" : "FAIL") << " " << (r.id < 10 ? " " : "") << r.id << " " << r.key << " ("
       << seconds_text(r.seconds) << " s): " << r.title << "; " << r.detail << "\n";
  }
  os << passed << "/" << results.size() << " criteria passed\n";
  return os.str();
}

std::string acceptance_json(const std::vector<CriterionResult>& results) {
  nlohmann::ordered_json doc;
  bool all = true;
  doc["criteria"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& c : r.report.checks) {
      if (!c.passed) failures.push_back({{"check", c.name}, {"witness", c.witness}});
    }
    doc["criteria"].push_back({{"id", r.id},
                               {"key", r.key},
                               {"title", r.title},
                               {"passed", r.passed},
                               {"seconds", r.seconds},
                               {"checks", r.report.checks.size()},
                               {"detail", r.detail},
                               {"failures", failures}});
  }
  doc["passed"] = all;
  return doc.dump(2) + "\n";
}

}  // namespace trimod
