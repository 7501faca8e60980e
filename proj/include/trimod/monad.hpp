#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trimod/algebra.hpp"

namespace trimod {

// The monad A box - on left comodules, materialized per argument comodule.
// The action of comodules on comodules is the tensor product and T_a is chi.
class MonadInstanceFD {
 public:
  explicit MonadInstanceFD(AlgebraPtr a);

  const AlgebraPtr& algebra() const { return a_; }
  const BasePtr& base() const { return a_->base(); }

  CotensorSpace space(const LeftComoduleFD& m) const;
  LeftComoduleFD apply(const LeftComoduleFD& m) const;
  // T(f) for a colinear f: M -> N.
  LinearMap apply(const LeftComoduleFD& m, const LeftComoduleFD& n, const LinearMap& f) const;
  LinearMap unit(const LeftComoduleFD& m) const;  // M -> TM
  LinearMap mul(const LeftComoduleFD& m) const;   // TTM -> TM
  // (T_a)_{V,M}: V (x) TM -> T(V (x) M).
  LinearMap interchange(const LeftComoduleFD& v, const LeftComoduleFD& m) const;
  TrimoduleModuleFD free(const LeftComoduleFD& m) const;

 private:
  AlgebraPtr a_;
};

// Monad laws, and unit and multiplication as module transformations, at
// every pool comodule (and every pool pair for the latter).
Report validate_monad(const MonadInstanceFD& t, const std::vector<LeftComoduleFD>& pool);

// EM(T)(T(X), Y) = Hom(X, Y): f -> f o eta_X and g -> act_Y o T(g).
class FreeForgetful {
 public:
  FreeForgetful(const MonadInstanceFD& t, LeftComoduleFD x, TrimoduleModuleFD y);

  const TrimoduleModuleFD& free() const { return free_; }
  const TrimoduleModuleFD& target() const { return y_; }
  LinearMap to_comodule_map(const LinearMap& f) const;
  LinearMap to_module_map(const LinearMap& g) const;

 private:
  const MonadInstanceFD* t_;
  LeftComoduleFD x_;
  TrimoduleModuleFD y_, free_;
  LinearMap eta_;
};
FreeForgetful free_forgetful_iso(const MonadInstanceFD& t, const LeftComoduleFD& x, const TrimoduleModuleFD& y);
// Dimensions, elementwise round trips and naturality squares in both variables.
Report certify_free_forgetful(const MonadInstanceFD& t, const LeftComoduleFD& x, const TrimoduleModuleFD& y,
                              const std::vector<LeftComoduleFD>& pool, std::size_t samples, unsigned seed);

// V |> M as the cokernel of first - second on T(V (x) M).
struct LintonCoequalizer {
  LeftComoduleFD v_tensor_m;
  LinearMap first;   // T(V (x) act_M)
  LinearMap second;  // mu o T((T_a)_{V,M})
  LinearMap projection;
  LinearMap section;
  TrimoduleModuleFD module;
};
LintonCoequalizer linton_coequalizer(const MonadInstanceFD& t, const LeftComoduleFD& v, const TrimoduleModuleFD& m);
TrimoduleModuleFD linton_action(const MonadInstanceFD& t, const LeftComoduleFD& v, const TrimoduleModuleFD& m);

// V |> f for a module map f: M -> M'.
LinearMap linton_map(const MonadInstanceFD& t, const LeftComoduleFD& v, const LintonCoequalizer& from,
                     const LintonCoequalizer& to, const LinearMap& f);
// u |> M for a colinear u: V -> V'.
LinearMap linton_map(const MonadInstanceFD& t, const LintonCoequalizer& from, const LintonCoequalizer& to,
                     const LeftComoduleFD& m_comodule, const LinearMap& u);

// k |> M -> M.
LinearMap linton_unitor(const MonadInstanceFD& t, const TrimoduleModuleFD& m);
// V |> T(X) -> T(V (x) X).
LinearMap linton_free_iso(const MonadInstanceFD& t, const LeftComoduleFD& v, const LeftComoduleFD& x);
// (V (x) W) |> M -> V |> (W |> M).
LinearMap linton_associator(const MonadInstanceFD& t, const LeftComoduleFD& v, const LeftComoduleFD& w,
                            const TrimoduleModuleFD& m);

struct LintonSample {
  LeftComoduleFD v;
  LeftComoduleFD w;
  TrimoduleModuleFD m;
};
// Pentagon on (V, W, V, M), both triangles, and strength of the free embedding.
Report check_linton_coherence(const MonadInstanceFD& t, const std::vector<LintonSample>& samples);
// The unit, free and associativity isomorphisms, each checked to be an
// invertible module morphism.
Report linton_isomorphisms(const MonadInstanceFD& t, const LeftComoduleFD& v, const LeftComoduleFD& w,
                           const TrimoduleModuleFD& m);

// Hom_modules(delta_z |> T(k), N) for each grouplike basis vector z; needs a
// base whose basis is grouplike.
std::vector<std::size_t> internal_hom_components(const MonadInstanceFD& t, const TrimoduleModuleFD& n);
// Degree-wise dimensions of a comodule over such a base.
std::vector<std::size_t> graded_dims(const LeftComoduleFD& m);
// Hom_modules(V |> T(k), M) = Hom(V, M) over the pool, plus the components
// of [T(k), delta_z |> T(k)] on pointed bases.
Report reconstruction_identity(const MonadInstanceFD& t, const std::vector<LeftComoduleFD>& pool,
                               std::size_t samples, unsigned seed);

// H (x) H (x) V (x) W -> H (x) V (x) H (x) W, h h' v w -> h1 h' v h2 w.
LinearMap fusion_operator(const BialgebraFD& h, std::size_t v, std::size_t w);
// a (x) b -> b2 (x) S^-1(b1) a, the inverse of fusion_operator(h, 1, 1).
LinearMap fusion_inverse_from_antipode(const BialgebraFD& h, const LinearMap& antipode);
// Throws witness-mismatch if invertibility disagrees with find_antipode.
bool is_right_hopf(const BialgebraFD& h);

}  // namespace trimod
