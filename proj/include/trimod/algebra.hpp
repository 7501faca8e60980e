#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trimod/trimodule.hpp"

namespace trimod {

// An algebra object for the cotensor product: mul is defined on the canonical
// basis of A box A.
struct TrimoduleAlgebraFD {
  HopfTrimoduleFD carrier;
  LinearMap mul;   // a x dim(A box A)
  LinearMap unit;  // a x n

  const BasePtr& base() const { return carrier.base(); }
  std::size_t dim() const { return carrier.dim(); }
  const std::string& label() const { return carrier.label(); }
  CotensorSpace square() const { return cotensor(carrier.bicomodule, carrier.bicomodule); }
};
using AlgebraPtr = std::shared_ptr<const TrimoduleAlgebraFD>;
AlgebraPtr share(TrimoduleAlgebraFD a);

Report validate_trimodule_algebra(const TrimoduleAlgebraFD& a);

// (id_l (x) mul (x) id_r) on vectors of k^l (x) A (x) A (x) k^r that lie in
// k^l (x) (A box A) (x) k^r.
LinearMap apply_mul(const TrimoduleAlgebraFD& a, std::size_t l, std::size_t r, const LinearMap& v);

TrimoduleAlgebraFD unit_algebra(const BasePtr& base);
TrimoduleAlgebraFD b_dot_b(const BasePtr& base);

// Basis {(w,z) : eps(w) = eps(z) = 1} over the monoid bialgebra of the table.
TrimoduleAlgebraFD reconstruct_pointed(const BasePtr& base, const MonoidTable& table, const std::vector<int>& eps);
TrimoduleAlgebraFD reconstruct_pointed(const MonoidTable& table, const std::vector<int>& eps);
std::vector<std::pair<std::size_t, std::size_t>> pointed_basis(const std::vector<int>& eps);

struct TrimoduleModuleFD {
  AlgebraPtr algebra;
  LeftComoduleFD comodule;
  LinearMap act;                         // m x dim(A box M)
  std::optional<LeftComoduleFD> free_on;  // set by free_module
};

Report validate_module(const TrimoduleModuleFD& m);
TrimoduleModuleFD free_module(const AlgebraPtr& a, const LeftComoduleFD& m);
// V |> (A box M) = A box (V (x) M); needs a module built by free_module.
TrimoduleModuleFD act_on_free(const LeftComoduleFD& v, const TrimoduleModuleFD& free);
// (eta box M) after lambda: M -> A box M.
LinearMap module_unit_map(const TrimoduleAlgebraFD& a, const LeftComoduleFD& m);
std::vector<LinearMap> module_hom_space(const TrimoduleModuleFD& m, const TrimoduleModuleFD& p);
bool is_module_morphism(const LinearMap& f, const TrimoduleModuleFD& m, const TrimoduleModuleFD& p);

// The equivalence J between free B.B-modules and vector spaces, assembled
// from three bijections: precompose with the unit, then apply B (x) eps and
// eps (x) id.
class JFunctor {
 public:
  JFunctor(AlgebraPtr bb, const LeftComoduleFD& m, const LeftComoduleFD& p);

  const TrimoduleModuleFD& source() const { return free_m_; }
  const TrimoduleModuleFD& target() const { return free_p_; }
  std::vector<LinearMap> morphisms() const { return module_hom_space(free_m_, free_p_); }
  LinearMap to_linear(const LinearMap& sigma) const;
  LinearMap from_linear(const LinearMap& phi) const;

 private:
  AlgebraPtr bb_;
  TrimoduleModuleFD free_m_, free_p_;
  LinearMap unit_m_;    // M -> (B.B) box M
  LinearMap collapse_;  // (B.B) box P -> P
  LinearMap w_inv_;     // B (x) P -> (B.B) box P
};
JFunctor j_functor(const BasePtr& base, const LeftComoduleFD& m, const LeftComoduleFD& p);

// cohom(A, M): the quotient of A* (x) M by the subcomodule generated by the
// relations that make the adjunction unit land in A box (-).
struct CohomFD {
  std::size_t algebra_dim = 0;
  LeftComoduleFD source;
  LeftComoduleFD value;
  LinearMap projection;  // A* (x) M -> value
  LinearMap section;
  CotensorSpace a_box_value;
  LinearMap unit;  // M -> A box value
};
LinearMap dual_coaction(const BicomoduleFD& a);
CohomFD cohom(const HopfTrimoduleFD& a, const LeftComoduleFD& m);
// Hom(cohom(A,M), V) -> Hom(M, A box V) and back.
LinearMap cohom_transpose(const HopfTrimoduleFD& a, const CohomFD& c, const LeftComoduleFD& v, const LinearMap& h);
LinearMap cohom_untranspose(const HopfTrimoduleFD& a, const CohomFD& c, const LeftComoduleFD& v, const LinearMap& g);
// cohom(A, u) for u: M -> M'.
LinearMap cohom_map(const CohomFD& from, const CohomFD& to, const LinearMap& u);
Report certify_cohom(const HopfTrimoduleFD& a, const LeftComoduleFD& m, const std::vector<LeftComoduleFD>& pool,
                     std::size_t samples, unsigned seed);

struct ContramoduleFD {
  AlgebraPtr algebra;
  LeftComoduleFD comodule;
  LinearMap coact;  // N -> cohom(A, N)
};
LinearMap comonad_counit(const TrimoduleAlgebraFD& a, const CohomFD& c);
LinearMap comonad_comul(const AlgebraPtr& a, const CohomFD& c);
ContramoduleFD free_contramodule(const AlgebraPtr& a, const LeftComoduleFD& m);
Report contramodule_validate(const ContramoduleFD& c);
std::vector<LinearMap> contramodule_hom_space(const ContramoduleFD& c, const ContramoduleFD& d);

// Dual of the regular right comodule, a projective generator of left comodules.
LeftComoduleFD projective_generator(const BasePtr& base);
// A box - carries cokernels of pool morphisms to cokernels.
bool preserves_cokernels(const TrimoduleAlgebraFD& a, const std::vector<LeftComoduleFD>& pool);
// Opposite algebra of a space of endomorphisms closed under composition; its
// basis is the canonical basis of their span.
AlgebraFD endomorphism_algebra(const Field& f, std::size_t dim, const std::vector<LinearMap>& maps);
std::size_t center_dim(const AlgebraFD& e);
AlgebraFD module_endomorphism_algebra(const AlgebraPtr& a);
AlgebraFD contramodule_endomorphism_algebra(const AlgebraPtr& a);
bool is_semisimple_trimodule_algebra(const AlgebraPtr& a);

struct SimpleCounts {
  std::size_t modules = 0;
  std::size_t contramodules = 0;
};
SimpleCounts contra_vs_modules_count(const AlgebraPtr& a);

}  // namespace trimod
