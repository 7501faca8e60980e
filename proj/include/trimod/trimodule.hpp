#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trimod/comodule.hpp"

namespace trimod {

// A bicomodule with a left action alpha: B (x) X -> X, an m x (n m) matrix.
struct HopfTrimoduleFD {
  BicomoduleFD bicomodule;
  LinearMap action;

  const BasePtr& base() const { return bicomodule.base; }
  std::size_t dim() const { return bicomodule.dim; }
  const std::string& label() const { return bicomodule.label; }
};

Report validate_trimodule(const HopfTrimoduleFD& x);

HopfTrimoduleFD regular_trimodule(const BasePtr& base);
// B (x) M with b m -> b1 m-1 (x) b2 (x) m0, b (x) m -> b1 (x) m (x) b2 and a (x) b (x) m -> ab (x) m.
HopfTrimoduleFD trimodule_from_comodule(const LeftComoduleFD& m);

// The two cotensor spaces chi runs between, plus the map itself in their
// coordinates: M (x) (X box N) -> X box (M (x) N).
struct Interchange {
  CotensorSpace inner;     // X box N
  CotensorSpace target;    // X box (M (x) N)
  LeftComoduleFD m_tensor_n;
  LinearMap chi;
};
Interchange interchange_data(const HopfTrimoduleFD& x, const LeftComoduleFD& m, const LeftComoduleFD& n);
LinearMap interchange(const HopfTrimoduleFD& x, const LeftComoduleFD& m, const LeftComoduleFD& n);

// The chi formula m (x) x (x) w -> alpha(m-1 (x) x) (x) m0 (x) w applied to
// the columns of v, which live in M (x) X (x) W for dim W = w.
LinearMap chi_formula(const HopfTrimoduleFD& x, const LeftComoduleFD& m, std::size_t w, const LinearMap& v);

HopfTrimoduleFD trimodule_cotensor(const HopfTrimoduleFD& x, const HopfTrimoduleFD& y);

// X box Y box N inside X (x) Y (x) N, in canonical form.
Subspace triple_cotensor(const HopfTrimoduleFD& x, const HopfTrimoduleFD& y, const LeftComoduleFD& n);

struct ComposedInterchange {
  LinearMap composite;  // (X box chi^Y) o chi^X on canonical subspaces
  LinearMap direct;     // chi^{X box Y} transported to the same subspaces
};
ComposedInterchange compose_interchange(const HopfTrimoduleFD& x, const HopfTrimoduleFD& y,
                                        const LeftComoduleFD& m, const LeftComoduleFD& n);

struct StructureTheorem {
  Subspace coinvariants;
  LinearMap tau;       // X -> coinvariants, in coinvariant coordinates
  LinearMap forward;   // X -> B (x) coinvariants
  LinearMap backward;  // B (x) coinvariants -> X
  bool is_iso = false;
  bool used_fallback = false;
  std::string witness;
};
StructureTheorem structure_theorem_check(const HopfTrimoduleFD& x);

std::vector<LinearMap> trimodule_hom_space(const HopfTrimoduleFD& x, const HopfTrimoduleFD& y);
bool is_trimodule_morphism(const LinearMap& f, const HopfTrimoduleFD& x, const HopfTrimoduleFD& y);

// Maps between cotensor spaces induced by maps of the factors.
LinearMap cotensor_map(const CotensorSpace& from, const CotensorSpace& to, const LinearMap& f, const LinearMap& g);

// Lemma-level property suites for chi; all comparisons are exact.
Report interchange_suite(const HopfTrimoduleFD& x, const std::vector<LeftComoduleFD>& pool,
                         std::size_t morphism_samples, unsigned seed);
Report intertwining_suite(const HopfTrimoduleFD& x, const HopfTrimoduleFD& y, const std::vector<LinearMap>& morphisms,
                          const std::vector<LeftComoduleFD>& pool);
Report unitor_suite(const HopfTrimoduleFD& x);

}  // namespace trimod
