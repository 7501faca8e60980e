#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trimod/bialgebra.hpp"
#include "trimod/subspace.hpp"

namespace trimod {

using BasePtr = std::shared_ptr<const BialgebraFD>;

// Throws base-mismatch unless both refer to the same bialgebra.
void require_same_base(const BasePtr& a, const BasePtr& b);

// lambda: M -> B (x) M, an (n m) x m matrix.
struct LeftComoduleFD {
  BasePtr base;
  std::size_t dim = 0;
  LinearMap coaction;
  std::string label;
};

// rho: M -> M (x) B, an (m n) x m matrix.
struct RightComoduleFD {
  BasePtr base;
  std::size_t dim = 0;
  LinearMap coaction;
  std::string label;
};

struct BicomoduleFD {
  BasePtr base;
  std::size_t dim = 0;
  LinearMap left;
  LinearMap right;
  std::string label;

  LeftComoduleFD left_comodule() const { return {base, dim, left, label}; }
  RightComoduleFD right_comodule() const { return {base, dim, right, label}; }
};

Report validate_left_comodule(const LeftComoduleFD& m);
Report validate_right_comodule(const RightComoduleFD& m);
Report validate_bicomodule(const BicomoduleFD& x);

std::vector<LinearMap> comodule_hom_space(const LeftComoduleFD& m, const LeftComoduleFD& p);
std::vector<LinearMap> right_comodule_hom_space(const RightComoduleFD& m, const RightComoduleFD& p);
bool is_left_colinear(const LinearMap& f, const LeftComoduleFD& m, const LeftComoduleFD& p);

// X box Y as a subspace of X (x) Y, with whatever outer coactions exist.
struct CotensorSpace {
  BasePtr base;
  std::size_t dim_x = 0;
  std::size_t dim_y = 0;
  Subspace subspace;
  std::optional<LinearMap> left;   // on the subspace, when X has a left coaction
  std::optional<LinearMap> right;  // on the subspace, when Y has a right coaction

  std::size_t dim() const { return subspace.dim(); }
  const LinearMap& inclusion() const { return subspace.inclusion(); }
  LeftComoduleFD as_left(std::string label = {}) const;
  BicomoduleFD as_bicomodule(std::string label = {}) const;
};

// Subspace of X (x) Y cut out by rho_x (x) id - id (x) lambda_y.
Subspace cotensor_subspace(const BialgebraFD& b, std::size_t dim_x, const LinearMap& rho_x, std::size_t dim_y,
                           const LinearMap& lambda_y);
CotensorSpace cotensor(const BicomoduleFD& x, const LeftComoduleFD& y);
CotensorSpace cotensor(const BicomoduleFD& x, const BicomoduleFD& y);
CotensorSpace cotensor(const RightComoduleFD& x, const LeftComoduleFD& y);

LeftComoduleFD tensor_comodules(const LeftComoduleFD& m, const LeftComoduleFD& p);
LeftComoduleFD cofree_comodule(const BasePtr& base, std::size_t d);
LeftComoduleFD regular_left(const BasePtr& base);
LeftComoduleFD trivial_left(const BasePtr& base);
RightComoduleFD regular_right(const BasePtr& base);
BicomoduleFD regular_bicomodule(const BasePtr& base);
// lambda(v) = z (x) v; z must be grouplike.
LeftComoduleFD simple_graded_comodule(const BasePtr& base, std::size_t z);
// Restriction of the coaction to a subcomodule given by a subspace.
LeftComoduleFD subcomodule(const LeftComoduleFD& m, const Subspace& s, std::string label = {});
LeftComoduleFD direct_sum(const LeftComoduleFD& m, const LeftComoduleFD& p);

bool is_injective_comodule(const LeftComoduleFD& m);
Subspace right_coinvariants(const RightComoduleFD& x);
Subspace right_coinvariants(const BicomoduleFD& x);

// Corestrict f into k^l (x) S (x) k^r; throws corestriction-failure.
LinearMap corestrict_padded(const Subspace& s, std::size_t l, std::size_t r, const LinearMap& f,
                            const std::string& what);

}  // namespace trimod
