#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trimod/linear_map.hpp"
#include "trimod/sparse.hpp"

namespace trimod {

// A subspace of k^n held in a canonical basis: basis vector k has a 1 at
// coordinate coords[k], zeros at the other coordinates, and zeros at every
// index after coords[k]. Equal spans therefore have equal bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const LinearMap& columns);
  static Subspace whole(Field f, std::size_t n);
  static Subspace zero(Field f, std::size_t n);
  static Subspace kernel_of(const SparseMatrix& m);
  // Trusts that the inputs are already in canonical form.
  static Subspace from_canonical(LinearMap basis, std::vector<std::size_t> coords) {
    return Subspace(std::move(basis), std::move(coords));
  }

  std::size_t ambient() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const Field& field() const noexcept { return basis_.field(); }
  const LinearMap& inclusion() const noexcept { return basis_; }
  const std::vector<std::size_t>& coords() const noexcept { return coords_; }

  // Coordinates of the columns of v, assuming they lie in the subspace.
  LinearMap coordinates(const LinearMap& v) const;
  bool contains(const LinearMap& v) const;
  // g with inclusion * g == f; throws corestriction-failure naming `what`.
  LinearMap corestrict(const LinearMap& f, const std::string& what) const;
  std::optional<LinearMap> try_corestrict(const LinearMap& f) const;
  // Rows cut out the subspace: A v = 0 iff v lies in it.
  LinearMap annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(LinearMap basis, std::vector<std::size_t> coords)
      : basis_(std::move(basis)), coords_(std::move(coords)) {}

  LinearMap basis_;
  std::vector<std::size_t> coords_;
};

// The subspace k^l (x) S (x) k^r of k^l (x) k^n (x) k^r, in canonical form.
Subspace padded(const Subspace& s, std::size_t l, std::size_t r);

Subspace kernel_basis(const LinearMap& f);

struct Cokernel {
  std::size_t dim = 0;
  LinearMap projection;  // codomain(f) -> quotient
  LinearMap section;     // quotient -> codomain(f), projection * section = id
};
Cokernel cokernel_projection(const LinearMap& f);
// Quotient of k^n by a subspace.
Cokernel quotient(const Subspace& s);
// Quotient of k^n by the span of sparse generators.
Cokernel quotient_by_rows(const Field& f, std::size_t n, const std::vector<SparseRow>& generators);

Subspace subspace_intersection(const Subspace& u, const Subspace& w);
Subspace image(const LinearMap& f);

std::optional<LinearMap> solve_right_inverse(const LinearMap& f);
std::optional<LinearMap> solve_left_inverse(const LinearMap& f);
std::optional<LinearMap> inverse(const LinearMap& f);

}  // namespace trimod
