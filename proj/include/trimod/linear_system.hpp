#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trimod/linear_map.hpp"
#include "trimod/sparse.hpp"

namespace trimod {

// Linear equations in an unknown p x q matrix X. Each equation is a sum of
// terms coef * L (I_a (x) X (x) I_b) R equated to a right-hand side, where a
// null L or R stands for the identity.
class MatrixEquationSystem {
 public:
  struct Term {
    Rational coef{1};
    const LinearMap* left = nullptr;
    std::size_t a = 1;
    std::size_t b = 1;
    const LinearMap* right = nullptr;
  };

  MatrixEquationSystem(Field f, std::size_t p, std::size_t q);

  std::size_t unknowns() const noexcept { return p_ * q_; }

  // Adds sum(terms) = rhs, or sum(terms) = 0 when rhs is null.
  void add_equation(const std::vector<Term>& terms, const LinearMap* rhs = nullptr);

  // Basis of the solution space of the homogeneous system.
  std::vector<LinearMap> kernel() const;

  struct Solution {
    std::optional<LinearMap> x;
    std::size_t rank_coefficients = 0;
    std::size_t rank_augmented = 0;
  };
  // A particular solution, with ranks certifying consistency or its absence.
  Solution solve() const;

  LinearMap unflatten(const std::vector<Rational>& v) const;

 private:
  Field field_;
  std::size_t p_, q_;
  std::vector<SparseRow> rows_;  // unknown columns then one rhs column
};

}  // namespace trimod
