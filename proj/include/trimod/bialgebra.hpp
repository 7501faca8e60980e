#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trimod/linear_map.hpp"
#include "trimod/report.hpp"

namespace trimod {

struct AlgebraFD {
  Field field;
  std::size_t dim = 0;
  LinearMap mul;   // n x n^2
  LinearMap unit;  // n x 1
};

struct CoalgebraFD {
  Field field;
  std::size_t dim = 0;
  LinearMap comul;   // n^2 x n
  LinearMap counit;  // 1 x n
};

struct BialgebraFD {
  Field field;
  std::size_t dim = 0;
  LinearMap mul;
  LinearMap unit;
  LinearMap comul;
  LinearMap counit;
  std::vector<std::string> basis;  // display names, one per basis vector

  AlgebraFD algebra() const { return {field, dim, mul, unit}; }
  CoalgebraFD coalgebra() const { return {field, dim, comul, counit}; }
  LinearMap id() const { return LinearMap::identity(field, dim); }
  // unit o counit, the identity for convolution.
  LinearMap unit_counit() const { return unit * counit; }

  friend bool operator==(const BialgebraFD& a, const BialgebraFD& b) {
    return a.field == b.field && a.dim == b.dim && a.mul == b.mul && a.unit == b.unit &&
           a.comul == b.comul && a.counit == b.counit;
  }
};

// Multiplication of the tensor-square algebra B (x) B.
LinearMap tensor_square_mul(const BialgebraFD& b);
bool is_grouplike(const BialgebraFD& b, std::size_t index);

Report validate_bialgebra(const BialgebraFD& b);

// mul o (f (x) g) o comul.
LinearMap convolution(const LinearMap& f, const LinearMap& g, const CoalgebraFD& c, const AlgebraFD& a);
LinearMap convolution(const LinearMap& f, const LinearMap& g, const BialgebraFD& b);

struct AntipodeSearch {
  std::optional<LinearMap> antipode;
  // Ranks of the stacked coefficient matrix and of the augmented matrix;
  // they differ exactly when no antipode exists.
  std::size_t rank_coefficients = 0;
  std::size_t rank_augmented = 0;
  std::size_t unknowns = 0;
};
AntipodeSearch find_antipode(const BialgebraFD& b);
AntipodeSearch find_twisted_antipode(const BialgebraFD& b);

using MonoidTable = std::vector<std::vector<std::size_t>>;
std::size_t monoid_identity(const MonoidTable& table);
BialgebraFD monoid_bialgebra(Field f, const MonoidTable& table, std::vector<std::string> names = {});
BialgebraFD trivial_bialgebra(Field f);
BialgebraFD sweedler_h4(Field f);
BialgebraFD op_cop(const BialgebraFD& b, bool flip_mul, bool flip_comul);

// Left multiplication by basis vector a, as an n x n matrix.
LinearMap left_multiplication(const AlgebraFD& a, std::size_t index);
bool is_semisimple_algebra(const AlgebraFD& a);

}  // namespace trimod
