#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "trimod/field.hpp"
#include "trimod/rational.hpp"

namespace trimod {

// Dense row-major matrix over a Field. A map V -> W has rows = dim W and
// cols = dim V. Tensor spaces use the row-major convention
// e_i (x) e_j  ->  i * dim2 + j everywhere.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Field f, std::size_t rows, std::size_t cols);

  static LinearMap identity(Field f, std::size_t n);
  static LinearMap zero(Field f, std::size_t rows, std::size_t cols) { return {f, rows, cols}; }
  static LinearMap from_ints(Field f, std::size_t rows, std::size_t cols,
                             std::initializer_list<long long> values);
  static LinearMap from_column(Field f, const std::vector<Rational>& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Rational& v) { data_[i * cols_ + j] = field_.reduce(v); }
  void add_to(std::size_t i, std::size_t j, const Rational& v);

  const std::vector<Rational>& entries() const noexcept { return data_; }
  std::vector<Rational> column(std::size_t j) const;

  bool is_zero() const;
  bool is_identity() const;
  std::size_t nonzeros() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// g * f is the composite g o f.
LinearMap operator*(const LinearMap& g, const LinearMap& f);
LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);
LinearMap scale(const Rational& c, const LinearMap& f);

LinearMap tensor_map(const LinearMap& f, const LinearMap& g);
LinearMap tensor_map(std::initializer_list<LinearMap> factors);
// k^m (x) k^n -> k^n (x) k^m.
LinearMap swap_map(Field f, std::size_t m, std::size_t n);
LinearMap transpose(const LinearMap& f);
LinearMap power(const LinearMap& f, unsigned k);

LinearMap select_rows(const LinearMap& f, const std::vector<std::size_t>& rows);
LinearMap select_cols(const LinearMap& f, const std::vector<std::size_t>& cols);
LinearMap hstack(const std::vector<LinearMap>& blocks, Field f, std::size_t rows);
LinearMap vstack(const std::vector<LinearMap>& blocks, Field f, std::size_t cols);

std::size_t rank(const LinearMap& f);

// Human-readable location of the first differing entry, or empty if equal.
std::string mismatch_witness(const LinearMap& a, const LinearMap& b);
std::string shape_string(const LinearMap& f);

}  // namespace trimod
