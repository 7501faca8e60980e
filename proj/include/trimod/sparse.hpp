#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "trimod/linear_map.hpp"

namespace trimod {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// A tensor factor for SparseMatrix::add_kron: either a matrix or an
// identity of the given dimension.
struct Factor {
  const LinearMap* map = nullptr;
  std::size_t dim = 0;

  static Factor id(std::size_t n) { return {nullptr, n}; }
  static Factor of(const LinearMap& m) { return {&m, 0}; }
  std::size_t rows() const { return map ? map->rows() : dim; }
  std::size_t cols() const { return map ? map->cols() : dim; }
};

// Row-wise sparse accumulator used to assemble large Kronecker-structured
// systems without materializing them densely.
class SparseMatrix {
 public:
  SparseMatrix(Field f, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  void add(std::size_t i, std::size_t j, const Rational& v);
  void add_map(const Rational& coef, const LinearMap& m);
  // Adds coef * (F_1 (x) ... (x) F_k).
  void add_kron(const Rational& coef, const std::vector<Factor>& factors);

  std::vector<SparseRow> to_rows() const;
  LinearMap to_dense() const;
  // this * g without densifying this.
  LinearMap times(const LinearMap& g) const;

 private:
  Field field_;
  std::size_t cols_;
  std::vector<std::map<std::size_t, Rational>> rows_;
};

// Reduced row echelon form. rows[k] has leading 1 at pivots[k]; pivots are
// strictly increasing and every pivot column is zero in the other rows.
struct Echelon {
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;
  std::vector<SparseRow> rows;

  std::size_t rank() const { return pivots.size(); }
  std::vector<std::size_t> free_columns() const;
  // Kernel basis as columns of a cols x (cols - rank) matrix.
  LinearMap kernel(const Field& f) const;
};

// (F_1 (x) ... (x) F_k) * g.
LinearMap kron_apply(const std::vector<Factor>& factors, const LinearMap& g);

Echelon row_reduce(const Field& f, std::size_t cols, const std::vector<SparseRow>& rows);
std::vector<SparseRow> dense_rows(const LinearMap& m);

}  // namespace trimod
