#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's reducer or solver; matrices are read entrywise only.

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "trimod/linear_map.hpp"

namespace oracle {

using Grid = std::vector<std::vector<mpq_class>>;

inline Grid to_grid(const trimod::LinearMap& m) {
  Grid a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).to_mpq();
  }
  return a;
}

inline std::size_t rank(Grid a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const trimod::LinearMap& m) { return rank(to_grid(m)); }

// Dimension of the solution space of a linear condition on p x q matrices,
// found by evaluating the condition on every matrix unit and ranking the
// resulting columns.
inline std::size_t solution_dim(std::size_t p, std::size_t q,
                                const std::function<trimod::LinearMap(const trimod::LinearMap&)>& condition) {
  Grid columns;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      trimod::LinearMap unit(trimod::Field::rationals(), p, q);
      unit.set(i, j, trimod::Rational(1));
      trimod::LinearMap image = condition(unit);
      std::vector<mpq_class> col;
      for (const auto& v : image.entries()) col.push_back(v.to_mpq());
      columns.push_back(col);
    }
  }
  if (columns.empty()) return 0;
  // rank of the transpose equals rank of the column matrix
  return p * q - rank(columns);
}

}  // namespace oracle
