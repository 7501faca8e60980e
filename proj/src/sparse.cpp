#include "trimod/sparse.hpp"

#include <algorithm>

#include "trimod/report.hpp"

namespace trimod {

SparseMatrix::SparseMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), cols_(cols), rows_(rows) {}

void SparseMatrix::add(std::size_t i, std::size_t j, const Rational& v) {
  if (v.is_zero()) return;
  auto& row = rows_[i];
  auto [it, inserted] = row.try_emplace(j, field_.reduce(v));
  if (!inserted) {
    it->second = field_.add(it->second, field_.reduce(v));
    if (it->second.is_zero()) row.erase(it);
  }
}

void SparseMatrix::add_map(const Rational& coef, const LinearMap& m) {
  add_kron(coef, {Factor::of(m)});
}

void SparseMatrix::add_kron(const Rational& coef, const std::vector<Factor>& factors) {
  std::size_t r = 1;
  std::size_t c = 1;
  for (const auto& f : factors) {
    r *= f.rows();
    c *= f.cols();
  }
  if (r != rows() || c != cols_) {
    throw Error("shape-mismatch", "kronecker term does not match system shape");
  }
  Rational cf = field_.reduce(coef);
  if (cf.is_zero()) return;

  struct Entry {
    std::size_t i, j;
    Rational v;
  };
  // Expand the product factor by factor; each step multiplies indices out.
  std::vector<Entry> acc{{0, 0, cf}};
  for (const auto& f : factors) {
    std::vector<Entry> next;
    if (!f.map) {
      next.reserve(acc.size() * f.dim);
      for (const auto& e : acc) {
        for (std::size_t d = 0; d < f.dim; ++d) next.push_back({e.i * f.dim + d, e.j * f.dim + d, e.v});
      }
    } else {
      std::vector<Entry> nz;
      for (std::size_t a = 0; a < f.map->rows(); ++a) {
        for (std::size_t b = 0; b < f.map->cols(); ++b) {
          const Rational& v = f.map->at(a, b);
          if (!v.is_zero()) nz.push_back({a, b, v});
        }
      }
      next.reserve(acc.size() * nz.size());
      for (const auto& e : acc) {
        for (const auto& z : nz) {
          next.push_back({e.i * f.map->rows() + z.i, e.j * f.map->cols() + z.j, field_.mul(e.v, z.v)});
        }
      }
    }
    acc = std::move(next);
  }
  for (const auto& e : acc) add(e.i, e.j, e.v);
}

std::vector<SparseRow> SparseMatrix::to_rows() const {
  std::vector<SparseRow> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.emplace_back(row.begin(), row.end());
  return out;
}

LinearMap SparseMatrix::to_dense() const {
  LinearMap out(field_, rows_.size(), cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [j, v] : rows_[i]) out.set(i, j, v);
  }
  return out;
}

LinearMap SparseMatrix::times(const LinearMap& g) const {
  if (g.rows() != cols_) throw Error("shape-mismatch", "sparse product with " + shape_string(g));
  LinearMap out(field_, rows_.size(), g.cols());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [k, v] : rows_[i]) {
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const Rational& w = g.at(k, j);
        if (!w.is_zero()) out.add_to(i, j, field_.mul(v, w));
      }
    }
  }
  return out;
}

LinearMap kron_apply(const std::vector<Factor>& factors, const LinearMap& g) {
  std::size_t r = 1, c = 1;
  for (const auto& f : factors) {
    r *= f.rows();
    c *= f.cols();
  }
  SparseMatrix s(g.field(), r, c);
  s.add_kron(Rational(1), factors);
  return s.times(g);
}

std::vector<SparseRow> dense_rows(const LinearMap& m) {
  std::vector<SparseRow> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) out[i].emplace_back(j, m.at(i, j));
    }
  }
  return out;
}

std::vector<std::size_t> Echelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

LinearMap Echelon::kernel(const Field& f) const {
  auto free = free_columns();
  LinearMap out(f, cols, free.size());
  std::vector<std::size_t> free_index(cols, SIZE_MAX);
  for (std::size_t k = 0; k < free.size(); ++k) {
    free_index[free[k]] = k;
    out.set(free[k], k, Rational(1));
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) {
      if (c == pivots[r]) continue;
      out.set(pivots[r], free_index[c], f.neg(v));
    }
  }
  return out;
}

Echelon row_reduce(const Field& f, std::size_t cols, const std::vector<SparseRow>& input) {
  std::vector<SparseRow> basis;
  std::vector<std::size_t> pivot_of(cols, SIZE_MAX);  // column -> basis row
  std::vector<Rational> acc(cols);
  std::vector<char> touched(cols, 0);
  std::vector<std::size_t> support;

  for (const auto& row : input) {
    if (row.empty()) continue;
    support.clear();
    for (const auto& [c, v] : row) {
      acc[c] = f.add(acc[c], v);
      if (!touched[c]) {
        touched[c] = 1;
        support.push_back(c);
      }
    }
    // Eliminate existing pivots in increasing column order. Pivot rows are
    // supported on columns >= their pivot, so fill-in only moves rightwards.
    std::make_heap(support.begin(), support.end(), std::greater<>());
    SparseRow reduced;
    while (!support.empty()) {
      std::pop_heap(support.begin(), support.end(), std::greater<>());
      std::size_t c = support.back();
      support.pop_back();
      touched[c] = 0;
      Rational v = acc[c];
      acc[c] = Rational();
      if (v.is_zero()) continue;
      std::size_t p = pivot_of[c];
      if (p == SIZE_MAX) {
        reduced.emplace_back(c, v);
        continue;
      }
      for (const auto& [cc, pv] : basis[p]) {
        if (cc == c) continue;
        acc[cc] = f.sub(acc[cc], f.mul(v, pv));
        if (!touched[cc]) {
          touched[cc] = 1;
          support.push_back(cc);
          std::push_heap(support.begin(), support.end(), std::greater<>());
        }
      }
    }
    if (reduced.empty()) continue;
    Rational lead_inv = f.inv(reduced.front().second);
    for (auto& e : reduced) e.second = f.mul(e.second, lead_inv);
    pivot_of[reduced.front().first] = basis.size();
    basis.push_back(std::move(reduced));
  }

  Echelon out;
  out.cols = cols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of[c] != SIZE_MAX) out.pivots.push_back(c);
  }
  // Back substitution from the rightmost pivot, so each row is cleared of
  // every later pivot column using already-reduced rows.
  std::vector<SparseRow> reduced(out.pivots.size());
  for (std::size_t k = out.pivots.size(); k-- > 0;) {
    const SparseRow& row = basis[pivot_of[out.pivots[k]]];
    for (const auto& [c, v] : row) {
      acc[c] = v;
      touched[c] = 1;
    }
    for (std::size_t later = k + 1; later < out.pivots.size(); ++later) {
      std::size_t pc = out.pivots[later];
      if (!touched[pc]) continue;
      Rational v = acc[pc];
      if (v.is_zero()) continue;
      for (const auto& [c, pv] : reduced[later]) {
        acc[c] = f.sub(acc[c], f.mul(v, pv));
        touched[c] = 1;
      }
    }
    SparseRow clean;
    for (std::size_t c = out.pivots[k]; c < cols; ++c) {
      if (!touched[c]) continue;
      if (!acc[c].is_zero()) clean.emplace_back(c, acc[c]);
      acc[c] = Rational();
      touched[c] = 0;
    }
    reduced[k] = std::move(clean);
  }
  out.rows = std::move(reduced);
  return out;
}

}  // namespace trimod
