#include "trimod/linear_map.hpp"

#include <sstream>

#include "trimod/report.hpp"
#include "trimod/sparse.hpp"

namespace trimod {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("shape-mismatch", what);
}

void require_field(const LinearMap& a, const LinearMap& b) {
  if (a.field() != b.field()) throw Error("field-mismatch", "operands over different fields");
}

// Nonzero (column, value) pairs of every row.
std::vector<std::vector<std::pair<std::size_t, const Rational*>>> row_support(const LinearMap& m) {
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& v = m.at(i, j);
      if (!v.is_zero()) out[i].emplace_back(j, &v);
    }
  }
  return out;
}

}  // namespace

LinearMap::LinearMap(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}

LinearMap LinearMap::identity(Field f, std::size_t n) {
  LinearMap m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Rational(1);
  return m;
}

LinearMap LinearMap::from_ints(Field f, std::size_t rows, std::size_t cols,
                               std::initializer_list<long long> values) {
  require(values.size() == rows * cols, "initializer size does not match shape");
  LinearMap m(f, rows, cols);
  std::size_t k = 0;
  for (long long v : values) m.data_[k++] = f.from_int(v);
  return m;
}

LinearMap LinearMap::from_column(Field f, const std::vector<Rational>& v) {
  LinearMap m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = f.reduce(v[i]);
  return m;
}

void LinearMap::add_to(std::size_t i, std::size_t j, const Rational& v) {
  Rational& slot = data_[i * cols_ + j];
  slot = field_.add(slot, field_.reduce(v));
}

std::vector<Rational> LinearMap::column(std::size_t j) const {
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

bool LinearMap::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool LinearMap::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& v = at(i, j);
      if (i == j ? !v.is_one() : !v.is_zero()) return false;
    }
  }
  return true;
}

std::size_t LinearMap::nonzeros() const {
  std::size_t n = 0;
  for (const auto& v : data_) n += v.is_zero() ? 0 : 1;
  return n;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

LinearMap operator*(const LinearMap& g, const LinearMap& f) {
  require_field(g, f);
  require(g.cols() == f.rows(), "compose " + shape_string(g) + " after " + shape_string(f));
  const Field& fld = g.field();
  LinearMap out(fld, g.rows(), f.cols());
  auto fs = row_support(f);
  std::vector<Rational> acc(f.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    bool any = false;
    for (std::size_t k = 0; k < g.cols(); ++k) {
      const Rational& a = g.at(i, k);
      if (a.is_zero()) continue;
      for (const auto& [j, b] : fs[k]) {
        acc[j] = fld.add(acc[j], fld.mul(a, *b));
        any = true;
      }
    }
    if (!any) continue;
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (!acc[j].is_zero()) {
        out.set(i, j, acc[j]);
        acc[j] = Rational();
      }
    }
  }
  return out;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  require_field(a, b);
  require(a.rows() == b.rows() && a.cols() == b.cols(), "add " + shape_string(a) + " and " + shape_string(b));
  LinearMap out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!b.at(i, j).is_zero()) out.add_to(i, j, b.at(i, j));
    }
  }
  return out;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  return a + scale(Rational(-1), b);
}

LinearMap scale(const Rational& c, const LinearMap& f) {
  const Field& fld = f.field();
  Rational cc = fld.reduce(c);
  LinearMap out(fld, f.rows(), f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (!f.at(i, j).is_zero()) out.set(i, j, fld.mul(cc, f.at(i, j)));
    }
  }
  return out;
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
  require_field(f, g);
  SparseMatrix s(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
  s.add_kron(Rational(1), {Factor::of(f), Factor::of(g)});
  return s.to_dense();
}

LinearMap tensor_map(std::initializer_list<LinearMap> factors) {
  require(factors.size() > 0, "empty tensor product");
  auto it = factors.begin();
  LinearMap out = *it++;
  for (; it != factors.end(); ++it) out = tensor_map(out, *it);
  return out;
}

LinearMap swap_map(Field f, std::size_t m, std::size_t n) {
  LinearMap out(f, m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(j * m + i, i * n + j, Rational(1));
  }
  return out;
}

LinearMap transpose(const LinearMap& f) {
  LinearMap out(f.field(), f.cols(), f.rows());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) out.set(j, i, f.at(i, j));
  }
  return out;
}

LinearMap power(const LinearMap& f, unsigned k) {
  require(f.rows() == f.cols(), "power of a non-square map");
  LinearMap out = LinearMap::identity(f.field(), f.rows());
  for (unsigned i = 0; i < k; ++i) out = f * out;
  return out;
}

LinearMap select_rows(const LinearMap& f, const std::vector<std::size_t>& rows) {
  LinearMap out(f.field(), rows.size(), f.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r] < f.rows(), "row index out of range");
    for (std::size_t j = 0; j < f.cols(); ++j) out.set(r, j, f.at(rows[r], j));
  }
  return out;
}

LinearMap select_cols(const LinearMap& f, const std::vector<std::size_t>& cols) {
  LinearMap out(f.field(), f.rows(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c] < f.cols(), "column index out of range");
    for (std::size_t i = 0; i < f.rows(); ++i) out.set(i, c, f.at(i, cols[c]));
  }
  return out;
}

LinearMap hstack(const std::vector<LinearMap>& blocks, Field f, std::size_t rows) {
  std::size_t total = 0;
  for (const auto& b : blocks) {
    require(b.rows() == rows, "hstack row mismatch");
    total += b.cols();
  }
  LinearMap out(f, rows, total);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, off + j, b.at(i, j));
    }
    off += b.cols();
  }
  return out;
}

LinearMap vstack(const std::vector<LinearMap>& blocks, Field f, std::size_t cols) {
  std::size_t total = 0;
  for (const auto& b : blocks) {
    require(b.cols() == cols, "vstack column mismatch");
    total += b.rows();
  }
  LinearMap out(f, total, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) out.set(off + i, j, b.at(i, j));
    }
    off += b.rows();
  }
  return out;
}

std::size_t rank(const LinearMap& f) {
  return row_reduce(f.field(), f.cols(), dense_rows(f)).rank();
}

std::string shape_string(const LinearMap& f) {
  return std::to_string(f.rows()) + "x" + std::to_string(f.cols());
}

std::string mismatch_witness(const LinearMap& a, const LinearMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return "shape " + shape_string(a) + " vs " + shape_string(b);
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) != b.at(i, j)) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << "): " << a.at(i, j).to_string() << " vs "
           << b.at(i, j).to_string();
        return os.str();
      }
    }
  }
  return {};
}

}  // namespace trimod
