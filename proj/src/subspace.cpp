#include "trimod/subspace.hpp"

#include "trimod/report.hpp"

namespace trimod {

Subspace Subspace::span(const LinearMap& columns) {
  const Field& f = columns.field();
  std::size_t n = columns.rows();
  std::vector<SparseRow> rows(columns.cols());
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    for (std::size_t i = n; i-- > 0;) {
      const Rational& v = columns.at(i, j);
      if (!v.is_zero()) rows[j].emplace_back(n - 1 - i, v);
    }
  }
  Echelon e = row_reduce(f, n, rows);
  std::size_t d = e.rank();
  LinearMap basis(f, n, d);
  std::vector<std::size_t> coords(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t col = d - 1 - k;
    coords[col] = n - 1 - e.pivots[k];
    for (const auto& [c, v] : e.rows[k]) basis.set(n - 1 - c, col, v);
  }
  return Subspace(std::move(basis), std::move(coords));
}

Subspace Subspace::whole(Field f, std::size_t n) {
  std::vector<std::size_t> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = i;
  return Subspace(LinearMap::identity(f, n), std::move(coords));
}

Subspace Subspace::zero(Field f, std::size_t n) { return Subspace(LinearMap(f, n, 0), {}); }

Subspace Subspace::kernel_of(const SparseMatrix& m) {
  Echelon e = row_reduce(m.field(), m.cols(), m.to_rows());
  return Subspace(e.kernel(m.field()), e.free_columns());
}

LinearMap Subspace::coordinates(const LinearMap& v) const { return select_rows(v, coords_); }

bool Subspace::contains(const LinearMap& v) const { return try_corestrict(v).has_value(); }

std::optional<LinearMap> Subspace::try_corestrict(const LinearMap& f) const {
  if (f.rows() != ambient()) throw Error("shape-mismatch", "corestriction target has wrong ambient dimension");
  LinearMap g = coordinates(f);
  if (basis_ * g != f) return std::nullopt;
  return g;
}

LinearMap Subspace::corestrict(const LinearMap& f, const std::string& what) const {
  auto g = try_corestrict(f);
  if (!g) throw Error("corestriction-failure", "image of " + what + " is not contained in the subspace");
  return *g;
}

LinearMap Subspace::annihilator() const {
  const Field& f = field();
  std::size_t n = ambient();
  std::vector<char> is_coord(n, 0);
  for (auto c : coords_) is_coord[c] = 1;
  LinearMap out(f, n - dim(), n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_coord[i]) continue;
    out.set(r, i, Rational(1));
    for (std::size_t k = 0; k < dim(); ++k) {
      const Rational& b = basis_.at(i, k);
      if (!b.is_zero()) out.set(r, coords_[k], f.neg(b));
    }
    ++r;
  }
  return out;
}

Subspace padded(const Subspace& s, std::size_t l, std::size_t r) {
  // Tensoring a canonical basis with unit vectors on either side stays
  // canonical, so the padded basis is built directly.
  std::size_t n = s.ambient(), d = s.dim();
  LinearMap basis(s.field(), l * n * r, l * d * r);
  std::vector<std::size_t> coords(l * d * r);
  for (std::size_t a = 0; a < l; ++a) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t b = 0; b < r; ++b) {
        std::size_t col = (a * d + k) * r + b;
        coords[col] = (a * n + s.coords()[k]) * r + b;
        for (std::size_t i = 0; i < n; ++i) {
          const Rational& v = s.inclusion().at(i, k);
          if (!v.is_zero()) basis.set((a * n + i) * r + b, col, v);
        }
      }
    }
  }
  return Subspace::from_canonical(std::move(basis), std::move(coords));
}

Subspace kernel_basis(const LinearMap& f) {
  SparseMatrix s(f.field(), f.rows(), f.cols());
  s.add_map(Rational(1), f);
  return Subspace::kernel_of(s);
}

Subspace image(const LinearMap& f) { return Subspace::span(f); }

Cokernel quotient(const Subspace& s) {
  const Field& f = s.field();
  std::size_t n = s.ambient();
  std::vector<char> is_coord(n, 0);
  for (auto c : s.coords()) is_coord[c] = 1;
  Cokernel out;
  out.dim = n - s.dim();
  out.projection = LinearMap(f, out.dim, n);
  out.section = LinearMap(f, n, out.dim);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_coord[i]) continue;
    out.projection.set(r, i, Rational(1));
    out.section.set(i, r, Rational(1));
    for (std::size_t k = 0; k < s.dim(); ++k) {
      const Rational& b = s.inclusion().at(i, k);
      if (!b.is_zero()) out.projection.set(r, s.coords()[k], f.neg(b));
    }
    ++r;
  }
  return out;
}

Cokernel quotient_by_rows(const Field& f, std::size_t n, const std::vector<SparseRow>& generators) {
  Echelon e = row_reduce(f, n, generators);
  auto free = e.free_columns();
  std::vector<std::size_t> free_index(n, SIZE_MAX);
  for (std::size_t k = 0; k < free.size(); ++k) free_index[free[k]] = k;
  Cokernel out;
  out.dim = free.size();
  out.projection = LinearMap(f, out.dim, n);
  out.section = LinearMap(f, n, out.dim);
  for (std::size_t k = 0; k < free.size(); ++k) {
    out.projection.set(k, free[k], Rational(1));
    out.section.set(free[k], k, Rational(1));
  }
  for (std::size_t r = 0; r < e.rank(); ++r) {
    for (const auto& [c, v] : e.rows[r]) {
      if (c != e.pivots[r]) out.projection.set(free_index[c], e.pivots[r], f.neg(v));
    }
  }
  return out;
}

Cokernel cokernel_projection(const LinearMap& f) { return quotient(image(f)); }

Subspace subspace_intersection(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw Error("shape-mismatch", "intersection of subspaces of different ambients");
  LinearMap a = w.annihilator() * u.inclusion();
  Subspace k = kernel_basis(a);
  return Subspace::span(u.inclusion() * k.inclusion());
}

namespace {

// Some X with f X = rhs, or nothing.
std::optional<LinearMap> solve(const LinearMap& f, const LinearMap& rhs) {
  std::size_t n = f.cols();
  std::size_t k = rhs.cols();
  std::vector<SparseRow> rows(f.rows());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!f.at(i, j).is_zero()) rows[i].emplace_back(j, f.at(i, j));
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (!rhs.at(i, j).is_zero()) rows[i].emplace_back(n + j, rhs.at(i, j));
    }
  }
  Echelon e = row_reduce(f.field(), n + k, rows);
  LinearMap x(f.field(), n, k);
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (const auto& [c, v] : e.rows[r]) {
      if (c >= n) x.set(e.pivots[r], c - n, v);
    }
  }
  return x;
}

}  // namespace

std::optional<LinearMap> solve_right_inverse(const LinearMap& f) {
  return solve(f, LinearMap::identity(f.field(), f.rows()));
}

std::optional<LinearMap> solve_left_inverse(const LinearMap& f) {
  auto g = solve(transpose(f), LinearMap::identity(f.field(), f.cols()));
  if (!g) return std::nullopt;
  return transpose(*g);
}

std::optional<LinearMap> inverse(const LinearMap& f) {
  if (f.rows() != f.cols()) return std::nullopt;
  return solve_right_inverse(f);
}

}  // namespace trimod
