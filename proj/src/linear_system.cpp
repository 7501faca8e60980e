#include "trimod/linear_system.hpp"

#include <map>

#include "trimod/report.hpp"

namespace trimod {

MatrixEquationSystem::MatrixEquationSystem(Field f, std::size_t p, std::size_t q)
    : field_(f), p_(p), q_(q) {}

void MatrixEquationSystem::add_equation(const std::vector<Term>& terms, const LinearMap* rhs) {
  if (terms.empty()) throw Error("shape-mismatch", "equation without terms");
  auto out_rows = [&](const Term& t) { return t.left ? t.left->rows() : t.a * p_ * t.b; };
  auto out_cols = [&](const Term& t) { return t.right ? t.right->cols() : t.a * q_ * t.b; };
  std::size_t U = out_rows(terms.front());
  std::size_t V = out_cols(terms.front());
  for (const auto& t : terms) {
    if (out_rows(t) != U || out_cols(t) != V) throw Error("shape-mismatch", "equation terms disagree in shape");
    if (t.left && t.left->cols() != t.a * p_ * t.b) throw Error("shape-mismatch", "left factor shape");
    if (t.right && t.right->rows() != t.a * q_ * t.b) throw Error("shape-mismatch", "right factor shape");
  }
  if (rhs && (rhs->rows() != U || rhs->cols() != V)) throw Error("shape-mismatch", "right-hand side shape");

  std::vector<std::map<std::size_t, Rational>> eq(U * V);
  for (const auto& t : terms) {
    Rational coef = field_.reduce(t.coef);
    if (coef.is_zero()) continue;
    // Column (s,i,t) of L pairs with row (s,j,t) of R; the product
    // contributes L[u,(s,i,t)] R[(s,j,t),v] to the coefficient of X_ij.
    for (std::size_t s = 0; s < t.a; ++s) {
      for (std::size_t r = 0; r < t.b; ++r) {
        for (std::size_t i = 0; i < p_; ++i) {
          std::size_t lc = (s * p_ + i) * t.b + r;
          std::vector<std::pair<std::size_t, Rational>> lcol;
          if (t.left) {
            for (std::size_t u = 0; u < U; ++u) {
              if (!t.left->at(u, lc).is_zero()) lcol.emplace_back(u, t.left->at(u, lc));
            }
          } else {
            lcol.emplace_back(lc, Rational(1));
          }
          if (lcol.empty()) continue;
          for (std::size_t j = 0; j < q_; ++j) {
            std::size_t rr = (s * q_ + j) * t.b + r;
            std::vector<std::pair<std::size_t, Rational>> rrow;
            if (t.right) {
              for (std::size_t v = 0; v < V; ++v) {
                if (!t.right->at(rr, v).is_zero()) rrow.emplace_back(v, t.right->at(rr, v));
              }
            } else {
              rrow.emplace_back(rr, Rational(1));
            }
            std::size_t unknown = i * q_ + j;
            for (const auto& [u, lv] : lcol) {
              Rational lcv = field_.mul(coef, lv);
              for (const auto& [v, rv] : rrow) {
                auto& slot = eq[u * V + v][unknown];
                slot = field_.add(slot, field_.mul(lcv, rv));
              }
            }
          }
        }
      }
    }
  }
  for (std::size_t e = 0; e < U * V; ++e) {
    SparseRow row;
    for (const auto& [c, v] : eq[e]) {
      if (!v.is_zero()) row.emplace_back(c, v);
    }
    if (rhs) {
      const Rational& r = rhs->at(e / V, e % V);
      if (!r.is_zero()) row.emplace_back(unknowns(), r);
    }
    if (!row.empty()) rows_.push_back(std::move(row));
  }
}

LinearMap MatrixEquationSystem::unflatten(const std::vector<Rational>& v) const {
  LinearMap x(field_, p_, q_);
  for (std::size_t i = 0; i < p_; ++i) {
    for (std::size_t j = 0; j < q_; ++j) x.set(i, j, v[i * q_ + j]);
  }
  return x;
}

std::vector<LinearMap> MatrixEquationSystem::kernel() const {
  std::vector<SparseRow> homogeneous;
  homogeneous.reserve(rows_.size());
  for (const auto& row : rows_) {
    SparseRow h;
    for (const auto& e : row) {
      if (e.first < unknowns()) h.push_back(e);
    }
    homogeneous.push_back(std::move(h));
  }
  Echelon e = row_reduce(field_, unknowns(), homogeneous);
  LinearMap k = e.kernel(field_);
  std::vector<LinearMap> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(unflatten(k.column(c)));
  return out;
}

MatrixEquationSystem::Solution MatrixEquationSystem::solve() const {
  Echelon aug = row_reduce(field_, unknowns() + 1, rows_);
  Solution sol;
  sol.rank_augmented = aug.rank();
  sol.rank_coefficients = aug.rank();
  if (!aug.pivots.empty() && aug.pivots.back() == unknowns()) {
    sol.rank_coefficients = aug.rank() - 1;
    return sol;
  }
  std::vector<Rational> x(unknowns());
  for (std::size_t r = 0; r < aug.rank(); ++r) {
    for (const auto& [c, v] : aug.rows[r]) {
      if (c == unknowns()) x[aug.pivots[r]] = v;
    }
  }
  sol.x = unflatten(x);
  return sol;
}

}  // namespace trimod
