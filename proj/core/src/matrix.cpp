// Copyright 2026 The wcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wcore/matrix.hpp"

#include <utility>

#include "wcore/errors.hpp"

namespace wcore {

Matrix::Matrix(Domain domain, std::size_t rows, std::size_t cols)
    : domain_(domain), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(domain)) {}

Matrix Matrix::identity(Domain domain, std::size_t n) {
  Matrix m(domain, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(domain);
  return m;
}

Matrix Matrix::from_ints(Domain domain, std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(domain, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Scalar::from_int(domain, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(Domain domain, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(domain, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!(rows[i][j].domain() == domain)) throw DomainError("entry outside domain " + domain.name());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

void Matrix::require_same_shape(const Matrix& other) const {
  if (!(domain_ == other.domain_)) throw DomainError("mixed matrix domains");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("matrix shapes differ");
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_shape(rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_shape(rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (!(lhs.domain_ == rhs.domain_)) throw DomainError("mixed matrix domains");
  if (lhs.cols_ != rhs.rows_) throw ShapeError("inner dimensions differ in product");
  Matrix out(lhs.domain_, lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& l = lhs(i, k);
      if (l.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs(k, j).is_zero()) continue;
        out(i, j) += l * rhs(k, j);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& e : m.entries_) e = s * e;
  return m;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.domain_ == rhs.domain_ && lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ &&
         lhs.entries_ == rhs.entries_;
}

Matrix Matrix::transpose() const {
  Matrix out(domain_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::star() const {
  Matrix out(domain_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = conjugate((*this)(i, j));
  }
  return out;
}

Matrix Matrix::submatrix(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw ShapeError("submatrix out of range");
  Matrix out(domain_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  }
  return out;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ',';
      out += (*this)(i, j).str();
    }
    out += ']';
  }
  out += ']';
  return out;
}

Matrix hstack(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows()) throw ShapeError("hstack row counts differ");
  Matrix out(lhs.domain(), lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) = lhs(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, lhs.cols() + j) = rhs(i, j);
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw ShapeError("vstack column counts differ");
  Matrix out(top.domain(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t j = 0; j < top.cols(); ++j) {
    for (std::size_t i = 0; i < top.rows(); ++i) out(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i) out(top.rows() + i, j) = bottom(i, j);
  }
  return out;
}

namespace {

void swap_rows(Matrix& m, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

}  // namespace

RrefResult rref(const Matrix& a, PivotStrategy strategy) {
  const Domain& d = a.domain();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix r = a;
  Matrix t = Matrix::identity(d, m);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::optional<std::size_t> chosen;
    for (std::size_t i = row; i < m; ++i) {
      if (r(i, col).is_zero()) continue;
      chosen = i;
      if (strategy == PivotStrategy::FirstNonzero) break;
    }
    if (!chosen) continue;
    swap_rows(r, row, *chosen);
    swap_rows(t, row, *chosen);

    const Scalar scale = invert(r(row, col));
    for (std::size_t j = 0; j < n; ++j) r(row, j) *= scale;
    for (std::size_t j = 0; j < m; ++j) t(row, j) *= scale;

    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Scalar factor = r(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= factor * r(row, j);
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (!t(row, j).is_zero()) t(i, j) -= factor * t(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  const std::size_t rk = pivots.size();
  return {std::move(r), std::move(pivots), rk, std::move(t)};
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

std::optional<Matrix> solve_right(const Matrix& b, const Matrix& a) {
  if (b.rows() != a.rows()) throw ShapeError("solve_right: row counts differ");
  if (!(b.domain() == a.domain())) throw DomainError("solve_right: mixed domains");
  const RrefResult red = rref(b);
  const Matrix c = red.transform * a;
  for (std::size_t i = red.rank; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (!c(i, j).is_zero()) return std::nullopt;
    }
  }
  Matrix x(b.domain(), b.cols(), a.cols());
  for (std::size_t i = 0; i < red.rank; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) x(red.pivots[i], j) = c(i, j);
  }
  return x;
}

std::optional<Matrix> solve_left(const Matrix& b, const Matrix& a) {
  if (b.cols() != a.cols()) throw ShapeError("solve_left: column counts differ");
  auto xt = solve_right(b.transpose(), a.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

bool right_ideal_contained(const Matrix& a, const Matrix& b) { return solve_right(b, a).has_value(); }

bool left_ideal_contained(const Matrix& a, const Matrix& b) { return solve_left(b, a).has_value(); }

bool right_annihilator_contained(const Matrix& a, const Matrix& f) { return solve_left(a, f).has_value(); }

bool left_annihilator_contained(const Matrix& a, const Matrix& p) { return solve_right(a, p).has_value(); }

RankFactorization rank_factorization(const Matrix& a) {
  const RrefResult red = rref(a);
  const std::size_t r = red.rank;
  Matrix left(a.domain(), a.rows(), r);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) left(i, k) = a(i, red.pivots[k]);
  }
  Matrix right = red.reduced.submatrix(0, 0, r, a.cols());
  return {std::move(left), std::move(right), r};
}

bool is_unit(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("inverse of a non-square matrix");
  RrefResult red = rref(a);
  if (red.rank != a.rows()) throw NotInvertible("matrix is singular");
  return std::move(red.transform);
}

bool is_idempotent(const Matrix& e) { return e.is_square() && e * e == e; }

bool is_projection(const Matrix& p) { return is_idempotent(p) && p.star() == p; }

std::optional<Matrix> solve_matrix_equations(std::span<const MatrixEquation> equations, std::size_t x_rows,
                                             std::size_t x_cols) {
  if (equations.empty()) throw ShapeError("no equations");
  const Domain& d = equations.front().rhs.domain();
  std::size_t total_rows = 0;
  for (const auto& eq : equations) total_rows += eq.rhs.rows() * eq.rhs.cols();
  const std::size_t unknowns = x_rows * x_cols;

  Matrix system(d, total_rows, unknowns);
  Matrix target(d, total_rows, 1);
  std::size_t offset = 0;
  for (const auto& eq : equations) {
    const std::size_t p = eq.rhs.rows();
    const std::size_t q = eq.rhs.cols();
    for (const auto& term : eq.terms) {
      if (term.left.rows() != p || term.left.cols() != x_rows || term.right.rows() != x_cols ||
          term.right.cols() != q) {
        throw ShapeError("matrix equation term has incompatible shape");
      }
      // (L X R)_{rs} = sum_{ij} L_{ri} X_{ij} R_{js}
      for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t i = 0; i < x_rows; ++i) {
          const Scalar& l = term.left(r, i);
          if (l.is_zero()) continue;
          for (std::size_t j = 0; j < x_cols; ++j) {
            for (std::size_t s = 0; s < q; ++s) {
              const Scalar& rr = term.right(j, s);
              if (rr.is_zero()) continue;
              system(offset + r * q + s, i * x_cols + j) += l * rr;
            }
          }
        }
      }
    }
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t s = 0; s < q; ++s) target(offset + r * q + s, 0) = eq.rhs(r, s);
    }
    offset += p * q;
  }

  auto solution = solve_right(system, target);
  if (!solution) return std::nullopt;
  Matrix x(d, x_rows, x_cols);
  for (std::size_t i = 0; i < x_rows; ++i) {
    for (std::size_t j = 0; j < x_cols; ++j) x(i, j) = (*solution)(i * x_cols + j, 0);
  }
  return x;
}

// aR = bR
bool same_right_ideal(const Matrix& a, const Matrix& b) {
  return right_ideal_contained(a, b) && right_ideal_contained(b, a);
}

// Ra = Rb
bool same_left_ideal(const Matrix& a, const Matrix& b) {
  return left_ideal_contained(a, b) && left_ideal_contained(b, a);
}

// ^0a = ^0p
bool same_left_annihilator(const Matrix& a, const Matrix& p) {
  return left_annihilator_contained(a, p) && left_annihilator_contained(p, a);
}

// a^0 = f^0
bool same_right_annihilator(const Matrix& a, const Matrix& f) {
  return right_annihilator_contained(a, f) && right_annihilator_contained(f, a);
}

}  // namespace wcore
