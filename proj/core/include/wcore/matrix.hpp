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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wcore/scalar.hpp"

namespace wcore {

/// Dense row-major matrix over a Domain. Square matrices are the elements of
/// the *-ring M_n(domain); rectangular (and empty) shapes exist for rank
/// factorizations and linear systems.
class Matrix {
 public:
  Matrix(Domain domain, std::size_t rows, std::size_t cols);  // zero matrix

  static Matrix zero(Domain domain, std::size_t rows, std::size_t cols) { return {domain, rows, cols}; }
  static Matrix zero(Domain domain, std::size_t n) { return {domain, n, n}; }
  static Matrix identity(Domain domain, std::size_t n);
  /// Integer literal rows; all rows must have equal length.
  static Matrix from_ints(Domain domain, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(Domain domain, const std::vector<std::vector<Scalar>>& rows);

  const Domain& domain() const { return domain_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  std::span<const Scalar> entries() const { return entries_; }

  bool is_zero() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const Scalar& s, Matrix m);
  Matrix operator-() const;

  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

  Matrix transpose() const;
  /// Conjugate transpose under the domain involution.
  Matrix star() const;

  Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  /// Nested-list rendering, e.g. [[1/2,0],[0,0]].
  std::string str() const;

 private:
  void require_same_shape(const Matrix& other) const;

  Domain domain_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

inline Matrix star(const Matrix& a) { return a.star(); }

/// Concatenation [lhs | rhs] and [top ; bottom].
Matrix hstack(const Matrix& lhs, const Matrix& rhs);
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Which row becomes the pivot when several candidates are nonzero. The
/// reduced form is unique; the recorded transform is not when rank < rows.
enum class PivotStrategy { FirstNonzero, LastNonzero };

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank;
  /// Invertible T with T * A = reduced.
  Matrix transform;
};

RrefResult rref(const Matrix& a, PivotStrategy strategy = PivotStrategy::FirstNonzero);

std::size_t rank(const Matrix& a);

/// X with b * X = a, or nullopt when col(a) is not inside col(b). Free
/// variables are set to zero.
std::optional<Matrix> solve_right(const Matrix& b, const Matrix& a);

/// Y with Y * b = a, or nullopt when row(a) is not inside row(b).
std::optional<Matrix> solve_left(const Matrix& b, const Matrix& a);

/// aR ⊆ bR.
bool right_ideal_contained(const Matrix& a, const Matrix& b);
/// Ra ⊆ Rb.
bool left_ideal_contained(const Matrix& a, const Matrix& b);

/// a^0 ⊆ f^0, i.e. {x : ax = 0} ⊆ {x : fx = 0}. Decided as f ∈ Ra.
bool right_annihilator_contained(const Matrix& a, const Matrix& f);
/// ^0a ⊆ ^0p, i.e. {x : xa = 0} ⊆ {x : xp = 0}. Decided as p ∈ aR.
bool left_annihilator_contained(const Matrix& a, const Matrix& p);

bool same_right_ideal(const Matrix& a, const Matrix& b);       // aR = bR
bool same_left_ideal(const Matrix& a, const Matrix& b);        // Ra = Rb
bool same_left_annihilator(const Matrix& a, const Matrix& p);  // ^0a = ^0p
bool same_right_annihilator(const Matrix& a, const Matrix& f); // a^0 = f^0

struct RankFactorization {
  Matrix left;   // n x r, full column rank
  Matrix right;  // r x m, full row rank
  std::size_t rank;
};

/// A = left * right with left = pivot columns of A and right = nonzero rows of
/// rref(A). For A = 0 both factors are empty.
RankFactorization rank_factorization(const Matrix& a);

/// Membership in U(R).
bool is_unit(const Matrix& a);
/// Two-sided inverse; throws NotInvertible for singular input.
Matrix inverse(const Matrix& a);

bool is_idempotent(const Matrix& e);
/// p = p^2 = p*.
bool is_projection(const Matrix& p);

/// One equation sum_k left_k * X * right_k = rhs in an unknown X.
struct MatrixEquation {
  struct Term {
    Matrix left;
    Matrix right;
  };
  std::vector<Term> terms;
  Matrix rhs;
};

/// Solves a stacked system of linear matrix equations for X (x_rows by
/// x_cols) by vectorising the unknown. Returns the canonical (free
/// variables zero) solution or nullopt if inconsistent.
std::optional<Matrix> solve_matrix_equations(std::span<const MatrixEquation> equations, std::size_t x_rows,
                                             std::size_t x_cols);

}  // namespace wcore
