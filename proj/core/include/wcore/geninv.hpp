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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wcore/errors.hpp"
#include "wcore/matrix.hpp"

namespace wcore {

enum class InverseKind { Inner, Reflexive, Group, OneThree, OneFour, MoorePenrose, Along, Core, WCore };

/// Kind of generalized inverse. `aux` carries d for Along (inverse of a along
/// d) and w for WCore.
struct GenInvKind {
  InverseKind kind;
  std::optional<Matrix> aux;

  static GenInvKind inner() { return {InverseKind::Inner, std::nullopt}; }
  static GenInvKind reflexive() { return {InverseKind::Reflexive, std::nullopt}; }
  static GenInvKind group() { return {InverseKind::Group, std::nullopt}; }
  static GenInvKind one_three() { return {InverseKind::OneThree, std::nullopt}; }
  static GenInvKind one_four() { return {InverseKind::OneFour, std::nullopt}; }
  static GenInvKind moore_penrose() { return {InverseKind::MoorePenrose, std::nullopt}; }
  static GenInvKind along(Matrix d) { return {InverseKind::Along, std::move(d)}; }
  static GenInvKind core() { return {InverseKind::Core, std::nullopt}; }
  static GenInvKind w_core(Matrix w) { return {InverseKind::WCore, std::move(w)}; }

  /// Inverses that are unique whenever they exist.
  bool is_unique() const;
};

/// CLI spelling: inner, reflexive, group, one3, one4, mp, along, core, wcore.
std::string_view kind_name(InverseKind kind);
std::optional<InverseKind> parse_kind(std::string_view name);

/// Which existence condition failed.
enum class Failure {
  NotGroupInvertible,
  NotOneThreeInvertible,
  NotOneFourInvertible,
  NotMoorePenroseInvertible,
  NotInvertibleAlong,
  NotCoreInvertible,
  // w-core legs
  WNotInvertibleAlongA,
  NotOneThree,
  // w_core_via_product legs
  RangeMismatch,
  ProductNotCoreInvertible,
};

std::string_view failure_name(Failure failure);

class NotGenInvertible : public Error {
 public:
  NotGenInvertible(InverseKind kind, Failure failure);
  InverseKind kind() const { return kind_; }
  Failure failure() const { return failure_; }
  /// "NotWCoreInvertible", "NotGroupInvertible", ...
  std::string_view tag() const;

 private:
  InverseKind kind_;
  Failure failure_;
};

struct CertificateEntry {
  std::string equation;
  bool holds;
};
using Certificate = std::vector<CertificateEntry>;

struct GenInvResult {
  GenInvKind kind;
  Matrix value;
  Certificate certificate;
};

/// Evaluates the defining equations of `kind` for the candidate x.
Certificate certify(const GenInvKind& kind, const Matrix& a, const Matrix& x);
bool all_hold(const Certificate& certificate);

// Constructors. Each verifies its defining equations before returning and
// throws NotGenInvertible when the inverse does not exist. The strategy
// argument selects among the non-unique inner inverses used internally.

Matrix inner_inverse(const Matrix& a, PivotStrategy strategy = PivotStrategy::FirstNonzero);
Matrix reflexive_inverse(const Matrix& a, PivotStrategy strategy = PivotStrategy::FirstNonzero);
Matrix group_inverse(const Matrix& a);
Matrix one_three_inverse(const Matrix& a, PivotStrategy strategy = PivotStrategy::FirstNonzero);
Matrix one_four_inverse(const Matrix& a, PivotStrategy strategy = PivotStrategy::FirstNonzero);
Matrix moore_penrose(const Matrix& a, PivotStrategy strategy = PivotStrategy::FirstNonzero);
/// x^{∥d}: the b with b x d = d = d x b and b ∈ dR ∩ Rd.
Matrix inverse_along(const Matrix& x, const Matrix& d);
Matrix core_inverse(const Matrix& a, PivotStrategy strategy = PivotStrategy::FirstNonzero);
/// a_w^⊕ = w^{∥a} a^{(1,3)}.
Matrix w_core_inverse(const Matrix& a, const Matrix& w, PivotStrategy strategy = PivotStrategy::FirstNonzero);
/// a_w^⊕ computed as (aw)^⊕ after checking aR = awR.
Matrix w_core_via_product(const Matrix& a, const Matrix& w);

// Non-throwing variants.
std::optional<Matrix> try_group_inverse(const Matrix& a);
std::optional<Matrix> try_one_three_inverse(const Matrix& a, PivotStrategy strategy = PivotStrategy::FirstNonzero);
std::optional<Matrix> try_one_four_inverse(const Matrix& a, PivotStrategy strategy = PivotStrategy::FirstNonzero);
std::optional<Matrix> try_moore_penrose(const Matrix& a, PivotStrategy strategy = PivotStrategy::FirstNonzero);
std::optional<Matrix> try_inverse_along(const Matrix& x, const Matrix& d);
std::optional<Matrix> try_core_inverse(const Matrix& a);
std::optional<Matrix> try_w_core_inverse(const Matrix& a, const Matrix& w);

bool is_group_invertible(const Matrix& a);
bool is_one_three_invertible(const Matrix& a);
bool is_one_four_invertible(const Matrix& a);
bool is_w_core_invertible(const Matrix& a, const Matrix& w);

/// a ∈ R^† and a a^† = a^† a.
bool is_ep(const Matrix& a);

/// Dispatches on kind and attaches the certificate.
GenInvResult compute(const GenInvKind& kind, const Matrix& a, PivotStrategy strategy = PivotStrategy::FirstNonzero);

}  // namespace wcore
