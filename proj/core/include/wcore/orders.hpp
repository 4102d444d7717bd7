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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wcore/errors.hpp"
#include "wcore/matrix.hpp"

namespace wcore {

enum class OrderKind { Minus, Plus, Sharp, Star, LeftStar, RightSharp, Diamond, Core, WCore };

std::string_view order_name(OrderKind kind);
/// minus, plus, sharp, star, leftstar, rightsharp, diamond, core, wcore.
std::optional<OrderKind> parse_order(std::string_view name);

/// Strict: a, b ∈ R_w^⊕ as the definition requires. Relaxed: only a ∈ R_w^⊕,
/// the hypothesis of the characterization theorems.
enum class OrderMode { Strict, Relaxed };

/// The order is undefined for these operands (e.g. a lacks a core inverse).
class PreconditionUnmet : public Error {
 public:
  using Error::Error;
};

struct OrderReport {
  OrderKind kind;
  bool holds = false;
  OrderMode mode = OrderMode::Strict;
  std::optional<std::string> failed_condition;
  /// p, e, f projections/idempotents, inverses used, and solve certificates
  /// (X with a = bX, Y with a = Yb).
  std::map<std::string, Matrix> witnesses;
};

/// Decides a ≤ b for the given order. `w` is required for WCore and ignored
/// otherwise. Throws PreconditionUnmet when the order is undefined for a (or
/// for b in strict WCore mode).
OrderReport order_holds(OrderKind kind, const Matrix& a, const Matrix& b, const std::optional<Matrix>& w = std::nullopt,
                        OrderMode mode = OrderMode::Strict);

/// Convenience wrapper returning only the verdict.
bool order_holds_bool(OrderKind kind, const Matrix& a, const Matrix& b, const std::optional<Matrix>& w = std::nullopt,
                      OrderMode mode = OrderMode::Strict);

struct Condition {
  std::string id;  // roman numeral of the characterization
  bool value;
};
using ConditionVector = std::vector<Condition>;

/// True when every entry carries the same value.
bool all_agree(const ConditionVector& conditions);

/// Twelve equivalent characterizations of a ≤_w b under a ∈ R_w^⊕.
/// Existential clauses are evaluated on the canonical witnesses
/// p = a w a_w^⊕, e = a_w^⊕ a w, f = w a_w^⊕ a.
ConditionVector w_core_characterizations(const Matrix& a, const Matrix& b, const Matrix& w);

/// The w = 1 specialisation: twelve characterizations of the core order
/// under a ∈ R^⊕.
ConditionVector core_characterizations(const Matrix& a, const Matrix& b);

/// Four characterizations of the projection a w a_w^⊕ for a candidate p.
ConditionVector projection_characterization(const Matrix& a, const Matrix& w, const Matrix& p);

enum class IdempotentSide { E, F };

/// Four characterizations of e = a_w^⊕ a w (side E) or f = w a_w^⊕ a (side F)
/// for a candidate.
ConditionVector idempotent_characterizations(const Matrix& a, const Matrix& w, const Matrix& candidate,
                                             IdempotentSide side);

/// Witness an inner inverse g of a with g a = g b and a g = b g, if any.
std::optional<Matrix> minus_order_witness(const Matrix& a, const Matrix& b);

}  // namespace wcore
