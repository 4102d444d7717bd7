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

#include <string>

#include "wcore/harness.hpp"

namespace wcore {

namespace {

const Domain kQi = Domain::gaussian_rationals();

Matrix m2(long a, long b, long c, long d) { return Matrix::from_ints(kQi, {{a, b}, {c, d}}); }

Matrix half(long a, long b, long c, long d) {
  return Scalar::from_rational(kQi, mpq_class(1, 2)) * m2(a, b, c, d);
}

Matrix quarter(long a, long b, long c, long d) {
  return Scalar::from_rational(kQi, mpq_class(1, 4)) * m2(a, b, c, d);
}

class Replay {
 public:
  explicit Replay(std::vector<ReferenceCheck>& out) : out_(out) {}

  void example(std::string name) { name_ = std::move(name); }

  void equal(std::string what, const Matrix& expected, const std::optional<Matrix>& actual) {
    const std::string got = actual ? actual->str() : "<none>";
    out_.push_back({name_, std::move(what), expected.str(), got, actual && *actual == expected});
  }

  void differ(std::string what, const Matrix& lhs, const Matrix& rhs) {
    out_.push_back({name_, std::move(what), "≠ " + rhs.str(), lhs.str(), !(lhs == rhs)});
  }

  void truth(std::string what, bool expected, bool actual) {
    auto s = [](bool v) { return std::string(v ? "true" : "false"); };
    out_.push_back({name_, std::move(what), s(expected), s(actual), expected == actual});
  }

  void text(std::string what, const std::string& expected, const std::string& actual) {
    out_.push_back({name_, std::move(what), expected, actual, expected == actual});
  }

 private:
  std::vector<ReferenceCheck>& out_;
  std::string name_;
};

std::optional<Matrix> wcore_of(const Matrix& a, const Matrix& w) { return try_w_core_inverse(a, w); }

}  // namespace

Instance reference_wcore_not_core() {
  return Instance{m2(1, 1, 0, 0), m2(1, 1, 2, -2), Matrix::zero(kQi, 2), m2(1, 0, 1, 0)};
}

Instance reference_converse_fails() {
  return Instance{m2(1, 1, 0, 0), m2(1, 1, 2, 0), Matrix::zero(kQi, 2), m2(1, 0, 0, 0)};
}

Instance reference_reverse_order() {
  return Instance{m2(1, 1, 0, 0), m2(1, 1, 0, 0), Matrix::zero(kQi, 2), m2(1, 0, 1, 0)};
}

std::vector<ReferenceCheck> replay_reference_examples() {
  std::vector<ReferenceCheck> out;
  Replay r(out);

  {
    r.example("wcore_below_not_core");
    const auto [a, b, c, w] = reference_wcore_not_core();
    const auto x = wcore_of(a, w);
    const auto core = try_core_inverse(a);
    r.equal("a_w^⊕", half(1, 0, 0, 0), x);
    r.equal("a^⊕", m2(1, 0, 0, 0), core);
    if (x) {
      r.equal("a_w^⊕a", half(1, 1, 0, 0), *x * a);
      r.equal("a_w^⊕b", half(1, 1, 0, 0), *x * b);
      r.equal("awa_w^⊕", m2(1, 0, 0, 0), a * w * *x);
      r.equal("bwa_w^⊕", m2(1, 0, 0, 0), b * w * *x);
    }
    if (core) {
      r.equal("aa^⊕", m2(1, 0, 0, 0), a * *core);
      r.equal("ba^⊕", m2(1, 0, 2, 0), b * *core);
    }
    r.truth("a ⊕≤_w b (defining equations)", true, order_holds_bool(OrderKind::WCore, a, b, w, OrderMode::Relaxed));
    r.truth("b ∈ R_w^⊕", false, is_w_core_invertible(b, w));
    const OrderReport co = order_holds(OrderKind::Core, a, b);
    r.truth("a ⊕≤ b", false, co.holds);
    r.text("core order failed condition", "aa^⊕=ba^⊕", co.failed_condition.value_or(""));
  }

  {
    r.example("converse_fails");
    const auto [a, b, c, w] = reference_converse_fails();
    const Matrix wa = w * a;
    const Matrix wb = w * b;
    const auto x = wcore_of(a, w);
    r.equal("a_w^⊕", m2(1, 0, 0, 0), x);
    r.equal("a*a", m2(1, 1, 1, 1), a.star() * a);
    r.equal("a*b", m2(1, 1, 1, 1), a.star() * b);
    r.truth("aR ⊆ bR", true, right_ideal_contained(a, b));
    r.truth("a *≤ b", true, order_holds_bool(OrderKind::LeftStar, a, b));
    r.equal("wa", m2(1, 1, 0, 0), wa);
    r.equal("wb", m2(1, 1, 0, 0), wb);
    r.equal("(wa)^#", m2(1, 1, 0, 0), try_group_inverse(wa));
    r.equal("(wb)^#", m2(1, 1, 0, 0), try_group_inverse(wb));
    r.truth("wa ≤_# wb", true, order_holds_bool(OrderKind::RightSharp, wa, wb));
    if (x) {
      r.equal("awa_w^⊕", m2(1, 0, 0, 0), a * w * *x);
      r.equal("bwa_w^⊕", m2(1, 0, 2, 0), b * w * *x);
    }
    const OrderReport wo = order_holds(OrderKind::WCore, a, b, w, OrderMode::Relaxed);
    r.truth("a ⊕≤_w b", false, wo.holds);
    r.text("w-core order failed condition", "awa_w^⊕=bwa_w^⊕", wo.failed_condition.value_or(""));
  }

  {
    r.example("reverse_order_counterexample");
    const auto [a, b, c, w] = reference_reverse_order();
    const auto xa = wcore_of(a, w);
    const auto xb = wcore_of(b, w);
    const auto xab = wcore_of(a * b, w);
    r.equal("(ab)_w^⊕", half(1, 0, 0, 0), xab);
    r.equal("a_w^⊕", half(1, 0, 0, 0), xa);
    r.equal("b_w^⊕", half(1, 0, 0, 0), xb);
    r.truth("a ⊕≤_w b", true, order_holds_bool(OrderKind::WCore, a, b, w, OrderMode::Strict));
    if (xa && xb && xab) {
      r.equal("a_w^⊕a", half(1, 1, 0, 0), *xa * a);
      r.equal("awa_w^⊕", m2(1, 0, 0, 0), a * w * *xa);
      r.equal("b_w^⊕a_w^⊕", quarter(1, 0, 0, 0), *xb * *xa);
      r.differ("(ab)_w^⊕ vs b_w^⊕a_w^⊕", *xab, *xb * *xa);
      r.equal("(awb)_w^⊕", quarter(1, 0, 0, 0), wcore_of(a * w * b, w));
    }
  }
  return out;
}

}  // namespace wcore
