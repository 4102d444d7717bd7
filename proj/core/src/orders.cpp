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

#include "wcore/orders.hpp"

#include <array>
#include <utility>

#include "wcore/geninv.hpp"

namespace wcore {

namespace {

constexpr std::array<const char*, 12> kRoman = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii"};

void require_pair(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !(a.domain() == b.domain()) || a.rows() != b.rows() || !b.is_square()) {
    throw ShapeError("order operands must be square matrices of the same size and domain");
  }
}

// Records conditions in order and remembers the first failure.
class Checklist {
 public:
  void require(const char* name, bool ok) {
    if (!ok && !failed_) failed_ = name;
  }
  bool ok() const { return !failed_.has_value(); }
  std::optional<std::string> failed() const { return failed_; }

 private:
  std::optional<std::string> failed_;
};

OrderReport finish(OrderKind kind, OrderMode mode, const Checklist& list, std::map<std::string, Matrix> witnesses) {
  OrderReport report{kind, list.ok(), mode, list.failed(), {}};
  if (report.holds) report.witnesses = std::move(witnesses);
  return report;
}

ConditionVector label(std::initializer_list<bool> values) {
  ConditionVector out;
  std::size_t k = 0;
  for (bool v : values) out.push_back({kRoman.at(k++), v});
  return out;
}

}  // namespace

std::string_view order_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::Minus: return "minus";
    case OrderKind::Plus: return "plus";
    case OrderKind::Sharp: return "sharp";
    case OrderKind::Star: return "star";
    case OrderKind::LeftStar: return "leftstar";
    case OrderKind::RightSharp: return "rightsharp";
    case OrderKind::Diamond: return "diamond";
    case OrderKind::Core: return "core";
    case OrderKind::WCore: return "wcore";
  }
  return "?";
}

std::optional<OrderKind> parse_order(std::string_view name) {
  for (OrderKind k : {OrderKind::Minus, OrderKind::Plus, OrderKind::Sharp, OrderKind::Star, OrderKind::LeftStar,
                      OrderKind::RightSharp, OrderKind::Diamond, OrderKind::Core, OrderKind::WCore}) {
    if (order_name(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<Matrix> minus_order_witness(const Matrix& a, const Matrix& b) {
  require_pair(a, b);
  const Domain& d = a.domain();
  const std::size_t n = a.rows();
  const Matrix id = Matrix::identity(d, n);
  const Matrix diff = b - a;
  const Matrix zero = Matrix::zero(d, n);
  // a g a = a, g (b - a) = 0, (b - a) g = 0: all linear in g.
  const std::array<MatrixEquation, 3> system = {
      MatrixEquation{{{a, a}}, a},
      MatrixEquation{{{id, diff}}, zero},
      MatrixEquation{{{diff, id}}, zero},
  };
  return solve_matrix_equations(system, n, n);
}

OrderReport order_holds(OrderKind kind, const Matrix& a, const Matrix& b, const std::optional<Matrix>& w,
                        OrderMode mode) {
  require_pair(a, b);
  Checklist list;
  std::map<std::string, Matrix> witnesses;
  switch (kind) {
    case OrderKind::Minus: {
      auto g = minus_order_witness(a, b);
      list.require("exists a^- with a^-a=a^-b and aa^-=ba^-", g.has_value());
      if (g) witnesses.emplace("g", *g);
      break;
    }
    case OrderKind::Plus: {
      // g a g is reflexive and inherits both equations from any minus witness g.
      auto g = minus_order_witness(a, b);
      list.require("exists a^+ with a^+a=a^+b and aa^+=ba^+", g.has_value());
      if (g) {
        Matrix x = *g * a * *g;
        if (!(a * x * a == a && x * a * x == x && x * a == x * b && a * x == b * x)) {
          throw std::logic_error("internal error: reflexive witness for plus order fails");
        }
        witnesses.emplace("g", std::move(x));
      }
      break;
    }
    case OrderKind::Sharp: {
      auto g = try_group_inverse(a);
      if (!g) throw PreconditionUnmet("sharp order: a is not group invertible");
      list.require("a^#a=a^#b", *g * a == *g * b);
      list.require("aa^#=ba^#", a * *g == b * *g);
      witnesses.emplace("a^#", *g);
      break;
    }
    case OrderKind::Star: {
      const Matrix as = a.star();
      list.require("a*a=a*b", as * a == as * b);
      list.require("aa*=ba*", a * as == b * as);
      break;
    }
    case OrderKind::LeftStar: {
      const Matrix as = a.star();
      list.require("a*a=a*b", as * a == as * b);
      auto x = solve_right(b, a);
      list.require("aR⊆bR", x.has_value());
      if (x) witnesses.emplace("X", *x);
      break;
    }
    case OrderKind::RightSharp: {
      auto g = try_group_inverse(a);
      if (!g) throw PreconditionUnmet("right sharp order: a is not group invertible");
      list.require("aa^#=ba^#", a * *g == b * *g);
      auto y = solve_left(b, a);
      list.require("Ra⊆Rb", y.has_value());
      witnesses.emplace("a^#", *g);
      if (y) witnesses.emplace("Y", *y);
      break;
    }
    case OrderKind::Diamond: {
      list.require("aa*a=ab*a", a * a.star() * a == a * b.star() * a);
      auto x = solve_right(b, a);
      list.require("aR⊆bR", x.has_value());
      auto y = solve_left(b, a);
      list.require("Ra⊆Rb", y.has_value());
      if (x) witnesses.emplace("X", *x);
      if (y) witnesses.emplace("Y", *y);
      break;
    }
    case OrderKind::Core: {
      auto c = try_core_inverse(a);
      if (!c) throw PreconditionUnmet("core order: a is not core invertible");
      list.require("a^⊕a=a^⊕b", *c * a == *c * b);
      list.require("aa^⊕=ba^⊕", a * *c == b * *c);
      witnesses.emplace("a^⊕", *c);
      witnesses.emplace("p", a * *c);
      break;
    }
    case OrderKind::WCore: {
      if (!w) throw ConfigError("w-core order requires w");
      require_pair(a, *w);
      auto x = try_w_core_inverse(a, *w);
      if (!x) throw PreconditionUnmet("w-core order: a is not w-core invertible");
      if (mode == OrderMode::Strict && !is_w_core_invertible(b, *w)) {
        throw PreconditionUnmet("w-core order (strict): b is not w-core invertible");
      }
      list.require("a_w^⊕a=a_w^⊕b", *x * a == *x * b);
      list.require("awa_w^⊕=bwa_w^⊕", a * *w * *x == b * *w * *x);
      const Matrix p = a * *w * *x;
      const Matrix e = *x * a * *w;
      const Matrix f = *w * *x * a;
      if (list.ok() && !(is_projection(p) && e * a == a && f * *w * a == *w * a && p * a == a)) {
        throw std::logic_error("internal error: w-core witnesses fail their defining properties");
      }
      witnesses.emplace("a_w^⊕", *x);
      witnesses.emplace("p", p);
      witnesses.emplace("e", e);
      witnesses.emplace("f", f);
      break;
    }
  }
  return finish(kind, mode, list, std::move(witnesses));
}

bool order_holds_bool(OrderKind kind, const Matrix& a, const Matrix& b, const std::optional<Matrix>& w,
                      OrderMode mode) {
  return order_holds(kind, a, b, w, mode).holds;
}

bool all_agree(const ConditionVector& conditions) {
  for (const auto& c : conditions) {
    if (c.value != conditions.front().value) return false;
  }
  return true;
}

ConditionVector w_core_characterizations(const Matrix& a, const Matrix& b, const Matrix& w) {
  require_pair(a, b);
  require_pair(a, w);
  auto xa = try_w_core_inverse(a, w);
  if (!xa) throw PreconditionUnmet("w-core characterizations require a ∈ R_w^⊕");
  const Matrix& x = *xa;
  const Matrix along = inverse_along(w, a);  // w^{∥a}
  const Matrix t = one_three_inverse(a);
  const Matrix g = group_inverse(w * a);  // (wa)^#
  const Matrix as = a.star();
  const Matrix aw = a * w;
  const Matrix wa = w * a;

  const Matrix p = aw * x;
  const Matrix e = x * aw;
  const Matrix f = w * x * a;
  const bool p_proj = is_projection(p);

  const bool star_eq = as * a == as * b;
  const bool pa_pb = p * a == p * b;
  const bool range_p = p_proj && same_right_ideal(a, p);
  const bool annih_p = p_proj && same_left_annihilator(a, p);
  const bool ea_a = e * a == a;
  const bool awe_bwe = aw * e == b * w * e;
  const bool fwa_wa = f * wa == wa;
  const bool af_bf = a * f == b * f;

  return label({
      order_holds_bool(OrderKind::WCore, a, b, w, OrderMode::Relaxed),
      along == along * t * b && a == b * w * along,
      star_eq && b * wa == a * wa,
      star_eq && b * g == a * g,
      a == aw * x * b && a == b * w * x * a,
      range_p && pa_pb && same_left_ideal(e, aw) && ea_a && awe_bwe,
      annih_p && pa_pb && same_right_annihilator(e, aw) && ea_a && awe_bwe,
      range_p && pa_pb && same_left_ideal(a, f) && af_bf && fwa_wa,
      annih_p && pa_pb && same_right_annihilator(a, f) && af_bf && fwa_wa,
      annih_p && pa_pb && right_annihilator_contained(a, f) && af_bf && fwa_wa,
      p_proj && p * b == a && e * a == a && b * w * e == aw,
      p_proj && p * b == a && e * a == a && b * w * e == aw * e,
  });
}

ConditionVector core_characterizations(const Matrix& a, const Matrix& b) {
  require_pair(a, b);
  auto core = try_core_inverse(a);
  if (!core) throw PreconditionUnmet("core characterizations require a ∈ R^⊕");
  const Matrix& c = *core;
  const Matrix g = group_inverse(a);
  const Matrix t = one_three_inverse(a);
  const Matrix as = a.star();

  const Matrix p = a * c;
  const Matrix e = c * a;
  const Matrix& f = e;
  const bool p_proj = is_projection(p);

  const bool star_eq = as * a == as * b;
  const bool pa_pb = p * a == p * b;
  const bool range_p = p_proj && same_right_ideal(a, p);
  const bool annih_p = p_proj && same_left_annihilator(a, p);
  const bool ea_a = e * a == a;
  const bool ae_be = a * e == b * e;
  const bool fa_a = f * a == a;
  const bool af_bf = a * f == b * f;

  return label({
      order_holds_bool(OrderKind::Core, a, b),
      a == a * t * b && a == b * g * a,
      star_eq && b * a == a * a,
      star_eq && b * g == a * g,
      a == a * c * b && a == b * c * a,
      range_p && pa_pb && same_left_ideal(e, a) && ea_a && ae_be,
      annih_p && pa_pb && same_right_annihilator(e, a) && ea_a && ae_be,
      range_p && pa_pb && same_left_ideal(a, f) && af_bf && fa_a,
      annih_p && pa_pb && same_right_annihilator(a, f) && af_bf && fa_a,
      annih_p && pa_pb && right_annihilator_contained(a, f) && af_bf && fa_a,
      p_proj && p * b == a && ea_a && b * e == a,
      p_proj && p * b == a && ea_a && b * e == a * e,
  });
}

ConditionVector projection_characterization(const Matrix& a, const Matrix& w, const Matrix& p) {
  require_pair(a, p);
  auto x = try_w_core_inverse(a, w);
  if (!x) throw PreconditionUnmet("projection characterization requires a ∈ R_w^⊕");
  const bool proj = is_projection(p);
  return label({
      p == a * w * *x,
      proj && same_right_ideal(a, p),
      proj && same_left_annihilator(a, p),
      proj && a == p * a && left_annihilator_contained(a, p),
  });
}

ConditionVector idempotent_characterizations(const Matrix& a, const Matrix& w, const Matrix& candidate,
                                             IdempotentSide side) {
  require_pair(a, candidate);
  auto x = try_w_core_inverse(a, w);
  if (!x) throw PreconditionUnmet("idempotent characterizations require a ∈ R_w^⊕");
  const Matrix aw = a * w;
  if (side == IdempotentSide::E) {
    const Matrix& e = candidate;
    const bool ea_a = e * a == a;
    return label({
        e == *x * aw,
        same_left_ideal(e, aw) && ea_a,
        same_right_annihilator(e, aw) && ea_a,
        right_annihilator_contained(aw, e) && ea_a,
    });
  }
  const Matrix& f = candidate;
  const Matrix wa = w * a;
  const bool fwa_wa = f * wa == wa;
  return label({
      f == w * *x * a,
      same_left_ideal(a, f) && fwa_wa,
      same_right_annihilator(a, f) && fwa_wa,
      right_annihilator_contained(a, f) && fwa_wa,
  });
}

}  // namespace wcore
