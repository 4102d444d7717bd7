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

#include <array>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "harness_internal.hpp"
#include "wcore/harness.hpp"

namespace wcore {

namespace {

struct Entry {
  PropertyId id;
  const char* name;
  Signature sig;
  const char* statement;
};

constexpr Signature kA{false, false, false, false};
constexpr Signature kAW{false, false, true, false};
constexpr Signature kAB{true, false, false, false};
constexpr Signature kABW{true, false, true, false};
constexpr Signature kABWUnit{true, false, true, true};
constexpr Signature kABCW{true, true, true, false};

// clang-format off
constexpr std::array<Entry, 32> kCatalog = {{
    {PropertyId::DEF_WCORE_RELATION, "DEF_WCORE_RELATION", kABW,
     "a ⊕≤_w b iff a_w^⊕a = a_w^⊕b and awa_w^⊕ = bwa_w^⊕ (a, b ∈ R_w^⊕)"},
    {PropertyId::LEM_WCORE_PAR_I, "LEM_WCORE_PAR_I", kABW, "a ⊕≤_w b ⇒ a_w^⊕a = b_w^⊕a"},
    {PropertyId::LEM_WCORE_PAR_II, "LEM_WCORE_PAR_II", kABW, "a ⊕≤_w b ⇒ awa_w^⊕ = awb_w^⊕"},
    {PropertyId::LEM_WCORE_PAR_III, "LEM_WCORE_PAR_III", kABW, "a ⊕≤_w b ⇒ awb_w^⊕a = a"},
    {PropertyId::LEM_WCORE_PAR_IV, "LEM_WCORE_PAR_IV", kABW, "a ⊕≤_w b ⇒ b_w^⊕a_w^⊕ = (a_w^⊕)^2"},
    {PropertyId::THM_PARTIAL_ORDER_AXIOMS, "THM_PARTIAL_ORDER_AXIOMS", kABCW,
     "⊕≤_w is reflexive, antisymmetric and transitive on R_w^⊕, with 0 as least element"},
    {PropertyId::PROP_SYMMETRIC_CHAR, "PROP_SYMMETRIC_CHAR", kABW,
     "a ⊕≤_w b ⇔ a_w^⊕b = b_w^⊕a, bwa_w^⊕ = awb_w^⊕, awb_w^⊕a = a"},
    {PropertyId::PROP_MIXED_PRODUCTS, "PROP_MIXED_PRODUCTS", kABW,
     "a ⊕≤_w b ⇒ a_w^⊕bwb_w^⊕ = b_w^⊕bwa_w^⊕ = a_w^⊕bwa_w^⊕ = a_w^⊕ and a_w^⊕awb_w^⊕ = b_w^⊕awa_w^⊕ = b_w^⊕awb_w^⊕ = a_w^⊕"},
    {PropertyId::LEM_PROJECTION, "LEM_PROJECTION", kABW,
     "for a projection p: p = awa_w^⊕ ⇔ aR = pR ⇔ ⁰a = ⁰p ⇔ (a = pa, ⁰a ⊆ ⁰p)"},
    {PropertyId::THM_PROJECTION_6WAY, "THM_PROJECTION_6WAY", kABW,
     "a_w^⊕a = a_w^⊕b ⇔ w^∥a = w^∥a a^(1,3) b ⇔ a*a = a*b ⇔ a = awa_w^⊕b ⇔ ∃ projections p with pa = pb"},
    {PropertyId::LEM_IDEMPOTENT_E, "LEM_IDEMPOTENT_E", kABW,
     "e = a_w^⊕aw ⇔ (Re = Raw, ea = a) ⇔ (e⁰ = (aw)⁰, ea = a) ⇔ ((aw)⁰ ⊆ e⁰, ea = a)"},
    {PropertyId::LEM_IDEMPOTENT_F, "LEM_IDEMPOTENT_F", kABW,
     "f = wa_w^⊕a ⇔ (Ra = Rf, fwa = wa) ⇔ (a⁰ = f⁰, fwa = wa) ⇔ (a⁰ ⊆ f⁰, fwa = wa)"},
    {PropertyId::LEM_MARY_CRITERION, "LEM_MARY_CRITERION", kAW,
     "w ∈ R^∥a ⇔ (a ∈ awR, aw ∈ R^#) ⇔ (a ∈ Rwa, wa ∈ R^#); then w^∥a = a(wa)^# = (aw)^#a"},
    {PropertyId::THM_IDEMPOTENT_11WAY, "THM_IDEMPOTENT_11WAY", kABW,
     "awa_w^⊕ = bwa_w^⊕ ⇔ a = bww^∥a ⇔ awa = bwa ⇔ a(wa)^# = b(wa)^# ⇔ a = bwa_w^⊕a ⇔ idempotent witnesses e, f"},
    {PropertyId::THM_WCORE_12WAY, "THM_WCORE_12WAY", kABW, "twelve equivalent characterizations of a ⊕≤_w b"},
    {PropertyId::COR_CORE_12WAY, "COR_CORE_12WAY", kAB, "twelve equivalent characterizations of a ⊕≤ b"},
    {PropertyId::PROP_IMPLIES_LEFTSTAR_RIGHTSHARP, "PROP_IMPLIES_LEFTSTAR_RIGHTSHARP", kABW,
     "a ⊕≤_w b ⇒ a *≤ b and wa ≤_# wb"},
    {PropertyId::EX2_CONVERSE_FAILS, "EX2_CONVERSE_FAILS", kABW,
     "a *≤ b and wa ≤_# wb need not give a ⊕≤_w b"},
    {PropertyId::THM_UNIT_EQUIVALENCE, "THM_UNIT_EQUIVALENCE", kABWUnit,
     "w a unit: a ⊕≤_w b ⇔ a *≤ b and wa ≤_# wb"},
    {PropertyId::THM_LEFTSTAR_4WAY, "THM_LEFTSTAR_4WAY", kABW,
     "a ⊕≤_w b ⇔ a *≤ b with a = bwa_w^⊕b ⇔ … with a_w^⊕ = b_w^⊕awa_w^⊕ ⇔ … with a_w^⊕ = b_w^⊕awb_w^⊕"},
    {PropertyId::THM_RIGHTSHARP_3WAY, "THM_RIGHTSHARP_3WAY", kABWUnit,
     "w a unit: a ⊕≤_w b ⇔ wa ≤_# wb with a = bwa_w^⊕b ⇔ wa ≤_# wb with a_w^⊕ = a_w^⊕awb_w^⊕"},
    {PropertyId::LEM_AW_PRODUCT, "LEM_AW_PRODUCT", kAW,
     "a ∈ R_w^⊕ ⇔ aR = awR and aw ∈ R^⊕; then a_w^⊕ = (aw)^⊕"},
    {PropertyId::THM_WCORE_IFF_AW_CORE, "THM_WCORE_IFF_AW_CORE", kABWUnit,
     "w a unit: a ⊕≤_w b ⇔ aw ⊕≤ bw ⇔ a *≤ b and wa ≤_# wb"},
    {PropertyId::THM_THREECLASS_CORE, "THM_THREECLASS_CORE", kAB,
     "a ∈ R^⊕ ⇔ a ∈ R_a^⊕ ⇔ a ∈ R_1^⊕; then a ⊕≤ b ⇔ a ⊕≤_a b ⇔ a ⊕≤_1 b"},
    {PropertyId::THM_THREECLASS_STAR, "THM_THREECLASS_STAR", kAB,
     "a ∈ R^† ⇔ a ∈ R_{a*}^⊕; then a *≤ b ⇔ a ⊕≤_{a*} b, with a_{a*}^⊕ = (a^†)*a^†"},
    {PropertyId::THM_EP_5WAY, "THM_EP_5WAY", kAB,
     "a EP: a ⊕≤_a b ⇔ a ⊕≤_{a*} b ⇔ a ⊕≤ b ⇔ a *≤ b ⇔ a ≤_# b"},
    {PropertyId::PROP_IMPLIES_DIAMOND, "PROP_IMPLIES_DIAMOND", kABW, "a ⊕≤_w b ⇒ a ⋄≤ b"},
    {PropertyId::THM_DIFFERENCE_3WAY, "THM_DIFFERENCE_3WAY", kABW,
     "awb = bwa, a, b, a-b ∈ R_w^⊕: a ⊕≤_w b ⇔ b-a ⊕≤_w b ⇔ a *≤ b and wa ≤_# wb"},
    {PropertyId::COR_DIFFERENCE_CORE, "COR_DIFFERENCE_CORE", kAB,
     "a, b, a-b ∈ R^⊕: a ⊕≤ b with ab = ba ⇔ b-a ⊕≤ b with ab = ba ⇔ a *≤ b and a ≤_# b"},
    {PropertyId::COR_DIFFERENCE_ACORE, "COR_DIFFERENCE_ACORE", kAB,
     "a²b = ba², a, b, a-b ∈ R^⊕: a ⊕≤ b ⇔ b-a ⊕≤ b ⇔ a *≤ b and a² ≤_# ab"},
    {PropertyId::THM_REVERSE_ORDER, "THM_REVERSE_ORDER", kABW,
     "a ⊕≤_w b ⇒ awb ∈ R_w^⊕ and (awb)_w^⊕ = b_w^⊕a_w^⊕"},
    {PropertyId::EX_REVERSE_COUNTEREXAMPLE, "EX_REVERSE_COUNTEREXAMPLE", kABW,
     "a ⊕≤_w b does not give (ab)_w^⊕ = b_w^⊕a_w^⊕"},
}};
// clang-format on

constexpr std::array<PropertyId, kCatalog.size()> kIds = [] {
  std::array<PropertyId, kCatalog.size()> ids{};
  for (std::size_t i = 0; i < kCatalog.size(); ++i) ids[i] = kCatalog[i].id;
  return ids;
}();

const Entry& entry(PropertyId id) {
  for (const auto& e : kCatalog) {
    if (e.id == id) return e;
  }
  throw std::logic_error("property id missing from catalog");
}

// Checker result before the id and instance are attached.
struct Result {
  Verdict verdict;
  std::string detail;
};

Result holds() { return {Verdict::Holds, {}}; }
Result skip(std::string why) { return {Verdict::Inapplicable, std::move(why)}; }
Result fail(std::string why) { return {Verdict::Fails, std::move(why)}; }

std::string render(const ConditionVector& v) {
  std::string out;
  for (const auto& c : v) {
    if (!out.empty()) out += ' ';
    out += c.id + "=" + (c.value ? "1" : "0");
  }
  return out;
}

// Appends clauses; the first false one becomes the failure detail.
class Clauses {
 public:
  Clauses& check(const std::string& name, bool ok) {
    if (!ok && !failed_) failed_ = name;
    return *this;
  }
  Clauses& agree(const std::string& name, const ConditionVector& v) {
    if (!all_agree(v)) check(name + " conditions disagree: " + render(v), false);
    return *this;
  }
  Result result() const { return failed_ ? fail(*failed_) : holds(); }

 private:
  std::optional<std::string> failed_;
};

ConditionVector label(const std::vector<std::pair<std::string, bool>>& values) {
  ConditionVector out;
  for (const auto& [id, v] : values) out.push_back({id, v});
  return out;
}

bool wcore_rel(const Matrix& a, const Matrix& b, const Matrix& w, const Matrix& xa) {
  return xa * a == xa * b && a * w * xa == b * w * xa;
}

bool relaxed(const Matrix& a, const Matrix& b, const Matrix& w) {
  return order_holds_bool(OrderKind::WCore, a, b, w, OrderMode::Relaxed);
}

bool left_star(const Matrix& a, const Matrix& b) { return order_holds_bool(OrderKind::LeftStar, a, b); }
bool right_sharp(const Matrix& a, const Matrix& b) { return order_holds_bool(OrderKind::RightSharp, a, b); }
bool sharp(const Matrix& a, const Matrix& b) { return order_holds_bool(OrderKind::Sharp, a, b); }
bool core_order(const Matrix& a, const Matrix& b) { return order_holds_bool(OrderKind::Core, a, b); }

// Existential clauses decided by exhausting a tiny ring, as an independent
// check of the canonical-witness route.
struct Existentials {
  bool p_range = false;   // projection p: aR = pR, pa = pb
  bool p_annih = false;   // projection p: ⁰p = ⁰a, pa = pb
  bool p_pb_a = false;    // projection p: pb = a
  bool e_range = false;   // Re = Raw, ea = a, awe = bwe
  bool e_annih = false;   // e⁰ = (aw)⁰, ea = a, awe = bwe
  bool e_incl = false;    // (aw)⁰ ⊆ e⁰, ea = a, awe = bwe
  bool e_xi = false;      // ea = a, bwe = aw
  bool e_xii = false;     // ea = a, bwe = awe
  bool f_range = false;   // Ra = Rf, af = bf, fwa = wa
  bool f_annih = false;   // a⁰ = f⁰, af = bf, fwa = wa
  bool f_incl = false;    // a⁰ ⊆ f⁰, af = bf, fwa = wa
};

Existentials search_existentials(const std::vector<Matrix>& ring, const Matrix& a, const Matrix& b,
                                 const Matrix& w) {
  Existentials ex;
  const Matrix aw = a * w;
  const Matrix wa = w * a;
  const Matrix bw = b * w;
  for (const Matrix& z : ring) {
    if (is_projection(z)) {
      const bool pa_pb = z * a == z * b;
      ex.p_range = ex.p_range || (pa_pb && same_right_ideal(a, z));
      ex.p_annih = ex.p_annih || (pa_pb && same_left_annihilator(a, z));
      ex.p_pb_a = ex.p_pb_a || z * b == a;
    }
    if (z * a == a) {
      const bool awe_bwe = aw * z == bw * z;
      if (awe_bwe) {
        ex.e_range = ex.e_range || same_left_ideal(z, aw);
        ex.e_annih = ex.e_annih || same_right_annihilator(z, aw);
        ex.e_incl = ex.e_incl || right_annihilator_contained(aw, z);
      }
      ex.e_xi = ex.e_xi || bw * z == aw;
      ex.e_xii = ex.e_xii || awe_bwe;
    }
    if (z * wa == wa && a * z == b * z) {
      ex.f_range = ex.f_range || same_left_ideal(a, z);
      ex.f_annih = ex.f_annih || same_right_annihilator(a, z);
      ex.f_incl = ex.f_incl || right_annihilator_contained(a, z);
    }
  }
  return ex;
}

// ----------------------------------------------------------------------------

Result check_relation(const Instance& in) {
  const auto& [a, b, c, w] = in;
  auto xa = try_w_core_inverse(a, w);
  auto xb = try_w_core_inverse(b, w);
  if (!xa || !xb) return skip("a, b ∈ R_w^⊕ required");
  const bool rel = wcore_rel(a, b, w, *xa);
  const OrderReport strict = order_holds(OrderKind::WCore, a, b, w, OrderMode::Strict);
  Clauses out;
  out.check("a_w^⊕ certificate", all_hold(certify(GenInvKind::w_core(w), a, *xa)))
      .check("b_w^⊕ certificate", all_hold(certify(GenInvKind::w_core(w), b, *xb)))
      .check("strict order agrees with the defining equations", strict.holds == rel)
      .check("relaxed order agrees with strict order", relaxed(a, b, w) == rel);
  if (strict.holds) {
    auto p = strict.witnesses.find("p");
    out.check("witness p = awa_w^⊕ is a projection", p != strict.witnesses.end() && is_projection(p->second));
  }
  return out.result();
}

Result check_par(const Instance& in, int part) {
  const auto& [a, b, c, w] = in;
  auto xa = try_w_core_inverse(a, w);
  auto xb = try_w_core_inverse(b, w);
  if (!xa || !xb) return skip("a, b ∈ R_w^⊕ required");
  if (!wcore_rel(a, b, w, *xa)) return skip("a ⊕≤_w b does not hold");
  const Matrix& x = *xa;
  const Matrix& y = *xb;
  switch (part) {
    case 1: return Clauses().check("a_w^⊕a = b_w^⊕a", x * a == y * a).result();
    case 2: return Clauses().check("awa_w^⊕ = awb_w^⊕", a * w * x == a * w * y).result();
    case 3: return Clauses().check("awb_w^⊕a = a", a * w * y * a == a).result();
    default: return Clauses().check("b_w^⊕a_w^⊕ = (a_w^⊕)^2", y * x == x * x).result();
  }
}

Result check_axioms(const Instance& in) {
  const auto& [a, b, c, w] = in;
  if (!is_w_core_invertible(a, w)) return skip("a ∈ R_w^⊕ required");
  const Matrix zero = Matrix::zero(a.domain(), a.rows());
  auto le = [&](const Matrix& x, const Matrix& y) {
    return order_holds_bool(OrderKind::WCore, x, y, w, OrderMode::Strict);
  };
  Clauses out;
  out.check("reflexivity a ⊕≤_w a", le(a, a)).check("0 ⊕≤_w a", le(zero, a));
  const bool b_in = is_w_core_invertible(b, w);
  if (b_in) {
    const bool ab = le(a, b);
    out.check("antisymmetry", !(ab && le(b, a)) || a == b);
    if (ab && is_w_core_invertible(c, w) && le(b, c)) out.check("transitivity", le(a, c));
  }
  return out.result();
}

Result check_symmetric(const Instance& in) {
  const auto& [a, b, c, w] = in;
  auto xa = try_w_core_inverse(a, w);
  auto xb = try_w_core_inverse(b, w);
  if (!xa || !xb) return skip("a, b ∈ R_w^⊕ required");
  const Matrix& x = *xa;
  const Matrix& y = *xb;
  const bool i = wcore_rel(a, b, w, x);
  const bool ii = x * b == y * a && b * w * x == a * w * y && a * w * y * a == a;
  return Clauses().agree("(i)⇔(ii)", label({{"i", i}, {"ii", ii}})).result();
}

Result check_mixed(const Instance& in) {
  const auto& [a, b, c, w] = in;
  auto xa = try_w_core_inverse(a, w);
  auto xb = try_w_core_inverse(b, w);
  if (!xa || !xb) return skip("a, b ∈ R_w^⊕ required");
  const Matrix& x = *xa;
  const Matrix& y = *xb;
  if (!wcore_rel(a, b, w, x)) return skip("a ⊕≤_w b does not hold");
  return Clauses()
      .check("a_w^⊕bwb_w^⊕ = a_w^⊕", x * b * w * y == x)
      .check("b_w^⊕bwa_w^⊕ = a_w^⊕", y * b * w * x == x)
      .check("a_w^⊕bwa_w^⊕ = a_w^⊕", x * b * w * x == x)
      .check("a_w^⊕awb_w^⊕ = a_w^⊕", x * a * w * y == x)
      .check("b_w^⊕awa_w^⊕ = a_w^⊕", y * a * w * x == x)
      .check("b_w^⊕awb_w^⊕ = a_w^⊕", y * a * w * y == x)
      .result();
}

Result check_projection_lemma(const Instance& in) {
  const auto& [a, b, c, w] = in;
  auto xa = try_w_core_inverse(a, w);
  if (!xa) return skip("a ∈ R_w^⊕ required");
  const std::size_t n = a.rows();
  std::vector<Matrix> candidates = {a * w * *xa, Matrix::identity(a.domain(), n), Matrix::zero(a.domain(), n), b};
  if (const auto* ring = detail::tiny_ring(a.domain(), n)) {
    for (const Matrix& z : *ring) {
      if (is_projection(z)) candidates.push_back(z);
    }
  }
  Clauses out;
  for (const Matrix& p : candidates) {
    out.agree("candidate p = " + p.str(), projection_characterization(a, w, p));
  }
  return out.result();
}

Result check_projection_6way(const Instance& in) {
  const auto& [a, b, c, w] = in;
  auto xa = try_w_core_inverse(a, w);
  if (!xa) return skip("a ∈ R_w^⊕ required");
  const Matrix& x = *xa;
  const Matrix v = inverse_along(w, a);
  const Matrix t = one_three_inverse(a);
  const Matrix p = a * w * x;
  const bool pa_pb = p * a == p * b;
  auto cond = label({
      {"i", x * a == x * b},
      {"ii", v == v * t * b},
      {"iii", a.star() * a == a.star() * b},
      {"iv", a == a * w * x * b},
      {"v", is_projection(p) && same_right_ideal(a, p) && pa_pb},
      {"vi", is_projection(p) && same_left_annihilator(p, a) && pa_pb},
  });
  if (const auto* ring = detail::tiny_ring(a.domain(), a.rows())) {
    const Existentials ex = search_existentials(*ring, a, b, w);
    cond.push_back({"v*", ex.p_range});
    cond.push_back({"vi*", ex.p_annih});
  }
  // Independent of the chosen {1,3}-inverse.
  const Matrix t2 = one_three_inverse(a, PivotStrategy::LastNonzero);
  cond.push_back({"ii'", v == v * t2 * b});
  return Clauses().agree("6-way", cond).result();
}

Result check_idempotent_lemma(const Instance& in, IdempotentSide side) {
  const auto& [a, b, c, w] = in;
  auto xa = try_w_core_inverse(a, w);
  if (!xa) return skip("a ∈ R_w^⊕ required");
  const std::size_t n = a.rows();
  const Matrix canonical = side == IdempotentSide::E ? *xa * a * w : w * *xa * a;
  std::vector<Matrix> candidates = {canonical, Matrix::identity(a.domain(), n), Matrix::zero(a.domain(), n), b};
  if (const auto* ring = detail::tiny_ring(a.domain(), n)) candidates.insert(candidates.end(), ring->begin(), ring->end());
  Clauses out;
  for (const Matrix& e : candidates) {
    out.agree("candidate " + e.str(), idempotent_characterizations(a, w, e, side));
  }
  return out.result();
}

// Solves y w a = a, a w y = a, y ∈ aR ∩ Ra directly as a linear system.
std::optional<Matrix> along_by_definition(const Matrix& a, const Matrix& w) {
  const std::size_t n = a.rows();
  const Domain& d = a.domain();
  const Matrix id = Matrix::identity(d, n);
  const Matrix zero = Matrix::zero(d, n);
  const Matrix g = inner_inverse(a);
  const std::array<MatrixEquation, 4> system = {
      MatrixEquation{{{id, w * a}}, a},
      MatrixEquation{{{a * w, id}}, a},
      MatrixEquation{{{id - a * g, id}}, zero},
      MatrixEquation{{{id, id - g * a}}, zero},
  };
  return solve_matrix_equations(system, n, n);
}

Result check_mary(const Instance& in) {
  const auto& [a, b, c, w] = in;
  const Matrix aw = a * w;
  const Matrix wa = w * a;
  const auto direct = along_by_definition(a, w);
  const auto library = try_inverse_along(w, a);
  auto cond = label({
      {"i", direct.has_value()},
      {"ii", right_ideal_contained(a, aw) && is_group_invertible(aw)},
      {"iii", left_ideal_contained(a, wa) && is_group_invertible(wa)},
      {"awaR ∩ Rawa", right_ideal_contained(a, aw * a) && left_ideal_contained(a, a * wa)},
      {"library", library.has_value()},
  });
  Clauses out;
  out.agree("criterion", cond);
  if (direct && library) {
    out.check("w^∥a matches the definitional solution", *library == *direct)
        .check("w^∥a = a(wa)^#", *direct == a * group_inverse(wa))
        .check("w^∥a = (aw)^#a", *direct == group_inverse(aw) * a);
  }
  return out.result();
}

Result check_idempotent_11way(const Instance& in) {
  const auto& [a, b, c, w] = in;
  auto xa = try_w_core_inverse(a, w);
  if (!xa) return skip("a ∈ R_w^⊕ required");
  const Matrix& x = *xa;
  const Matrix aw = a * w;
  const Matrix wa = w * a;
  const Matrix v = inverse_along(w, a);
  const Matrix g = group_inverse(wa);
  const Matrix e = x * aw;
  const Matrix f = w * x * a;
  const bool e_base = e * a == a && aw * e == b * w * e;
  const bool f_base = a * f == b * f && f * wa == wa;
  auto cond = label({
      {"i", aw * x == b * w * x},
      {"ii", a == b * w * v},
      {"iii", aw * a == b * wa},
      {"iv", a * g == b * g},
      {"v", a == b * w * x * a},
      {"vi", e_base && same_left_ideal(e, aw)},
      {"vii", e_base && same_right_annihilator(e, aw)},
      {"viii", e_base && right_annihilator_contained(aw, e)},
      {"ix", f_base && same_left_ideal(a, f)},
      {"x", f_base && same_right_annihilator(a, f)},
      {"xi", f_base && right_annihilator_contained(a, f)},
  });
  if (const auto* ring = detail::tiny_ring(a.domain(), a.rows())) {
    const Existentials ex = search_existentials(*ring, a, b, w);
    for (const auto& [id, v2] : std::vector<std::pair<std::string, bool>>{{"vi*", ex.e_range},
                                                                          {"vii*", ex.e_annih},
                                                                          {"viii*", ex.e_incl},
                                                                          {"ix*", ex.f_range},
                                                                          {"x*", ex.f_annih},
                                                                          {"xi*", ex.f_incl}}) {
      cond.push_back({id, v2});
    }
  }
  return Clauses().agree("11-way", cond).result();
}

void append_12way_existentials(ConditionVector& cond, const Matrix& a, const Matrix& b, const Matrix& w) {
  const auto* ring = detail::tiny_ring(a.domain(), a.rows());
  if (!ring) return;
  const Existentials ex = search_existentials(*ring, a, b, w);
  cond.push_back({"vi*", ex.p_range && ex.e_range});
  cond.push_back({"vii*", ex.p_annih && ex.e_annih});
  cond.push_back({"viii*", ex.p_range && ex.f_range});
  cond.push_back({"ix*", ex.p_annih && ex.f_annih});
  cond.push_back({"x*", ex.p_annih && ex.f_incl});
  cond.push_back({"xi*", ex.p_pb_a && ex.e_xi});
  cond.push_back({"xii*", ex.p_pb_a && ex.e_xii});
}

Result check_wcore_12way(const Instance& in) {
  const auto& [a, b, c, w] = in;
  if (!is_w_core_invertible(a, w)) return skip("a ∈ R_w^⊕ required");
  ConditionVector cond = w_core_characterizations(a, b, w);
  append_12way_existentials(cond, a, b, w);
  return Clauses().agree("12-way", cond).result();
}

Result check_core_12way(const Instance& in) {
  const auto& [a, b, c, w] = in;
  if (!try_core_inverse(a)) return skip("a ∈ R^⊕ required");
  ConditionVector cond = core_characterizations(a, b);
  append_12way_existentials(cond, a, b, Matrix::identity(a.domain(), a.rows()));
  return Clauses().agree("12-way", cond).result();
}

Result check_implies_ls_rs(const Instance& in) {
  const auto& [a, b, c, w] = in;
  auto xa = try_w_core_inverse(a, w);
  if (!xa) return skip("a ∈ R_w^⊕ required");
  if (!relaxed(a, b, w)) return skip("a ⊕≤_w b does not hold");
  const Matrix wa = w * a;
  const Matrix wb = w * b;
  const Matrix g = group_inverse(wa);
  Clauses out;
  out.check("a *≤ b", left_star(a, b)).check("wa(wa)^# = wb(wa)^#", wa * g == wb * g);
  // Rwa ⊆ Rwb goes through b_w^⊕, so it needs the order's own domain b ∈ R_w^⊕.
  if (is_w_core_invertible(b, w)) out.check("wa ≤_# wb", right_sharp(wa, wb));
  return out.result();
}

Result check_converse_fails(const Instance& in) {
  const auto& [a, b, c, w] = in;
  if (!is_w_core_invertible(a, w)) return skip("a ∈ R_w^⊕ required");
  if (!left_star(a, b) || !right_sharp(w * a, w * b)) return skip("a *≤ b and wa ≤_# wb not both true");
  if (relaxed(a, b, w)) return skip("a ⊕≤_w b holds; not a counterexample");
  return holds();
}

Result check_unit_equivalence(const Instance& in) {
  const auto& [a, b, c, w] = in;
  if (!is_unit(w)) return skip("w must be a unit");
  if (!is_w_core_invertible(a, w)) return skip("a ∈ R_w^⊕ required");
  auto cond = label({{"i", relaxed(a, b, w)}, {"ii", left_star(a, b) && right_sharp(w * a, w * b)}});
  return Clauses().agree("(i)⇔(ii)", cond).result();
}

Result check_leftstar_4way(const Instance& in) {
  const auto& [a, b, c, w] = in;
  auto xa = try_w_core_inverse(a, w);
  auto xb = try_w_core_inverse(b, w);
  if (!xa || !xb) return skip("a, b ∈ R_w^⊕ required");
  const Matrix& x = *xa;
  const Matrix& y = *xb;
  const bool ls = left_star(a, b);
  auto cond = label({
      {"i", wcore_rel(a, b, w, x)},
      {"ii", ls && a == b * w * x * b},
      {"iii", ls && x == y * a * w * x},
      {"iv", ls && x == y * a * w * y},
  });
  return Clauses().agree("4-way", cond).result();
}

Result check_rightsharp_3way(const Instance& in) {
  const auto& [a, b, c, w] = in;
  if (!is_unit(w)) return skip("w must be a unit");
  auto xa = try_w_core_inverse(a, w);
  auto xb = try_w_core_inverse(b, w);
  if (!xa || !xb) return skip("a, b ∈ R_w^⊕ required");
  const Matrix& x = *xa;
  const Matrix& y = *xb;
  const bool rs = right_sharp(w * a, w * b);
  auto cond = label({
      {"i", wcore_rel(a, b, w, x)},
      {"ii", rs && a == b * w * x * b},
      {"iii", rs && x == x * a * w * y},
  });
  return Clauses().agree("3-way", cond).result();
}

Result check_aw_product(const Instance& in) {
  const auto& [a, b, c, w] = in;
  const Matrix aw = a * w;
  auto xa = try_w_core_inverse(a, w);
  auto core_aw = try_core_inverse(aw);
  auto cond = label({{"a ∈ R_w^⊕", xa.has_value()}, {"aR = awR, aw ∈ R^⊕", same_right_ideal(a, aw) && core_aw.has_value()}});
  Clauses out;
  out.agree("membership", cond);
  if (xa && core_aw) {
    out.check("a_w^⊕ = (aw)^⊕", *xa == *core_aw).check("product route agrees", w_core_via_product(a, w) == *xa);
  }
  return out.result();
}

Result check_wcore_iff_aw_core(const Instance& in) {
  const auto& [a, b, c, w] = in;
  if (!is_unit(w)) return skip("w must be a unit");
  if (!is_w_core_invertible(a, w)) return skip("a ∈ R_w^⊕ required");
  auto cond = label({
      {"i", relaxed(a, b, w)},
      {"ii", core_order(a * w, b * w)},
      {"iii", left_star(a, b) && right_sharp(w * a, w * b)},
  });
  return Clauses().agree("3-way", cond).result();
}

Result check_threeclass_core(const Instance& in) {
  const auto& [a, b, c, w] = in;
  const Matrix id = Matrix::identity(a.domain(), a.rows());
  auto core = try_core_inverse(a);
  auto self = try_w_core_inverse(a, a);
  auto unit = try_w_core_inverse(a, id);
  Clauses out;
  out.agree("membership", label({{"R^⊕", core.has_value()}, {"R_a^⊕", self.has_value()}, {"R_1^⊕", unit.has_value()}}));
  if (!core) {
    auto r = out.result();
    return r.verdict == Verdict::Fails ? r : skip("a ∈ R^⊕ required");
  }
  if (unit) out.check("a_1^⊕ = a^⊕", *unit == *core);
  if (self) out.check("a_a^⊕ = a^#a^(1,3)", *self == group_inverse(a) * one_three_inverse(a));
  out.agree("orders", label({{"⊕≤", core_order(a, b)}, {"⊕≤_a", relaxed(a, b, a)}, {"⊕≤_1", relaxed(a, b, id)}}));
  return out.result();
}

Result check_threeclass_star(const Instance& in) {
  const auto& [a, b, c, w] = in;
  const Matrix as = a.star();
  auto mp = try_moore_penrose(a);
  auto x = try_w_core_inverse(a, as);
  Clauses out;
  out.agree("membership", label({{"R^†", mp.has_value()}, {"R_{a*}^⊕", x.has_value()}}));
  if (!mp || !x) {
    auto r = out.result();
    return r.verdict == Verdict::Fails ? r : skip("a ∈ R^† required");
  }
  const Matrix& m = *mp;
  out.check("a_{a*}^⊕ = (a^†)*a^†", *x == m.star() * m);
  out.agree("orders", label({{"*≤", order_holds_bool(OrderKind::Star, a, b)},
                             {"⊕≤_{a*}", relaxed(a, b, as)},
                             {"a^†a = a^†b, aa^† = ba^†", m * a == m * b && a * m == b * m}}));
  return out.result();
}

Result check_ep(const Instance& in) {
  const auto& [a, b, c, w] = in;
  if (!is_ep(a)) return skip("a must be EP");
  auto cond = label({
      {"i", relaxed(a, b, a)},
      {"ii", relaxed(a, b, a.star())},
      {"iii", core_order(a, b)},
      {"iv", order_holds_bool(OrderKind::Star, a, b)},
      {"v", sharp(a, b)},
  });
  return Clauses().agree("5-way", cond).result();
}

Result check_implies_diamond(const Instance& in) {
  const auto& [a, b, c, w] = in;
  if (!is_w_core_invertible(a, w)) return skip("a ∈ R_w^⊕ required");
  if (!relaxed(a, b, w)) return skip("a ⊕≤_w b does not hold");
  return Clauses().check("a ⋄≤ b", order_holds_bool(OrderKind::Diamond, a, b)).result();
}

Result check_difference(const Instance& in) {
  const auto& [a, b, c, w] = in;
  if (!(a * w * b == b * w * a)) return skip("awb = bwa required");
  if (!is_w_core_invertible(a, w) || !is_w_core_invertible(b, w) || !is_w_core_invertible(a - b, w)) {
    return skip("a, b, a-b ∈ R_w^⊕ required");
  }
  auto strict = [&](const Matrix& x, const Matrix& y) {
    return order_holds_bool(OrderKind::WCore, x, y, w, OrderMode::Strict);
  };
  auto cond = label({
      {"i", strict(a, b)},
      {"ii", strict(b - a, b)},
      {"iii", left_star(a, b) && sharp(w * a, w * b)},
  });
  return Clauses().agree("3-way", cond).result();
}

Result check_difference_core(const Instance& in) {
  const auto& [a, b, c, w] = in;
  if (!try_core_inverse(a) || !try_core_inverse(b) || !try_core_inverse(a - b)) {
    return skip("a, b, a-b ∈ R^⊕ required");
  }
  const bool commute = a * b == b * a;
  auto cond = label({
      {"i", core_order(a, b) && commute},
      {"ii", core_order(b - a, b) && commute},
      {"iii", left_star(a, b) && sharp(a, b)},
  });
  return Clauses().agree("3-way", cond).result();
}

Result check_difference_acore(const Instance& in) {
  const auto& [a, b, c, w] = in;
  const Matrix a2 = a * a;
  if (!(a2 * b == b * a2)) return skip("a²b = ba² required");
  if (!try_core_inverse(a) || !try_core_inverse(b) || !try_core_inverse(a - b)) {
    return skip("a, b, a-b ∈ R^⊕ required");
  }
  auto cond = label({
      {"i", core_order(a, b)},
      {"ii", core_order(b - a, b)},
      {"iii", left_star(a, b) && sharp(a2, a * b)},
  });
  return Clauses().agree("3-way", cond).result();
}

Result check_reverse(const Instance& in) {
  const auto& [a, b, c, w] = in;
  auto xa = try_w_core_inverse(a, w);
  auto xb = try_w_core_inverse(b, w);
  if (!xa || !xb) return skip("a, b ∈ R_w^⊕ required");
  if (!wcore_rel(a, b, w, *xa)) return skip("a ⊕≤_w b does not hold");
  auto prod = try_w_core_inverse(a * w * b, w);
  return Clauses()
      .check("awb ∈ R_w^⊕", prod.has_value())
      .check("(awb)_w^⊕ = b_w^⊕a_w^⊕", prod && *prod == *xb * *xa)
      .result();
}

Result check_reverse_counterexample(const Instance& in) {
  const auto& [a, b, c, w] = in;
  auto xa = try_w_core_inverse(a, w);
  auto xb = try_w_core_inverse(b, w);
  if (!xa || !xb) return skip("a, b ∈ R_w^⊕ required");
  if (!wcore_rel(a, b, w, *xa)) return skip("a ⊕≤_w b does not hold");
  auto prod = try_w_core_inverse(a * b, w);
  if (!prod) return skip("ab ∉ R_w^⊕");
  if (*prod == *xb * *xa) return skip("(ab)_w^⊕ = b_w^⊕a_w^⊕ here");
  return holds();
}

Result dispatch(PropertyId id, const Instance& in) {
  switch (id) {
    case PropertyId::DEF_WCORE_RELATION: return check_relation(in);
    case PropertyId::LEM_WCORE_PAR_I: return check_par(in, 1);
    case PropertyId::LEM_WCORE_PAR_II: return check_par(in, 2);
    case PropertyId::LEM_WCORE_PAR_III: return check_par(in, 3);
    case PropertyId::LEM_WCORE_PAR_IV: return check_par(in, 4);
    case PropertyId::THM_PARTIAL_ORDER_AXIOMS: return check_axioms(in);
    case PropertyId::PROP_SYMMETRIC_CHAR: return check_symmetric(in);
    case PropertyId::PROP_MIXED_PRODUCTS: return check_mixed(in);
    case PropertyId::LEM_PROJECTION: return check_projection_lemma(in);
    case PropertyId::THM_PROJECTION_6WAY: return check_projection_6way(in);
    case PropertyId::LEM_IDEMPOTENT_E: return check_idempotent_lemma(in, IdempotentSide::E);
    case PropertyId::LEM_IDEMPOTENT_F: return check_idempotent_lemma(in, IdempotentSide::F);
    case PropertyId::LEM_MARY_CRITERION: return check_mary(in);
    case PropertyId::THM_IDEMPOTENT_11WAY: return check_idempotent_11way(in);
    case PropertyId::THM_WCORE_12WAY: return check_wcore_12way(in);
    case PropertyId::COR_CORE_12WAY: return check_core_12way(in);
    case PropertyId::PROP_IMPLIES_LEFTSTAR_RIGHTSHARP: return check_implies_ls_rs(in);
    case PropertyId::EX2_CONVERSE_FAILS: return check_converse_fails(in);
    case PropertyId::THM_UNIT_EQUIVALENCE: return check_unit_equivalence(in);
    case PropertyId::THM_LEFTSTAR_4WAY: return check_leftstar_4way(in);
    case PropertyId::THM_RIGHTSHARP_3WAY: return check_rightsharp_3way(in);
    case PropertyId::LEM_AW_PRODUCT: return check_aw_product(in);
    case PropertyId::THM_WCORE_IFF_AW_CORE: return check_wcore_iff_aw_core(in);
    case PropertyId::THM_THREECLASS_CORE: return check_threeclass_core(in);
    case PropertyId::THM_THREECLASS_STAR: return check_threeclass_star(in);
    case PropertyId::THM_EP_5WAY: return check_ep(in);
    case PropertyId::PROP_IMPLIES_DIAMOND: return check_implies_diamond(in);
    case PropertyId::THM_DIFFERENCE_3WAY: return check_difference(in);
    case PropertyId::COR_DIFFERENCE_CORE: return check_difference_core(in);
    case PropertyId::COR_DIFFERENCE_ACORE: return check_difference_acore(in);
    case PropertyId::THM_REVERSE_ORDER: return check_reverse(in);
    case PropertyId::EX_REVERSE_COUNTEREXAMPLE: return check_reverse_counterexample(in);
  }
  return fail("unknown property");
}

bool well_formed(const Instance& in) {
  const Matrix& a = in.a;
  if (!a.is_square()) return false;
  for (const Matrix* m : {&in.b, &in.c, &in.w}) {
    if (!m->is_square() || m->rows() != a.rows() || !(m->domain() == a.domain())) return false;
  }
  return true;
}

}  // namespace

std::span<const PropertyId> all_properties() { return kIds; }

std::string_view property_name(PropertyId id) { return entry(id).name; }

std::optional<PropertyId> parse_property(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (name == e.name) return e.id;
  }
  return std::nullopt;
}

std::string_view property_statement(PropertyId id) { return entry(id).statement; }

Signature signature(PropertyId id) { return entry(id).sig; }

Instance Instance::of(Matrix a) {
  const Domain d = a.domain();
  const std::size_t n = a.rows();
  return Instance{std::move(a), Matrix::zero(d, n), Matrix::zero(d, n), Matrix::identity(d, n)};
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

PropertyOutcome check_property(PropertyId id, const Instance& instance) {
  PropertyOutcome out{id, Verdict::Inapplicable, {}, std::nullopt};
  if (!well_formed(instance)) {
    out.detail = "instance matrices must be square with a common size and domain";
    return out;
  }
  Result r;
  try {
    r = dispatch(id, instance);
  } catch (const std::exception& e) {
    r = fail(std::string("exception: ") + e.what());
  }
  out.verdict = r.verdict;
  out.detail = std::move(r.detail);
  if (out.verdict == Verdict::Fails) out.counterexample = instance;
  return out;
}

}  // namespace wcore
