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

#include "wcore/geninv.hpp"

#include <array>
#include <utility>

namespace wcore {

namespace {

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) throw ShapeError(std::string(what) + " requires a square matrix");
}

void require_compatible(const Matrix& a, const Matrix& b, const char* what) {
  require_square(a, what);
  if (!(a.domain() == b.domain()) || a.rows() != b.rows() || !b.is_square()) {
    throw ShapeError(std::string(what) + " requires operands of the same size and domain");
  }
}

Matrix verified(const GenInvKind& kind, const Matrix& a, Matrix x) {
  if (!all_hold(certify(kind, a, x))) {
    throw std::logic_error("internal error: constructed " + std::string(kind_name(kind.kind)) +
                           " inverse fails its defining equations for a = " + a.str());
  }
  return x;
}

struct Attempt {
  std::optional<Matrix> value;
  Failure failure = Failure::NotGroupInvertible;
};

Attempt fail(Failure f) { return {std::nullopt, f}; }

Matrix raw_inner(const Matrix& a, PivotStrategy strategy) {
  // With P = transform, P a Q = diag(I_r, 0) for the column operation Q that
  // moves pivot columns first and clears the rest, so Q diag(I_r, 0) P keeps
  // row k of P at row pivot[k].
  const RrefResult red = rref(a, strategy);
  Matrix x(a.domain(), a.cols(), a.rows());
  for (std::size_t k = 0; k < red.rank; ++k) {
    for (std::size_t j = 0; j < a.rows(); ++j) x(red.pivots[k], j) = red.transform(k, j);
  }
  return x;
}

Attempt attempt_group(const Matrix& a) {
  const RankFactorization rf = rank_factorization(a);
  if (rf.rank == 0) return {Matrix::zero(a.domain(), a.rows()), {}};
  const Matrix core = rf.right * rf.left;
  if (!is_unit(core)) return fail(Failure::NotGroupInvertible);
  const Matrix inv = inverse(core);
  return {rf.left * inv * inv * rf.right, {}};
}

Attempt attempt_one_three(const Matrix& a, PivotStrategy strategy) {
  const Matrix gram = a.star() * a;
  if (!solve_left(gram, a)) return fail(Failure::NotOneThreeInvertible);
  return {raw_inner(gram, strategy) * a.star(), {}};
}

Attempt attempt_one_four(const Matrix& a, PivotStrategy strategy) {
  const Matrix gram = a * a.star();
  if (!solve_right(gram, a)) return fail(Failure::NotOneFourInvertible);
  return {a.star() * raw_inner(gram, strategy), {}};
}

Attempt attempt_along(const Matrix& x, const Matrix& d) {
  const Matrix dx = d * x;
  if (!solve_right(dx, d)) return fail(Failure::NotInvertibleAlong);
  Attempt g = attempt_group(dx);
  if (!g.value) return fail(Failure::NotInvertibleAlong);
  return {*g.value * d, {}};
}

Attempt attempt_core(const Matrix& a, PivotStrategy strategy) {
  Attempt g = attempt_group(a);
  if (!g.value) return fail(Failure::NotCoreInvertible);
  Attempt t = attempt_one_three(a, strategy);
  if (!t.value) return fail(Failure::NotCoreInvertible);
  return {*g.value * a * *t.value, {}};
}

Attempt attempt_w_core(const Matrix& a, const Matrix& w, PivotStrategy strategy) {
  Attempt along = attempt_along(w, a);
  if (!along.value) return fail(Failure::WNotInvertibleAlongA);
  Attempt t = attempt_one_three(a, strategy);
  if (!t.value) return fail(Failure::NotOneThree);
  return {*along.value * *t.value, {}};
}

Matrix unwrap(const GenInvKind& kind, const Matrix& a, Attempt attempt) {
  if (!attempt.value) throw NotGenInvertible(kind.kind, attempt.failure);
  return verified(kind, a, std::move(*attempt.value));
}

}  // namespace

bool GenInvKind::is_unique() const {
  switch (kind) {
    case InverseKind::Inner:
    case InverseKind::Reflexive:
    case InverseKind::OneThree:
    case InverseKind::OneFour:
      return false;
    default:
      return true;
  }
}

std::string_view kind_name(InverseKind kind) {
  switch (kind) {
    case InverseKind::Inner: return "inner";
    case InverseKind::Reflexive: return "reflexive";
    case InverseKind::Group: return "group";
    case InverseKind::OneThree: return "one3";
    case InverseKind::OneFour: return "one4";
    case InverseKind::MoorePenrose: return "mp";
    case InverseKind::Along: return "along";
    case InverseKind::Core: return "core";
    case InverseKind::WCore: return "wcore";
  }
  return "?";
}

std::optional<InverseKind> parse_kind(std::string_view name) {
  for (InverseKind k : {InverseKind::Inner, InverseKind::Reflexive, InverseKind::Group, InverseKind::OneThree,
                        InverseKind::OneFour, InverseKind::MoorePenrose, InverseKind::Along, InverseKind::Core,
                        InverseKind::WCore}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view failure_name(Failure failure) {
  switch (failure) {
    case Failure::NotGroupInvertible: return "NotGroupInvertible";
    case Failure::NotOneThreeInvertible: return "NotOneThreeInvertible";
    case Failure::NotOneFourInvertible: return "NotOneFourInvertible";
    case Failure::NotMoorePenroseInvertible: return "NotMoorePenroseInvertible";
    case Failure::NotInvertibleAlong: return "NotInvertibleAlong";
    case Failure::NotCoreInvertible: return "NotCoreInvertible";
    case Failure::WNotInvertibleAlongA: return "WNotInvertibleAlongA";
    case Failure::NotOneThree: return "NotOneThree";
    case Failure::RangeMismatch: return "RangeMismatch";
    case Failure::ProductNotCoreInvertible: return "ProductNotCoreInvertible";
  }
  return "?";
}

NotGenInvertible::NotGenInvertible(InverseKind kind, Failure failure)
    : Error(std::string(kind_name(kind)) + " inverse does not exist (" + std::string(failure_name(failure)) + ")"),
      kind_(kind),
      failure_(failure) {}

std::string_view NotGenInvertible::tag() const {
  switch (kind_) {
    case InverseKind::WCore: return "NotWCoreInvertible";
    case InverseKind::Core: return "NotCoreInvertible";
    case InverseKind::Along: return "NotInvertibleAlong";
    default: return failure_name(failure_);
  }
}

Certificate certify(const GenInvKind& kind, const Matrix& a, const Matrix& x) {
  Certificate cert;
  auto add = [&](std::string eq, bool holds) { cert.push_back({std::move(eq), holds}); };
  switch (kind.kind) {
    case InverseKind::Inner:
      add("axa=a", a * x * a == a);
      break;
    case InverseKind::Reflexive:
      add("axa=a", a * x * a == a);
      add("xax=x", x * a * x == x);
      break;
    case InverseKind::Group:
      add("axa=a", a * x * a == a);
      add("xax=x", x * a * x == x);
      add("ax=xa", a * x == x * a);
      break;
    case InverseKind::OneThree: {
      const Matrix ax = a * x;
      add("axa=a", ax * a == a);
      add("(ax)*=ax", ax.star() == ax);
      break;
    }
    case InverseKind::OneFour: {
      const Matrix xa = x * a;
      add("axa=a", a * xa == a);
      add("(xa)*=xa", xa.star() == xa);
      break;
    }
    case InverseKind::MoorePenrose: {
      const Matrix ax = a * x;
      const Matrix xa = x * a;
      add("axa=a", ax * a == a);
      add("xax=x", xa * x == x);
      add("(ax)*=ax", ax.star() == ax);
      add("(xa)*=xa", xa.star() == xa);
      break;
    }
    case InverseKind::Along: {
      const Matrix& d = kind.aux.value();
      add("xad=d", x * a * d == d);
      add("dax=d", d * a * x == d);
      add("x in dR", right_ideal_contained(x, d));
      add("x in Rd", left_ideal_contained(x, d));
      break;
    }
    case InverseKind::Core: {
      const Matrix ax = a * x;
      add("axa=a", ax * a == a);
      add("xax=x", x * ax == x);
      add("ax^2=x", ax * x == x);
      add("xa^2=a", x * a * a == a);
      add("(ax)*=ax", ax.star() == ax);
      break;
    }
    case InverseKind::WCore: {
      const Matrix& w = kind.aux.value();
      const Matrix awx = a * w * x;
      add("awx^2=x", awx * x == x);
      add("xawa=a", x * a * w * a == a);
      add("(awx)*=awx", awx.star() == awx);
      add("awxa=a", awx * a == a);
      add("xawx=x", x * awx == x);
      break;
    }
  }
  return cert;
}

bool all_hold(const Certificate& certificate) {
  for (const auto& e : certificate) {
    if (!e.holds) return false;
  }
  return true;
}

Matrix inner_inverse(const Matrix& a, PivotStrategy strategy) {
  return verified(GenInvKind::inner(), a, raw_inner(a, strategy));
}

Matrix reflexive_inverse(const Matrix& a, PivotStrategy strategy) {
  const Matrix g = raw_inner(a, strategy);
  return verified(GenInvKind::reflexive(), a, g * a * g);
}

Matrix group_inverse(const Matrix& a) {
  require_square(a, "group inverse");
  return unwrap(GenInvKind::group(), a, attempt_group(a));
}

Matrix one_three_inverse(const Matrix& a, PivotStrategy strategy) {
  return unwrap(GenInvKind::one_three(), a, attempt_one_three(a, strategy));
}

Matrix one_four_inverse(const Matrix& a, PivotStrategy strategy) {
  return unwrap(GenInvKind::one_four(), a, attempt_one_four(a, strategy));
}

Matrix moore_penrose(const Matrix& a, PivotStrategy strategy) {
  auto mp = try_moore_penrose(a, strategy);
  if (!mp) throw NotGenInvertible(InverseKind::MoorePenrose, Failure::NotMoorePenroseInvertible);
  return *mp;
}

Matrix inverse_along(const Matrix& x, const Matrix& d) {
  require_compatible(x, d, "inverse along");
  return unwrap(GenInvKind::along(d), x, attempt_along(x, d));
}

Matrix core_inverse(const Matrix& a, PivotStrategy strategy) {
  require_square(a, "core inverse");
  return unwrap(GenInvKind::core(), a, attempt_core(a, strategy));
}

Matrix w_core_inverse(const Matrix& a, const Matrix& w, PivotStrategy strategy) {
  require_compatible(a, w, "w-core inverse");
  return unwrap(GenInvKind::w_core(w), a, attempt_w_core(a, w, strategy));
}

Matrix w_core_via_product(const Matrix& a, const Matrix& w) {
  require_compatible(a, w, "w-core inverse");
  const Matrix aw = a * w;
  if (!right_ideal_contained(a, aw) || !right_ideal_contained(aw, a)) {
    throw NotGenInvertible(InverseKind::WCore, Failure::RangeMismatch);
  }
  Attempt core = attempt_core(aw, PivotStrategy::FirstNonzero);
  if (!core.value) throw NotGenInvertible(InverseKind::WCore, Failure::ProductNotCoreInvertible);
  return verified(GenInvKind::w_core(w), a, std::move(*core.value));
}

std::optional<Matrix> try_group_inverse(const Matrix& a) {
  require_square(a, "group inverse");
  Attempt g = attempt_group(a);
  if (!g.value) return std::nullopt;
  return verified(GenInvKind::group(), a, std::move(*g.value));
}

std::optional<Matrix> try_one_three_inverse(const Matrix& a, PivotStrategy strategy) {
  Attempt t = attempt_one_three(a, strategy);
  if (!t.value) return std::nullopt;
  return verified(GenInvKind::one_three(), a, std::move(*t.value));
}

std::optional<Matrix> try_one_four_inverse(const Matrix& a, PivotStrategy strategy) {
  Attempt t = attempt_one_four(a, strategy);
  if (!t.value) return std::nullopt;
  return verified(GenInvKind::one_four(), a, std::move(*t.value));
}

std::optional<Matrix> try_moore_penrose(const Matrix& a, PivotStrategy strategy) {
  Attempt t13 = attempt_one_three(a, strategy);
  if (!t13.value) return std::nullopt;
  Attempt t14 = attempt_one_four(a, strategy);
  if (!t14.value) return std::nullopt;
  return verified(GenInvKind::moore_penrose(), a, *t14.value * a * *t13.value);
}

std::optional<Matrix> try_inverse_along(const Matrix& x, const Matrix& d) {
  require_compatible(x, d, "inverse along");
  Attempt b = attempt_along(x, d);
  if (!b.value) return std::nullopt;
  return verified(GenInvKind::along(d), x, std::move(*b.value));
}

std::optional<Matrix> try_core_inverse(const Matrix& a) {
  require_square(a, "core inverse");
  Attempt c = attempt_core(a, PivotStrategy::FirstNonzero);
  if (!c.value) return std::nullopt;
  return verified(GenInvKind::core(), a, std::move(*c.value));
}

std::optional<Matrix> try_w_core_inverse(const Matrix& a, const Matrix& w) {
  require_compatible(a, w, "w-core inverse");
  Attempt x = attempt_w_core(a, w, PivotStrategy::FirstNonzero);
  if (!x.value) return std::nullopt;
  return verified(GenInvKind::w_core(w), a, std::move(*x.value));
}

bool is_group_invertible(const Matrix& a) { return a.is_square() && rank(a * a) == rank(a); }

bool is_one_three_invertible(const Matrix& a) { return rank(a.star() * a) == rank(a); }

bool is_one_four_invertible(const Matrix& a) { return rank(a * a.star()) == rank(a); }

bool is_w_core_invertible(const Matrix& a, const Matrix& w) { return try_w_core_inverse(a, w).has_value(); }

bool is_ep(const Matrix& a) {
  if (!a.is_square()) return false;
  auto mp = try_moore_penrose(a);
  return mp && a * *mp == *mp * a;
}

GenInvResult compute(const GenInvKind& kind, const Matrix& a, PivotStrategy strategy) {
  Matrix value = [&] {
    switch (kind.kind) {
      case InverseKind::Inner: return inner_inverse(a, strategy);
      case InverseKind::Reflexive: return reflexive_inverse(a, strategy);
      case InverseKind::Group: return group_inverse(a);
      case InverseKind::OneThree: return one_three_inverse(a, strategy);
      case InverseKind::OneFour: return one_four_inverse(a, strategy);
      case InverseKind::MoorePenrose: return moore_penrose(a, strategy);
      case InverseKind::Along: return inverse_along(a, kind.aux.value());
      case InverseKind::Core: return core_inverse(a, strategy);
      case InverseKind::WCore: return w_core_inverse(a, kind.aux.value(), strategy);
    }
    throw std::logic_error("unhandled inverse kind");
  }();
  Certificate cert = certify(kind, a, value);
  return {kind, std::move(value), std::move(cert)};
}

}  // namespace wcore
