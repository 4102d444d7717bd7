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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wcore/harness.hpp"

namespace {

using namespace wcore;
using Clock = std::chrono::steady_clock;

// Pinned limits. Values are exact, so there is no numeric tolerance.
constexpr double kExampleSeconds = 1.0;
constexpr double kOracleZ3Seconds = 60.0;
constexpr double kVerifyAllSeconds = 300.0;
constexpr std::uint64_t kAxiomRandomInstances = 1000;
constexpr std::uint64_t kSuiteMinApplicable = 100;
constexpr std::uint64_t kSuiteTrials = 250;
constexpr std::uint64_t kConsistencyInstances = 500;
constexpr std::uint64_t kSeed = 20240601;

const Domain Qi = Domain::gaussian_rationals();

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& n) { notes.push_back(n); }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Matrix qi(std::initializer_list<std::initializer_list<long>> rows) { return Matrix::from_ints(Qi, rows); }

void expect_matrix(Outcome& out, const std::string& name, const Matrix& actual, const char* expected) {
  out.expect(actual.str() == expected, name + " = " + actual.str() + ", expected " + expected);
}

Outcome example_one() {
  Outcome out;
  const auto start = Clock::now();
  const Matrix a = qi({{1, 1}, {0, 0}});
  const Matrix b = qi({{1, 1}, {2, -2}});
  const Matrix w = qi({{1, 0}, {1, 0}});
  const Matrix x = w_core_inverse(a, w);
  const Matrix core = core_inverse(a);
  expect_matrix(out, "a_w^⊕", x, "[[1/2,0],[0,0]]");
  expect_matrix(out, "a^⊕", core, "[[1,0],[0,0]]");
  expect_matrix(out, "a_w^⊕a", x * a, "[[1/2,1/2],[0,0]]");
  expect_matrix(out, "a_w^⊕b", x * b, "[[1/2,1/2],[0,0]]");
  expect_matrix(out, "awa_w^⊕", a * w * x, "[[1,0],[0,0]]");
  expect_matrix(out, "bwa_w^⊕", b * w * x, "[[1,0],[0,0]]");
  expect_matrix(out, "ba^⊕", b * core, "[[1,0],[2,0]]");
  out.expect(order_holds_bool(OrderKind::WCore, a, b, w, OrderMode::Relaxed), "w-core order does not hold");
  const auto c = order_holds(OrderKind::Core, a, b);
  out.expect(!c.holds && c.failed_condition == "aa^⊕=ba^⊕", "core order should fail on aa^⊕=ba^⊕");
  // b itself has no w-core inverse, so the strict reading must refuse the pair.
  bool refused = false;
  try {
    order_holds(OrderKind::WCore, a, b, w, OrderMode::Strict);
  } catch (const PreconditionUnmet&) {
    refused = true;
  }
  out.expect(refused, "strict mode accepted b without a w-core inverse");
  if (refused) out.note("b has no w-core inverse; order decided in relaxed mode");
  const double t = seconds_since(start);
  out.expect(t < kExampleSeconds, "runtime " + std::to_string(t) + " s");
  return out;
}

Outcome example_two() {
  Outcome out;
  const Matrix a = qi({{1, 1}, {0, 0}});
  const Matrix b = qi({{1, 1}, {2, 0}});
  const Matrix w = qi({{1, 0}, {0, 0}});
  out.expect(order_holds_bool(OrderKind::LeftStar, a, b), "a *≤ b does not hold");
  out.expect(order_holds_bool(OrderKind::RightSharp, w * a, w * b), "wa ≤_# wb does not hold");
  expect_matrix(out, "(wa)^#", group_inverse(w * a), "[[1,1],[0,0]]");
  expect_matrix(out, "(wb)^#", group_inverse(w * b), "[[1,1],[0,0]]");
  const Matrix x = w_core_inverse(a, w);
  expect_matrix(out, "awa_w^⊕", a * w * x, "[[1,0],[0,0]]");
  expect_matrix(out, "bwa_w^⊕", b * w * x, "[[1,0],[2,0]]");
  const auto r = order_holds(OrderKind::WCore, a, b, w, OrderMode::Relaxed);
  out.expect(!r.holds, "w-core order holds");
  out.expect(r.failed_condition == "awa_w^⊕=bwa_w^⊕",
             "failed condition " + r.failed_condition.value_or("none") + ", expected awa_w^⊕=bwa_w^⊕");
  out.expect(check_property(PropertyId::EX2_CONVERSE_FAILS, reference_converse_fails()).verdict == Verdict::Holds,
             "EX2_CONVERSE_FAILS checker does not hold");
  return out;
}

Outcome reverse_order() {
  Outcome out;
  const Instance inst = reference_reverse_order();
  const Matrix& a = inst.a;
  const Matrix& b = inst.b;
  const Matrix& w = inst.w;
  const Matrix product = w_core_inverse(b, w) * w_core_inverse(a, w);
  expect_matrix(out, "b_w^⊕a_w^⊕", product, "[[1/4,0],[0,0]]");
  expect_matrix(out, "(ab)_w^⊕", w_core_inverse(a * b, w), "[[1/2,0],[0,0]]");
  out.expect(product != w_core_inverse(a * b, w), "(ab)_w^⊕ equals b_w^⊕a_w^⊕");
  expect_matrix(out, "(awb)_w^⊕", w_core_inverse(a * w * b, w), "[[1/4,0],[0,0]]");
  out.expect(order_holds_bool(OrderKind::WCore, a, b, w), "a ⊕≤_w b does not hold");
  const auto thm = check_property(PropertyId::THM_REVERSE_ORDER, inst);
  out.expect(thm.verdict == Verdict::Holds, "THM_REVERSE_ORDER: " + std::string(verdict_name(thm.verdict)) + " " +
                                                thm.detail);
  out.expect(check_property(PropertyId::EX_REVERSE_COUNTEREXAMPLE, inst).verdict == Verdict::Holds,
             "EX_REVERSE_COUNTEREXAMPLE checker does not hold");
  return out;
}

std::optional<Matrix> construct(const GenInvKind& kind, const Matrix& a, PivotStrategy strategy) {
  try {
    return compute(kind, a, strategy).value;
  } catch (const NotGenInvertible&) {
    return std::nullopt;
  }
}

// Returns the number of (kind, a, aux) cases compared.
std::uint64_t oracle_sweep(std::uint32_t p, Outcome& out) {
  const auto ring = enumerate_ring(p, 2);
  std::uint64_t cases = 0;
  auto compare = [&](const GenInvKind& kind, const Matrix& a) {
    ++cases;
    const auto sols = brute_force_inverse(kind, a);
    std::set<std::uint64_t> index;
    for (const auto& s : sols) index.insert(ring_index(s));
    const std::string where = "Z_" + std::to_string(p) + " " + std::string(kind_name(kind.kind)) + " a=" + a.str() +
                              (kind.aux ? " aux=" + kind.aux->str() : "");
    for (auto strategy : {PivotStrategy::FirstNonzero, PivotStrategy::LastNonzero}) {
      const auto x = construct(kind, a, strategy);
      if (x.has_value() != !sols.empty()) {
        out.expect(false, where + ": constructor existence disagrees with oracle");
        return;
      }
      if (x && !index.count(ring_index(*x))) {
        out.expect(false, where + ": constructed value not among oracle solutions");
        return;
      }
    }
    if (kind.is_unique()) out.expect(sols.size() <= 1, where + ": multiple solutions for a unique inverse");
  };
  for (const auto& a : ring) {
    for (auto k : {GenInvKind::inner(), GenInvKind::reflexive(), GenInvKind::group(), GenInvKind::one_three(),
                   GenInvKind::one_four(), GenInvKind::moore_penrose(), GenInvKind::core()}) {
      compare(k, a);
    }
    for (const auto& aux : ring) {
      compare(GenInvKind::along(aux), a);
      compare(GenInvKind::w_core(aux), a);
    }
  }
  return cases;
}

Outcome oracle_agreement() {
  Outcome out;
  const std::uint64_t z2 = oracle_sweep(2, out);
  const auto start = Clock::now();
  const std::uint64_t z3 = oracle_sweep(3, out);
  const double t = seconds_since(start);
  out.expect(t < kOracleZ3Seconds, "Z_3 sweep took " + std::to_string(t) + " s");
  std::ostringstream n;
  n << z2 << " cases over M_2(Z_2), " << z3 << " over M_2(Z_3) in " << t << " s";
  out.note(n.str());
  return out;
}

void absorb(Outcome& out, const SuiteReport& report, const std::string& label) {
  for (const auto& r : report.results) {
    out.expect(r.passed, label + " " + std::string(property_name(r.id)) + ": " + r.detail);
  }
}

Outcome order_axioms() {
  Outcome out;
  const PropertyId ids[] = {PropertyId::THM_PARTIAL_ORDER_AXIOMS};
  TrialConfig z2;
  z2.domain = Domain::mod_p(2);
  z2.exhaustive = true;
  const auto exhaustive = run_suite(z2, ids);
  absorb(out, exhaustive, "M_2(Z_2)");
  std::uint64_t applicable = 0;
  for (std::size_t dim : {2u, 3u}) {
    TrialConfig cfg;
    cfg.dim = dim;
    cfg.seed = kSeed;
    cfg.trials = kAxiomRandomInstances / 2;
    const auto report = run_suite(cfg, ids);
    absorb(out, report, "Q(i) dim " + std::to_string(dim));
    applicable += report.results[0].applicable;
  }
  out.expect(applicable >= kAxiomRandomInstances,
             "only " + std::to_string(applicable) + " applicable random instances");
  out.note(std::to_string(exhaustive.results[0].applicable) + " exhaustive and " + std::to_string(applicable) +
           " random applicable instances");
  return out;
}

Outcome equivalence_suites() {
  Outcome out;
  const PropertyId ids[] = {
      PropertyId::THM_WCORE_12WAY,       PropertyId::THM_PROJECTION_6WAY, PropertyId::THM_IDEMPOTENT_11WAY,
      PropertyId::COR_CORE_12WAY,        PropertyId::THM_THREECLASS_CORE, PropertyId::THM_THREECLASS_STAR,
      PropertyId::THM_EP_5WAY,           PropertyId::THM_UNIT_EQUIVALENCE, PropertyId::THM_LEFTSTAR_4WAY,
      PropertyId::THM_RIGHTSHARP_3WAY,   PropertyId::THM_DIFFERENCE_3WAY, PropertyId::COR_DIFFERENCE_CORE,
      PropertyId::COR_DIFFERENCE_ACORE,  PropertyId::PROP_IMPLIES_DIAMOND, PropertyId::LEM_MARY_CRITERION,
      PropertyId::LEM_AW_PRODUCT,
  };
  TrialConfig cfg;
  cfg.dim = 3;
  cfg.seed = kSeed;
  cfg.trials = kSuiteTrials;
  cfg.min_applicable = kSuiteMinApplicable;
  const auto random = run_suite(cfg, ids);
  absorb(out, random, "Q(i) dim 3");
  std::uint64_t least = UINT64_MAX;
  for (const auto& r : random.results) least = std::min(least, r.applicable);

  TrialConfig z2;
  z2.domain = Domain::mod_p(2);
  z2.exhaustive = true;
  absorb(out, run_suite(z2, ids), "M_2(Z_2)");

  const auto start = Clock::now();
  const auto all = run_suite(TrialConfig{}, all_properties());
  const double t = seconds_since(start);
  absorb(out, all, "verify --all");
  out.expect(t < kVerifyAllSeconds, "verify --all took " + std::to_string(t) + " s");
  std::ostringstream n;
  n << "fewest applicable " << least << "; verify --all " << t << " s";
  out.note(n.str());
  return out;
}

Outcome consistency() {
  Outcome out;
  std::uint64_t instances = 0, via_product = 0, mp = 0, group = 0;
  for (std::size_t dim : {2u, 3u}) {
    TrialConfig cfg;
    cfg.dim = dim;
    cfg = normalized(cfg);
    for (std::uint64_t t = 0; t < kConsistencyInstances / 2; ++t) {
      Rng rng = trial_rng(kSeed, PropertyId::LEM_AW_PRODUCT, dim * 100000 + t);
      Matrix a = random_matrix(cfg, rng);
      Matrix w = random_matrix(cfg, rng);
      if (t % 2 == 0) {
        const auto inst = random_wcore_instance(cfg, rng, WMode::General);
        a = inst.a;
        w = inst.w;
      }
      ++instances;
      const std::string where = "a=" + a.str() + " w=" + w.str();

      const auto x = try_w_core_inverse(a, w);
      std::optional<Matrix> y;
      try {
        y = w_core_via_product(a, w);
      } catch (const NotGenInvertible&) {
      }
      if (x && y) {
        ++via_product;
        out.expect(*x == *y, "w_core_inverse differs from w_core_via_product at " + where);
      }

      const auto first = try_moore_penrose(a, PivotStrategy::FirstNonzero);
      const auto last = try_moore_penrose(a, PivotStrategy::LastNonzero);
      out.expect(first.has_value() == last.has_value(), "MP existence depends on pivot strategy at " + where);
      if (first && last) {
        ++mp;
        const Matrix mixed = one_four_inverse(a, PivotStrategy::LastNonzero) * a *
                             one_three_inverse(a, PivotStrategy::FirstNonzero);
        out.expect(*first == *last && *first == mixed, "MP depends on inner-inverse choice at " + where);
      }

      const auto g = try_group_inverse(a);
      const auto along = try_inverse_along(a, a);
      out.expect(g.has_value() == along.has_value(), "a^# and a^∥a disagree on existence at " + where);
      if (g && along) {
        ++group;
        out.expect(*g == *along, "a^# differs from a^∥a at " + where);
      }
    }
  }
  out.expect(instances >= kConsistencyInstances, "only " + std::to_string(instances) + " instances");
  out.expect(via_product > 0 && mp > 0 && group > 0, "a consistency check never applied");
  std::ostringstream n;
  n << instances << " instances; both w-core routes " << via_product << ", MP " << mp << ", group " << group;
  out.note(n.str());
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "first example reproduction", example_one},
      {2, "second example reproduction", example_two},
      {3, "reverse-order counterexample reproduction", reverse_order},
      {4, "exhaustive finite-ring oracle agreement", oracle_agreement},
      {5, "order axioms", order_axioms},
      {6, "equivalence suites", equivalence_suites},
      {7, "uniqueness and consistency", consistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    if (!out.pass) ++failures;
    std::printf("%s [%d] %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.number, c.title, seconds_since(start));
    const std::size_t shown = std::min<std::size_t>(out.notes.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) std::printf("       %s\n", out.notes[i].c_str());
    if (out.notes.size() > shown) std::printf("       ... %zu more\n", out.notes.size() - shown);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
