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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "wcore/harness.hpp"

namespace wcore {
namespace {

const Domain Qi = Domain::gaussian_rationals();
const Domain Z2 = Domain::mod_p(2);

TEST(Catalog, NamesAndStatements) {
  EXPECT_EQ(all_properties().size(), 32u);
  std::set<std::string> names;
  for (auto id : all_properties()) {
    const std::string name(property_name(id));
    EXPECT_TRUE(names.insert(name).second);
    EXPECT_EQ(parse_property(name), id);
    EXPECT_FALSE(property_statement(id).empty());
  }
  EXPECT_FALSE(parse_property("NOPE"));
  EXPECT_TRUE(signature(PropertyId::THM_UNIT_EQUIVALENCE).unit_w);
  EXPECT_FALSE(signature(PropertyId::COR_CORE_12WAY).uses_w);
  EXPECT_TRUE(signature(PropertyId::THM_PARTIAL_ORDER_AXIOMS).uses_c);
}

TEST(Catalog, ReferenceInstances) {
  EXPECT_EQ(check_property(PropertyId::THM_WCORE_12WAY, reference_wcore_not_core()).verdict, Verdict::Holds);
  EXPECT_EQ(check_property(PropertyId::EX2_CONVERSE_FAILS, reference_converse_fails()).verdict, Verdict::Holds);
  EXPECT_EQ(check_property(PropertyId::EX_REVERSE_COUNTEREXAMPLE, reference_reverse_order()).verdict,
            Verdict::Holds);
  EXPECT_EQ(check_property(PropertyId::THM_REVERSE_ORDER, reference_reverse_order()).verdict, Verdict::Holds);
  for (const auto& c : replay_reference_examples()) EXPECT_TRUE(c.passed) << c.example << ": " << c.assertion;
}

TEST(Catalog, HypothesisGate) {
  Instance inst = Instance::of(Matrix::from_ints(Qi, {{1, 1}, {0, 0}}));
  inst.b = Matrix::from_ints(Qi, {{0, 0}, {1, 0}});
  inst.w = Matrix::identity(Qi, 2);
  ASSERT_NE(inst.a * inst.w * inst.b, inst.b * inst.w * inst.a);
  EXPECT_EQ(check_property(PropertyId::THM_DIFFERENCE_3WAY, inst).verdict, Verdict::Inapplicable);
  // Malformed shapes are rejected rather than thrown.
  Instance bad = Instance::of(Matrix::identity(Qi, 2));
  bad.w = Matrix::identity(Qi, 3);
  EXPECT_EQ(check_property(PropertyId::DEF_WCORE_RELATION, bad).verdict, Verdict::Inapplicable);
}

TEST(Generators, Deterministic) {
  TrialConfig cfg = normalized(TrialConfig{});
  Rng r1 = trial_rng(0, PropertyId::DEF_WCORE_RELATION, 0);
  Rng r2 = trial_rng(0, PropertyId::DEF_WCORE_RELATION, 0);
  const Matrix first = random_matrix(cfg, r1);
  EXPECT_EQ(first, random_matrix(cfg, r2));
  EXPECT_EQ(first.str(), "[[-i,1/2],[1/2,1/2]]");
  Rng r3 = trial_rng(0, PropertyId::DEF_WCORE_RELATION, 1);
  EXPECT_NE(first, random_matrix(cfg, r3));
}

TEST(Generators, PoolEdgeCases) {
  TrialConfig cfg;
  cfg.entry_pool = {Scalar::zero(Qi)};
  cfg = normalized(cfg);
  Rng rng = trial_rng(1, PropertyId::DEF_WCORE_RELATION, 0);
  EXPECT_TRUE(random_matrix(cfg, rng).is_zero());
  cfg.entry_pool = {Scalar::one(Qi)};
  EXPECT_EQ(random_diagonal(cfg, rng), Matrix::identity(Qi, 2));
  EXPECT_EQ(default_entry_pool(Z2).size(), 2u);
  EXPECT_EQ(default_entry_pool(Domain::rationals()).size(), 6u);
}

TEST(Generators, ConfigValidation) {
  TrialConfig cfg;
  cfg.exhaustive = true;
  EXPECT_THROW(normalized(cfg), ConfigError);
  cfg = TrialConfig{};
  cfg.dim = 0;
  EXPECT_THROW(normalized(cfg), ConfigError);
  cfg = TrialConfig{};
  cfg.entry_pool = {Scalar::one(Z2)};
  EXPECT_THROW(normalized(cfg), ConfigError);
}

TEST(Generators, DirectedWCore) {
  for (auto mode : {WMode::Identity, WMode::Unit, WMode::StarOfA, WMode::SelfA, WMode::General}) {
    for (const char* d : {"gaussian_rationals", "rationals", "mod_p:3"}) {
      TrialConfig cfg;
      cfg.domain = Domain::parse(d);
      cfg.dim = 3;
      cfg = normalized(cfg);
      for (std::uint64_t t = 0; t < 20; ++t) {
        Rng rng = trial_rng(9, PropertyId::THM_WCORE_12WAY, t);
        const auto inst = random_wcore_instance(cfg, rng, mode);
        EXPECT_TRUE(is_w_core_invertible(inst.a, inst.w));
        if (mode == WMode::Identity) EXPECT_EQ(inst.w, Matrix::identity(cfg.domain, 3));
        if (mode == WMode::Unit) EXPECT_TRUE(is_unit(inst.w));
        if (mode == WMode::StarOfA) EXPECT_EQ(inst.w, inst.a.star());
        if (mode == WMode::SelfA) EXPECT_EQ(inst.w, inst.a);
      }
    }
  }
}

TEST(Oracle, Enumeration) {
  const auto z2 = enumerate_ring(2, 2);
  EXPECT_EQ(z2.size(), 16u);
  EXPECT_TRUE(z2.front().is_zero());
  EXPECT_EQ(enumerate_ring(3, 2).size(), 81u);
  for (std::size_t k = 0; k < z2.size(); ++k) EXPECT_EQ(ring_index(z2[k]), k);
  EXPECT_THROW(enumerate_ring(3, 3, 1000), OracleInfeasible);
}

TEST(Oracle, BruteForce) {
  const Matrix e = Matrix::from_ints(Z2, {{1, 1}, {0, 0}});
  const auto g = brute_force_inverse(GenInvKind::group(), e);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.front(), e);
  const auto wc = brute_force_inverse(GenInvKind::w_core(Matrix::from_ints(Z2, {{1, 0}, {1, 1}})),
                                      Matrix::zero(Z2, 2));
  ASSERT_EQ(wc.size(), 1u);
  EXPECT_TRUE(wc.front().is_zero());
  const auto inner = brute_force_inverse(GenInvKind::inner(), Matrix::identity(Z2, 2));
  ASSERT_EQ(inner.size(), 1u);
  EXPECT_EQ(inner.front(), Matrix::identity(Z2, 2));
  EXPECT_EQ(brute_force_inverse(GenInvKind::inner(), Matrix::zero(Z2, 2)).size(), 16u);
  EXPECT_THROW(brute_force_inverse(GenInvKind::group(), Matrix::zero(Qi, 2)), DomainError);
}

TEST(Suite, EmptyAndSmall) {
  TrialConfig cfg;
  cfg.trials = 20;
  const auto empty = run_suite(cfg, {});
  EXPECT_TRUE(empty.results.empty());
  EXPECT_TRUE(empty.all_passed());

  const PropertyId ids[] = {PropertyId::THM_WCORE_12WAY, PropertyId::LEM_AW_PRODUCT};
  const auto report = run_suite(cfg, ids);
  ASSERT_EQ(report.results.size(), 2u);
  EXPECT_TRUE(report.all_passed());
  EXPECT_GE(report.find(PropertyId::THM_WCORE_12WAY)->applicable, 2u);
  EXPECT_EQ(report.find(PropertyId::THM_EP_5WAY), nullptr);
}

TEST(Suite, JsonIsStable) {
  TrialConfig cfg;
  cfg.trials = 15;
  cfg.seed = 42;
  const PropertyId ids[] = {PropertyId::COR_CORE_12WAY};
  const std::string a = to_json(run_suite(cfg, ids));
  EXPECT_EQ(a, to_json(run_suite(cfg, ids)));
  const auto doc = nlohmann::json::parse(a);
  EXPECT_EQ(doc["results"][0]["id"], "COR_CORE_12WAY");
  EXPECT_EQ(doc["results"][0]["verdict"], "pass");
  EXPECT_EQ(doc["summary"]["properties"], 1);
  EXPECT_TRUE(doc["results"][0]["counterexample"].is_null());
}

TEST(Suite, ExhaustiveZ2) {
  TrialConfig cfg;
  cfg.domain = Z2;
  cfg.exhaustive = true;
  const PropertyId ids[] = {PropertyId::DEF_WCORE_RELATION, PropertyId::LEM_MARY_CRITERION};
  const auto report = run_suite(cfg, ids);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.find(PropertyId::LEM_MARY_CRITERION)->trials, 16u * 16u);
}

TEST(Suite, BudgetIsCheckedUpFront) {
  TrialConfig cfg;
  cfg.domain = Domain::mod_p(3);
  cfg.exhaustive = true;
  cfg.tuple_budget = 1000;
  const PropertyId ids[] = {PropertyId::THM_PARTIAL_ORDER_AXIOMS};
  EXPECT_THROW(run_suite(cfg, ids), ConfigError);
}

TEST(Suite, FloorFailsStarvedProperty) {
  TrialConfig cfg;
  cfg.trials = 10;
  cfg.min_applicable = 11;
  const PropertyId ids[] = {PropertyId::THM_WCORE_12WAY};
  const auto report = run_suite(cfg, ids);
  EXPECT_FALSE(report.all_passed());
  EXPECT_NE(report.results[0].detail.find("floor"), std::string::npos);
}

}  // namespace
}  // namespace wcore
