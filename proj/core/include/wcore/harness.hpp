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

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wcore/errors.hpp"
#include "wcore/geninv.hpp"
#include "wcore/orders.hpp"

namespace wcore {

enum class PropertyId {
  DEF_WCORE_RELATION,
  LEM_WCORE_PAR_I,
  LEM_WCORE_PAR_II,
  LEM_WCORE_PAR_III,
  LEM_WCORE_PAR_IV,
  THM_PARTIAL_ORDER_AXIOMS,
  PROP_SYMMETRIC_CHAR,
  PROP_MIXED_PRODUCTS,
  LEM_PROJECTION,
  THM_PROJECTION_6WAY,
  LEM_IDEMPOTENT_E,
  LEM_IDEMPOTENT_F,
  LEM_MARY_CRITERION,
  THM_IDEMPOTENT_11WAY,
  THM_WCORE_12WAY,
  COR_CORE_12WAY,
  PROP_IMPLIES_LEFTSTAR_RIGHTSHARP,
  EX2_CONVERSE_FAILS,
  THM_UNIT_EQUIVALENCE,
  THM_LEFTSTAR_4WAY,
  THM_RIGHTSHARP_3WAY,
  LEM_AW_PRODUCT,
  THM_WCORE_IFF_AW_CORE,
  THM_THREECLASS_CORE,
  THM_THREECLASS_STAR,
  THM_EP_5WAY,
  PROP_IMPLIES_DIAMOND,
  THM_DIFFERENCE_3WAY,
  COR_DIFFERENCE_CORE,
  COR_DIFFERENCE_ACORE,
  THM_REVERSE_ORDER,
  EX_REVERSE_COUNTEREXAMPLE,
};

/// Every property in catalog order.
std::span<const PropertyId> all_properties();

std::string_view property_name(PropertyId id);
std::optional<PropertyId> parse_property(std::string_view name);

/// One-line statement of the result a property executes.
std::string_view property_statement(PropertyId id);

/// Which instance slots a checker reads; unused slots are ignored.
struct Signature {
  bool uses_b = false;
  bool uses_c = false;
  bool uses_w = false;
  bool unit_w = false;
};

Signature signature(PropertyId id);

struct Instance {
  Matrix a;
  Matrix b;
  Matrix c;
  Matrix w;

  /// Zero b and c, identity w.
  static Instance of(Matrix a);
};

enum class Verdict { Holds, Fails, Inapplicable };

std::string_view verdict_name(Verdict verdict);

struct PropertyOutcome {
  PropertyId id;
  Verdict verdict = Verdict::Inapplicable;
  /// Unmet hypothesis, or the clause that failed.
  std::string detail;
  std::optional<Instance> counterexample;
};

/// Evaluates the hypothesis, then every clause of the result. Never throws on
/// mathematical outcomes; internal errors are reported as Fails.
PropertyOutcome check_property(PropertyId id, const Instance& instance);

// Instance generation

struct TrialConfig {
  Domain domain = Domain::gaussian_rationals();
  std::size_t dim = 2;
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  std::vector<Scalar> entry_pool;
  bool exhaustive = false;
  /// Applicable trials required per property; 0 picks the default floor.
  std::uint64_t min_applicable = 0;
  /// Largest instance-tuple count an exhaustive run may enumerate.
  std::uint64_t tuple_budget = 1'000'000;
};

/// {0, ±1, ±2, 1/2, ±i} restricted to what the domain can represent, deduplicated.
std::vector<Scalar> default_entry_pool(const Domain& domain);

/// Fills in defaults and validates the configuration. Throws ConfigError.
TrialConfig normalized(TrialConfig cfg);

using Rng = std::mt19937_64;

/// Independent stream for one (seed, property, trial) triple.
Rng trial_rng(std::uint64_t seed, PropertyId id, std::uint64_t trial);

Matrix random_matrix(const TrialConfig& cfg, Rng& rng);
/// Pool entries on the diagonal, zero elsewhere.
Matrix random_diagonal(const TrialConfig& cfg, Rng& rng);
Matrix random_unit(const TrialConfig& cfg, Rng& rng);

enum class WMode { Identity, Unit, StarOfA, SelfA, General };

struct WCoreInstance {
  Matrix a;
  Matrix b;
  Matrix w;
};

/// a ∈ R_w^⊕ is guaranteed. b = a + n with n chosen so that the relaxed order
/// holds about half of the time. Falls back to a = 0 if the directed
/// construction keeps failing (possible over Z_p).
WCoreInstance random_wcore_instance(const TrialConfig& cfg, Rng& rng, WMode mode);

/// Directed instance for a property; slots outside the signature are neutral.
Instance random_instance(PropertyId id, const TrialConfig& cfg, Rng& rng);

// Finite rings

class OracleInfeasible : public Error {
 public:
  using Error::Error;
};

/// All p^(n^2) matrices of M_n(Z_p) in lexicographic entry order.
std::vector<Matrix> enumerate_ring(std::uint32_t p, std::size_t n, std::uint64_t budget = 1'000'000);

/// Position of a Z_p matrix in enumerate_ring order.
std::uint64_t ring_index(const Matrix& m);

/// Every x in M_n(Z_p) satisfying the defining equations of the kind, by
/// exhaustive search.
std::vector<Matrix> brute_force_inverse(const GenInvKind& kind, const Matrix& a,
                                        std::uint64_t budget = 1'000'000);

// Suites

struct PropertySummary {
  PropertyId id;
  bool passed = true;
  std::uint64_t trials = 0;
  std::uint64_t applicable = 0;
  std::uint64_t inapplicable = 0;
  std::uint64_t floor = 0;
  std::string detail;
  std::optional<Instance> counterexample;
};

struct SuiteReport {
  TrialConfig config;
  std::vector<PropertySummary> results;

  bool all_passed() const;
  const PropertySummary* find(PropertyId id) const;
};

/// Random stream for infinite domains, exhaustive enumeration when
/// cfg.exhaustive is set (Z_p only). Each property stops at its first failure.
SuiteReport run_suite(const TrialConfig& cfg, std::span<const PropertyId> ids);

/// Stable JSON rendering; identical reports give identical bytes.
std::string to_json(const SuiteReport& report, int indent = 2);

// Reference instances

/// Example with a ⊕≤_w b although the core order fails.
Instance reference_wcore_not_core();
/// Example where a *≤ b and wa ≤_# wb hold but a ⊕≤_w b does not.
Instance reference_converse_fails();
/// Example where (ab)_w^⊕ differs from b_w^⊕ a_w^⊕.
Instance reference_reverse_order();

struct ReferenceCheck {
  std::string example;
  std::string assertion;
  std::string expected;
  std::string actual;
  bool passed;
};

/// Replays the three reference instances and compares every displayed value exactly.
std::vector<ReferenceCheck> replay_reference_examples();

}  // namespace wcore
