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

#include <nlohmann/json.hpp>

#include <string>

#include "harness_internal.hpp"
#include "wcore/harness.hpp"
#include "wcore/io.hpp"

namespace wcore {

namespace {

bool is_example_id(PropertyId id) {
  return id == PropertyId::EX2_CONVERSE_FAILS || id == PropertyId::EX_REVERSE_COUNTEREXAMPLE;
}

Matrix convert(const Matrix& m, const Domain& d) {
  Matrix out(d, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& v = m(i, j);
      if (d.kind() == DomainKind::GaussianRationals) {
        out(i, j) = Scalar::from_gaussian(d, v.real(), v.imag());
      } else {
        if (v.imag() != 0) throw DomainError("reference entry " + v.str() + " has no image in " + d.name());
        out(i, j) = Scalar::from_rational(d, v.real());
      }
    }
  }
  return out;
}

Instance convert(const Instance& in, const Domain& d) {
  return Instance{convert(in.a, d), convert(in.b, d), convert(in.c, d), convert(in.w, d)};
}

// Records one outcome; returns false once the property has failed.
bool tally(PropertySummary& s, const PropertyOutcome& o) {
  ++s.trials;
  switch (o.verdict) {
    case Verdict::Holds: ++s.applicable; return true;
    case Verdict::Inapplicable: ++s.inapplicable; return true;
    case Verdict::Fails:
      ++s.applicable;
      s.passed = false;
      s.detail = o.detail;
      s.counterexample = o.counterexample;
      return false;
  }
  return true;
}

std::uint64_t tuple_count(std::uint64_t ring, std::size_t slots, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < slots; ++k) {
    if (total > budget / ring) return budget + 1;
    total *= ring;
  }
  return total;
}

void run_exhaustive(const TrialConfig& cfg, PropertyId id, PropertySummary& s) {
  const Signature sig = signature(id);
  const std::vector<Matrix> ring = enumerate_ring(cfg.domain.modulus(), cfg.dim, cfg.tuple_budget);
  std::vector<Matrix> units;
  const std::vector<Matrix>* w_range = &ring;
  if (sig.unit_w) {
    for (const Matrix& m : ring) {
      if (is_unit(m)) units.push_back(m);
    }
    w_range = &units;
  }
  const Matrix zero = Matrix::zero(cfg.domain, cfg.dim);
  const Matrix id_m = Matrix::identity(cfg.domain, cfg.dim);
  const std::vector<Matrix> zero_only{zero};
  const std::vector<Matrix> id_only{id_m};
  const auto& bs = sig.uses_b ? ring : zero_only;
  const auto& cs = sig.uses_c ? ring : zero_only;
  const auto& ws = sig.uses_w ? *w_range : id_only;

  // Lexicographic in (a, b, c, w), so the first failure is the least one.
  for (const Matrix& a : ring) {
    for (const Matrix& b : bs) {
      for (const Matrix& c : cs) {
        for (const Matrix& w : ws) {
          if (!tally(s, check_property(id, Instance{a, b, c, w}))) return;
        }
      }
    }
  }
}

void require_budget(const TrialConfig& cfg, std::span<const PropertyId> ids) {
  std::uint64_t ring = 1;
  for (std::size_t k = 0; k < cfg.dim * cfg.dim; ++k) {
    ring *= cfg.domain.modulus();
    if (ring > cfg.tuple_budget) throw ConfigError("exhaustive ring enumeration exceeds the tuple budget");
  }
  for (PropertyId id : ids) {
    const Signature sig = signature(id);
    const std::size_t slots = 1 + sig.uses_b + sig.uses_c + sig.uses_w;
    if (tuple_count(ring, slots, cfg.tuple_budget) > cfg.tuple_budget) {
      throw ConfigError(std::string(property_name(id)) + ": exhaustive enumeration of " + std::to_string(slots) +
                        "-tuples exceeds the tuple budget of " + std::to_string(cfg.tuple_budget));
    }
  }
}

void run_random(const TrialConfig& cfg, PropertyId id, PropertySummary& s) {
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg.seed, id, t);
    const Instance in = random_instance(id, cfg, rng);
    if (!tally(s, check_property(id, in))) return;
  }
}

nlohmann::json instance_json(const Instance& in, PropertyId id) {
  const Signature sig = signature(id);
  nlohmann::json out = {{"a", matrix_to_json(in.a)}};
  if (sig.uses_b) out["b"] = matrix_to_json(in.b);
  if (sig.uses_c) out["c"] = matrix_to_json(in.c);
  if (sig.uses_w) out["w"] = matrix_to_json(in.w);
  return out;
}

}  // namespace

bool SuiteReport::all_passed() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

const PropertySummary* SuiteReport::find(PropertyId id) const {
  for (const auto& r : results) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

SuiteReport run_suite(const TrialConfig& config, std::span<const PropertyId> ids) {
  SuiteReport report{normalized(config), {}};
  const TrialConfig& cfg = report.config;
  if (cfg.exhaustive) require_budget(cfg, ids);
  for (PropertyId id : ids) {
    PropertySummary s{};
    s.id = id;
    const bool example = is_example_id(id);
    if (cfg.min_applicable > 0) {
      s.floor = cfg.min_applicable;
    } else if (example) {
      // Counterexample patterns are rare in the stream; the pinned instance carries the check.
      s.floor = 0;
    } else {
      s.floor = cfg.exhaustive ? 1 : std::max<std::uint64_t>(1, cfg.trials / 10);
    }

    bool ok = true;
    if (example && !cfg.domain.is_finite()) {
      const Instance pinned = id == PropertyId::EX2_CONVERSE_FAILS ? reference_converse_fails() : reference_reverse_order();
      const PropertyOutcome o = check_property(id, convert(pinned, cfg.domain));
      ok = tally(s, o);
      if (ok && o.verdict != Verdict::Holds) {
        s.passed = false;
        s.detail = "reference instance not reproduced: " + o.detail;
        s.counterexample = convert(pinned, cfg.domain);
        ok = false;
      }
    }
    if (ok) {
      if (cfg.exhaustive) {
        run_exhaustive(cfg, id, s);
      } else {
        run_random(cfg, id, s);
      }
    }
    if (s.passed && s.applicable < s.floor) {
      s.passed = false;
      s.detail = "only " + std::to_string(s.applicable) + " applicable instances, floor is " + std::to_string(s.floor);
    }
    report.results.push_back(std::move(s));
  }
  return report;
}

std::string to_json(const SuiteReport& report, int indent) {
  const TrialConfig& cfg = report.config;
  nlohmann::json pool = nlohmann::json::array();
  for (const Scalar& s : cfg.entry_pool) pool.push_back(s.str());
  nlohmann::json results = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& r : report.results) {
    failed += r.passed ? 0 : 1;
    results.push_back({
        {"id", property_name(r.id)},
        {"verdict", r.passed ? "pass" : "fail"},
        {"trials", r.trials},
        {"applicable", r.applicable},
        {"inapplicable", r.inapplicable},
        {"min_applicable", r.floor},
        {"detail", r.detail},
        {"counterexample", r.counterexample ? instance_json(*r.counterexample, r.id) : nlohmann::json(nullptr)},
    });
  }
  nlohmann::json doc = {
      {"config",
       {{"domain", cfg.domain.name()},
        {"dim", cfg.dim},
        {"trials", cfg.trials},
        {"seed", cfg.seed},
        {"exhaustive", cfg.exhaustive},
        {"entry_pool", pool}}},
      {"results", results},
      {"summary", {{"properties", report.results.size()}, {"failed", failed}, {"passed", failed == 0}}},
  };
  return doc.dump(indent);
}

}  // namespace wcore
