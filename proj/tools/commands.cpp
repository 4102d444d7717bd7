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

#include "commands.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "wcore/io.hpp"

namespace wcore::cli {

namespace {

using nlohmann::json;

CommandResult error(std::string tag, std::string message, json payload = json::object()) {
  CommandResult r;
  r.ok = false;
  payload["error"] = tag;
  r.payload = std::move(payload);
  r.diagnostics.push_back(tag + ": " + message);
  return r;
}

std::optional<Domain> parse_domain(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return Domain::parse(*text);
}

json certificate_json(const Certificate& cert) {
  json out = json::array();
  for (const auto& e : cert) out.push_back({{"equation", e.equation}, {"holds", e.holds}});
  return out;
}

json conditions_json(const ConditionVector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back({{"id", c.id}, {"value", c.value}});
  return out;
}

json report_json(const OrderReport& r) {
  json witnesses = json::object();
  for (const auto& [name, m] : r.witnesses) witnesses[name] = matrix_to_json(m);
  return {
      {"kind", order_name(r.kind)},
      {"holds", r.holds},
      {"mode", r.mode == OrderMode::Strict ? "strict" : "relaxed"},
      {"failed_condition", r.failed_condition ? json(*r.failed_condition) : json(nullptr)},
      {"witnesses", witnesses},
  };
}

// Runs a command body and maps library exceptions onto error results.
template <typename Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const NotGenInvertible& e) {
    CommandResult r = error(std::string(e.tag()), "", {{"failure", failure_name(e.failure())}});
    r.diagnostics.back() = e.what();
    return r;
  } catch (const PreconditionUnmet& e) {
    return error("PreconditionUnmet", e.what());
  } catch (const ParseError& e) {
    return error("ParseError", e.what());
  } catch (const DomainError& e) {
    return error("DomainError", e.what());
  } catch (const ShapeError& e) {
    return error("ShapeError", e.what());
  } catch (const ConfigError& e) {
    return error("ConfigError", e.what());
  } catch (const OracleInfeasible& e) {
    return error("OracleInfeasible", e.what());
  } catch (const json::exception& e) {
    return error("ParseError", e.what());
  } catch (const Error& e) {
    return error("Error", e.what());
  }
}

}  // namespace

json CommandResult::to_json() const {
  json out = {{"status", ok ? "ok" : "error"}, {"payload", payload}, {"diagnostics", diagnostics}};
  if (timestamp) out["timestamp"] = *timestamp;
  return out;
}

json load_document(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return json::parse(source);
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open matrix file '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return json::parse(buf.str());
}

CommandResult cmd_compute(const ComputeArgs& args) {
  return guarded([&] {
    const auto kind = parse_kind(args.kind);
    if (!kind) return error("UnknownKind", "'" + args.kind + "' is not an inverse kind");
    const auto fallback = parse_domain(args.domain);
    const Matrix a = matrix_from_json(load_document(args.a), fallback);
    GenInvKind gk{*kind, std::nullopt};
    if (*kind == InverseKind::Along || *kind == InverseKind::WCore) {
      if (!args.aux) return error("ConfigError", std::string(kind_name(*kind)) + " needs an auxiliary matrix");
      gk.aux = matrix_from_json(load_document(*args.aux), a.domain());
    }
    PivotStrategy strategy = PivotStrategy::FirstNonzero;
    if (args.pivot == "last") {
      strategy = PivotStrategy::LastNonzero;
    } else if (args.pivot != "first") {
      return error("ConfigError", "pivot must be 'first' or 'last'");
    }
    const GenInvResult r = compute(gk, a, strategy);
    CommandResult out;
    out.payload = {{"kind", kind_name(*kind)},
                   {"value", matrix_to_json(r.value)},
                   {"certificate", certificate_json(r.certificate)}};
    return out;
  });
}

CommandResult cmd_order(const OrderArgs& args) {
  return guarded([&] {
    const auto kind = parse_order(args.kind);
    if (!kind) return error("UnknownOrder", "'" + args.kind + "' is not an order");
    OrderMode mode = OrderMode::Strict;
    if (args.mode == "relaxed") {
      mode = OrderMode::Relaxed;
    } else if (args.mode != "strict") {
      return error("ConfigError", "mode must be 'strict' or 'relaxed'");
    }
    const auto fallback = parse_domain(args.domain);
    const Matrix a = matrix_from_json(load_document(args.a), fallback);
    const Matrix b = matrix_from_json(load_document(args.b), a.domain());
    std::optional<Matrix> w;
    if (args.w) w = matrix_from_json(load_document(*args.w), a.domain());

    const OrderReport r = order_holds(*kind, a, b, w, mode);
    CommandResult out;
    out.payload = report_json(r);
    if (*kind == OrderKind::WCore && w && is_w_core_invertible(a, *w)) {
      out.payload["characterizations"] = conditions_json(w_core_characterizations(a, b, *w));
    } else if (*kind == OrderKind::Core && try_core_inverse(a)) {
      out.payload["characterizations"] = conditions_json(core_characterizations(a, b));
    }
    return out;
  });
}

CommandResult cmd_verify(const VerifyArgs& args) {
  return guarded([&] {
    std::vector<PropertyId> ids;
    if (args.all) {
      ids.assign(all_properties().begin(), all_properties().end());
    } else {
      for (const auto& name : args.ids) {
        auto id = parse_property(name);
        if (!id) return error("UnknownProperty", "'" + name + "' is not a property id");
        ids.push_back(*id);
      }
    }
    if (ids.empty()) return error("ConfigError", "select properties with --id or --all");
    TrialConfig cfg;
    cfg.domain = Domain::parse(args.domain);
    cfg.dim = args.dim;
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.exhaustive = args.exhaustive;
    cfg.min_applicable = args.min_applicable;
    const SuiteReport report = run_suite(cfg, ids);
    CommandResult out;
    out.payload = json::parse(to_json(report));
    for (const auto& r : report.results) {
      if (!r.passed) out.diagnostics.push_back(std::string(property_name(r.id)) + ": " + r.detail);
    }
    out.ok = report.all_passed();
    return out;
  });
}

CommandResult cmd_examples() {
  return guarded([&] {
    CommandResult out;
    json checks = json::array();
    for (const auto& c : replay_reference_examples()) {
      checks.push_back({{"example", c.example},
                        {"assertion", c.assertion},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"passed", c.passed}});
      if (!c.passed) {
        out.ok = false;
        out.diagnostics.push_back(c.example + ": " + c.assertion + " expected " + c.expected + ", got " + c.actual);
      }
    }
    out.payload = {{"checks", checks}};
    return out;
  });
}

CommandResult cmd_enumerate(const EnumerateArgs& args) {
  return guarded([&] {
    const Domain d = Domain::parse(args.domain);
    if (!d.is_finite()) return error("ConfigError", "enumerate needs a mod_p domain");
    CommandResult out;
    if (!args.kind) {
      const auto ring = enumerate_ring(d.modulus(), args.dim);
      out.payload = {{"domain", d.name()}, {"dim", args.dim}, {"count", ring.size()}};
      if (args.list) {
        json all = json::array();
        for (const auto& m : ring) all.push_back(matrix_to_json(m));
        out.payload["matrices"] = all;
      }
      return out;
    }
    const auto kind = parse_kind(*args.kind);
    if (!kind) return error("UnknownKind", "'" + *args.kind + "' is not an inverse kind");
    if (!args.a) return error("ConfigError", "--a is required with --kind");
    const Matrix a = matrix_from_json(load_document(*args.a), d);
    GenInvKind gk{*kind, std::nullopt};
    if (args.aux) gk.aux = matrix_from_json(load_document(*args.aux), d);
    if ((*kind == InverseKind::Along || *kind == InverseKind::WCore) && !gk.aux) {
      return error("ConfigError", std::string(kind_name(*kind)) + " needs an auxiliary matrix");
    }
    const auto sols = brute_force_inverse(gk, a);
    json all = json::array();
    for (const auto& m : sols) all.push_back(matrix_to_json(m));
    out.payload = {{"kind", kind_name(*kind)}, {"count", sols.size()}, {"solutions", all}};
    return out;
  });
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace wcore::cli
