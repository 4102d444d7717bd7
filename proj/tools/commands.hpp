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

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "wcore/harness.hpp"

namespace wcore::cli {

struct CommandResult {
  bool ok = true;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> diagnostics;
  std::optional<std::string> timestamp;

  nlohmann::json to_json() const;
  int exit_code() const { return ok ? 0 : 1; }
};

/// A matrix argument: a path to a MatrixDocument file or the JSON text itself.
nlohmann::json load_document(const std::string& source);

struct ComputeArgs {
  std::string kind;
  std::string a;
  std::optional<std::string> aux;
  std::optional<std::string> domain;
  std::string pivot = "first";
};
CommandResult cmd_compute(const ComputeArgs& args);

struct OrderArgs {
  std::string kind;
  std::string a;
  std::string b;
  std::optional<std::string> w;
  std::string mode = "strict";
  std::optional<std::string> domain;
};
CommandResult cmd_order(const OrderArgs& args);

struct VerifyArgs {
  std::vector<std::string> ids;
  bool all = false;
  std::string domain = "gaussian_rationals";
  std::size_t dim = 2;
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::uint64_t min_applicable = 0;
};
CommandResult cmd_verify(const VerifyArgs& args);

CommandResult cmd_examples();

struct EnumerateArgs {
  std::string domain;
  std::size_t dim = 2;
  std::optional<std::string> kind;
  std::optional<std::string> a;
  std::optional<std::string> aux;
  bool list = false;
};
CommandResult cmd_enumerate(const EnumerateArgs& args);

/// UTC, second precision, e.g. 2026-01-31T12:00:00Z.
std::string utc_timestamp();

}  // namespace wcore::cli
