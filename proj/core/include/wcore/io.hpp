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

#include "wcore/errors.hpp"
#include "wcore/matrix.hpp"

namespace wcore {

/// MatrixDocument: {"domain": "...", "rows": r, "cols": c, "entries": [["1/2", "0"], ...]}.
nlohmann::json matrix_to_json(const Matrix& m);

/// Throws ParseError on malformed documents, ShapeError when entries disagree
/// with rows/cols, DomainError when a scalar does not live in the domain.
/// A document without "domain" uses fallback.
Matrix matrix_from_json(const nlohmann::json& doc, const std::optional<Domain>& fallback = std::nullopt);

}  // namespace wcore
