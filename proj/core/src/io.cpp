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

#include "wcore/io.hpp"

#include <string>
#include <vector>

#include "wcore/errors.hpp"

namespace wcore {

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return {{"domain", m.domain().name()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const nlohmann::json& doc, const std::optional<Domain>& fallback) {
  if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
  std::optional<Domain> domain = fallback;
  if (auto it = doc.find("domain"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("\"domain\" must be a string");
    domain = Domain::parse(it->get<std::string>());
  }
  if (!domain) throw ParseError("matrix document has no \"domain\"");

  auto entries = doc.find("entries");
  if (entries == doc.end() || !entries->is_array()) throw ParseError("\"entries\" must be an array of rows");

  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : *entries) {
    if (!row.is_array()) throw ParseError("each entry row must be an array");
    auto& out = rows.emplace_back();
    for (const auto& cell : row) {
      if (cell.is_string()) {
        out.push_back(parse_scalar(cell.get<std::string>(), *domain));
      } else if (cell.is_number_integer()) {
        out.push_back(Scalar::from_int(*domain, cell.get<long>()));
      } else {
        throw ParseError("matrix entries must be strings or integers");
      }
    }
  }

  auto dim = [&](const char* key, std::size_t actual) {
    auto it = doc.find(key);
    if (it == doc.end()) return actual;
    if (!it->is_number_unsigned()) throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
    return it->get<std::size_t>();
  };
  const std::size_t r = dim("rows", rows.size());
  const std::size_t c = dim("cols", rows.empty() ? 0 : rows.front().size());
  if (rows.size() != r) throw ShapeError("entries have " + std::to_string(rows.size()) + " rows, expected " + std::to_string(r));
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("entry row has " + std::to_string(row.size()) + " columns, expected " + std::to_string(c));
  }
  if (r == 0 || c == 0) return Matrix(*domain, r, c);
  return Matrix::from_rows(*domain, rows);
}

}  // namespace wcore
