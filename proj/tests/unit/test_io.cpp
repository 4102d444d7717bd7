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

#include "wcore/io.hpp"

namespace wcore {
namespace {

using nlohmann::json;

TEST(Io, RoundTrip) {
  const Domain qi = Domain::gaussian_rationals();
  Matrix a = Matrix::from_ints(qi, {{1, 0}, {2, -3}});
  a(0, 1) = parse_scalar("1/2-i", qi);
  const json doc = matrix_to_json(a);
  EXPECT_EQ(doc["domain"], "gaussian_rationals");
  EXPECT_EQ(doc["entries"][0][1], "1/2-i");
  EXPECT_EQ(matrix_from_json(doc), a);
}

TEST(Io, IntegerEntriesAndFallback) {
  const json doc = json::parse(R"({"rows": 2, "cols": 2, "entries": [[1, 1], [0, 0]]})");
  EXPECT_EQ(matrix_from_json(doc, Domain::rationals()), Matrix::from_ints(Domain::rationals(), {{1, 1}, {0, 0}}));
  EXPECT_THROW(matrix_from_json(doc), ParseError);
}

TEST(Io, Errors) {
  const Domain q = Domain::rationals();
  EXPECT_THROW(matrix_from_json(json::array(), q), ParseError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"rows": 2, "cols": 2, "entries": [[1, 1]]})"), q), ShapeError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"rows": 1, "cols": 2, "entries": [[1]]})"), q), ShapeError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"rows": 1, "cols": 1, "entries": [["i"]]})"), q), DomainError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"rows": 1, "cols": 1, "entries": [["x"]]})"), q), ParseError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"rows": 1, "cols": 1})"), q), ParseError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"domain": "mod_p:4", "rows": 1, "cols": 1, "entries": [["1"]]})")),
               DomainError);
}

}  // namespace
}  // namespace wcore
