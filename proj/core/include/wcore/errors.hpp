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

#include <stdexcept>
#include <string>

namespace wcore {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scalar or matrix text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Value is well-formed but not valid in the requested domain, or two
/// operands live in different domains.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Division by zero or inversion of a singular matrix.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Operand shapes do not match the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Bad harness or CLI configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace wcore
