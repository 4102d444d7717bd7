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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace wcore {

enum class DomainKind : std::uint8_t { Rationals, GaussianRationals, ModP };

enum class Involution : std::uint8_t { Identity, Conjugation };

/// Scalar field together with its involution. Matrices over the domain form
/// a *-ring whose star is the (conjugate) transpose induced by this involution.
class Domain {
 public:
  static Domain rationals();
  /// Gaussian rationals Q(i); conjugation by default, identity is allowed.
  static Domain gaussian_rationals(Involution involution = Involution::Conjugation);
  /// Prime field Z_p with identity involution. Throws DomainError if p is not prime.
  static Domain mod_p(std::uint32_t p);

  /// Accepts "rationals", "gaussian_rationals", "gaussian_rationals:identity"
  /// and "mod_p:<p>".
  static Domain parse(std::string_view text);

  DomainKind kind() const { return kind_; }
  Involution involution() const { return involution_; }
  /// Prime modulus; 0 for the characteristic-zero domains.
  std::uint32_t modulus() const { return modulus_; }
  bool is_finite() const { return kind_ == DomainKind::ModP; }

  std::string name() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(DomainKind kind, Involution involution, std::uint32_t modulus)
      : kind_(kind), involution_(involution), modulus_(modulus) {}

  DomainKind kind_;
  Involution involution_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint32_t n);

/// Exact element of a Domain. Rationals are kept in canonical form (lowest
/// terms, positive denominator) so equality is structural.
class Scalar {
 public:
  explicit Scalar(Domain domain);  // zero

  static Scalar zero(Domain domain) { return Scalar(domain); }
  static Scalar one(Domain domain) { return from_int(domain, 1); }
  static Scalar from_int(Domain domain, long value);
  /// Maps a rational into the domain; for Z_p the denominator must be a unit.
  static Scalar from_rational(Domain domain, const mpq_class& value);
  /// Requires a Gaussian domain.
  static Scalar from_gaussian(Domain domain, const mpq_class& re, const mpq_class& im);

  const Domain& domain() const { return domain_; }

  bool is_zero() const;
  bool is_one() const;

  /// Real part (rationals, Gaussian); residue as an integer for Z_p.
  mpq_class real() const;
  /// Imaginary part; zero outside the Gaussian domain.
  mpq_class imag() const;
  /// Z_p residue in [0, p). Throws DomainError for other domains.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  /// Throws NotInvertible when rhs is zero.
  friend Scalar operator/(const Scalar& lhs, const Scalar& rhs);

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Canonical text: "3/4", "-2", "1/2-3i", "i" ... Accepted back by parse_scalar.
  std::string str() const;

 private:
  struct Gaussian {
    mpq_class re;
    mpq_class im;
  };
  using Value = std::variant<std::uint32_t, mpq_class, Gaussian>;

  Scalar(Domain domain, Value value) : domain_(domain), value_(std::move(value)) {}
  void require_same_domain(const Scalar& other) const;

  Domain domain_;
  Value value_;
};

/// Scalar involution: identity, or complex conjugation on Q(i).
Scalar conjugate(const Scalar& s);

/// Multiplicative inverse. Throws NotInvertible for zero.
Scalar invert(const Scalar& s);

/// Parses `int[/int]` (rationals, Z_p) or `rational[(+|-)rational i]`
/// (Gaussian; a bare coefficient before `i` may be omitted). Throws
/// ParseError on malformed text and DomainError on text that is valid
/// but meaningless in the domain.
Scalar parse_scalar(std::string_view text, const Domain& domain);

}  // namespace wcore
