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

#include "wcore/scalar.hpp"

#include <cctype>
#include <charconv>
#include <utility>

#include "wcore/errors.hpp"

namespace wcore {

namespace {

std::uint32_t mod_inverse(std::uint32_t value, std::uint32_t p) {
  // Fermat: value^(p-2) mod p.
  std::uint64_t result = 1;
  std::uint64_t base = value % p;
  std::uint32_t exponent = p - 2;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base % p;
    base = base * base % p;
    exponent >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mod(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

bool is_integer_text(std::string_view text, bool allow_sign) {
  if (allow_sign && !text.empty() && (text.front() == '+' || text.front() == '-')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view text) {
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

// rational := int[/int]; the denominator carries no sign.
mpq_class parse_rational(std::string_view text, std::string_view whole) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num, true)) throw ParseError("malformed scalar '" + std::string(whole) + "'");
  if (slash == std::string_view::npos) return mpq_class(to_mpz(num));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_text(den, false)) throw ParseError("malformed scalar '" + std::string(whole) + "'");
  mpz_class d = to_mpz(den);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(whole) + "'");
  mpq_class q(to_mpz(num), d);
  q.canonicalize();
  return q;
}

void append_rational(std::string& out, const mpq_class& q) { out += q.get_str(); }

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Domain Domain::rationals() { return {DomainKind::Rationals, Involution::Identity, 0}; }

Domain Domain::gaussian_rationals(Involution involution) {
  return {DomainKind::GaussianRationals, involution, 0};
}

Domain Domain::mod_p(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  return {DomainKind::ModP, Involution::Identity, p};
}

Domain Domain::parse(std::string_view text) {
  text = trim(text);
  if (text == "rationals") return rationals();
  if (text == "gaussian_rationals") return gaussian_rationals();
  if (text == "gaussian_rationals:identity") return gaussian_rationals(Involution::Identity);
  constexpr std::string_view prefix = "mod_p:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view digits = text.substr(prefix.size());
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("malformed modulus in domain '" + std::string(text) + "'");
    }
    return mod_p(p);
  }
  throw ParseError("unknown domain '" + std::string(text) + "'");
}

std::string Domain::name() const {
  switch (kind_) {
    case DomainKind::Rationals:
      return "rationals";
    case DomainKind::GaussianRationals:
      return involution_ == Involution::Conjugation ? "gaussian_rationals" : "gaussian_rationals:identity";
    case DomainKind::ModP:
      return "mod_p:" + std::to_string(modulus_);
  }
  return {};
}

Scalar::Scalar(Domain domain) : domain_(domain), value_(std::uint32_t{0}) {
  switch (domain.kind()) {
    case DomainKind::Rationals:
      value_ = mpq_class(0);
      break;
    case DomainKind::GaussianRationals:
      value_ = Gaussian{mpq_class(0), mpq_class(0)};
      break;
    case DomainKind::ModP:
      break;
  }
}

Scalar Scalar::from_int(Domain domain, long value) { return from_rational(domain, mpq_class(value)); }

Scalar Scalar::from_rational(Domain domain, const mpq_class& raw) {
  mpq_class value = raw;
  value.canonicalize();
  switch (domain.kind()) {
    case DomainKind::Rationals:
      return {domain, value};
    case DomainKind::GaussianRationals:
      return {domain, Gaussian{value, mpq_class(0)}};
    case DomainKind::ModP: {
      const std::uint32_t p = domain.modulus();
      std::uint32_t den = reduce_mod(value.get_den(), p);
      if (den == 0) throw DomainError("denominator " + value.get_den().get_str() + " vanishes mod " + std::to_string(p));
      std::uint64_t num = reduce_mod(value.get_num(), p);
      return {domain, static_cast<std::uint32_t>(num * mod_inverse(den, p) % p)};
    }
  }
  throw DomainError("unsupported domain");
}

Scalar Scalar::from_gaussian(Domain domain, const mpq_class& re, const mpq_class& im) {
  if (domain.kind() != DomainKind::GaussianRationals) {
    if (im != 0) throw DomainError("imaginary part in domain " + domain.name());
    return from_rational(domain, re);
  }
  Gaussian g{re, im};
  g.re.canonicalize();
  g.im.canonicalize();
  return {domain, std::move(g)};
}

bool Scalar::is_zero() const {
  switch (domain_.kind()) {
    case DomainKind::Rationals:
      return std::get<mpq_class>(value_) == 0;
    case DomainKind::GaussianRationals: {
      const auto& g = std::get<Gaussian>(value_);
      return g.re == 0 && g.im == 0;
    }
    case DomainKind::ModP:
      return std::get<std::uint32_t>(value_) == 0;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (domain_.kind()) {
    case DomainKind::Rationals:
      return std::get<mpq_class>(value_) == 1;
    case DomainKind::GaussianRationals: {
      const auto& g = std::get<Gaussian>(value_);
      return g.re == 1 && g.im == 0;
    }
    case DomainKind::ModP:
      return std::get<std::uint32_t>(value_) == 1;
  }
  return false;
}

mpq_class Scalar::real() const {
  switch (domain_.kind()) {
    case DomainKind::Rationals:
      return std::get<mpq_class>(value_);
    case DomainKind::GaussianRationals:
      return std::get<Gaussian>(value_).re;
    case DomainKind::ModP:
      return mpq_class(std::get<std::uint32_t>(value_));
  }
  return {};
}

mpq_class Scalar::imag() const {
  if (domain_.kind() == DomainKind::GaussianRationals) return std::get<Gaussian>(value_).im;
  return mpq_class(0);
}

std::uint32_t Scalar::residue() const {
  if (domain_.kind() != DomainKind::ModP) throw DomainError("residue() outside Z_p");
  return std::get<std::uint32_t>(value_);
}

void Scalar::require_same_domain(const Scalar& other) const {
  if (!(domain_ == other.domain_)) {
    throw DomainError("mixed domains: " + domain_.name() + " and " + other.domain_.name());
  }
}

Scalar Scalar::operator-() const {
  switch (domain_.kind()) {
    case DomainKind::Rationals:
      return {domain_, mpq_class(-std::get<mpq_class>(value_))};
    case DomainKind::GaussianRationals: {
      const auto& g = std::get<Gaussian>(value_);
      return {domain_, Gaussian{-g.re, -g.im}};
    }
    case DomainKind::ModP: {
      std::uint32_t r = std::get<std::uint32_t>(value_);
      return {domain_, r == 0 ? 0U : domain_.modulus() - r};
    }
  }
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_domain(rhs);
  switch (domain_.kind()) {
    case DomainKind::Rationals:
      std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
      break;
    case DomainKind::GaussianRationals: {
      auto& g = std::get<Gaussian>(value_);
      const auto& h = std::get<Gaussian>(rhs.value_);
      g.re += h.re;
      g.im += h.im;
      break;
    }
    case DomainKind::ModP: {
      auto& r = std::get<std::uint32_t>(value_);
      r = static_cast<std::uint32_t>((std::uint64_t{r} + std::get<std::uint32_t>(rhs.value_)) % domain_.modulus());
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_domain(rhs);
  switch (domain_.kind()) {
    case DomainKind::Rationals:
      std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
      break;
    case DomainKind::GaussianRationals: {
      auto& g = std::get<Gaussian>(value_);
      const auto& h = std::get<Gaussian>(rhs.value_);
      mpq_class re = g.re * h.re - g.im * h.im;
      mpq_class im = g.re * h.im + g.im * h.re;
      g.re = std::move(re);
      g.im = std::move(im);
      break;
    }
    case DomainKind::ModP: {
      auto& r = std::get<std::uint32_t>(value_);
      r = static_cast<std::uint32_t>(std::uint64_t{r} * std::get<std::uint32_t>(rhs.value_) % domain_.modulus());
      break;
    }
  }
  return *this;
}

Scalar operator/(const Scalar& lhs, const Scalar& rhs) { return lhs * invert(rhs); }

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (!(lhs.domain_ == rhs.domain_)) return false;
  switch (lhs.domain_.kind()) {
    case DomainKind::Rationals:
      return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
    case DomainKind::GaussianRationals: {
      const auto& g = std::get<Scalar::Gaussian>(lhs.value_);
      const auto& h = std::get<Scalar::Gaussian>(rhs.value_);
      return g.re == h.re && g.im == h.im;
    }
    case DomainKind::ModP:
      return std::get<std::uint32_t>(lhs.value_) == std::get<std::uint32_t>(rhs.value_);
  }
  return false;
}

std::string Scalar::str() const {
  switch (domain_.kind()) {
    case DomainKind::Rationals:
      return std::get<mpq_class>(value_).get_str();
    case DomainKind::ModP:
      return std::to_string(std::get<std::uint32_t>(value_));
    case DomainKind::GaussianRationals: {
      const auto& g = std::get<Gaussian>(value_);
      if (g.im == 0) return g.re.get_str();
      std::string out;
      if (g.re != 0) append_rational(out, g.re);
      mpq_class magnitude = abs(g.im);
      if (g.im < 0) {
        out += '-';
      } else if (!out.empty()) {
        out += '+';
      }
      if (magnitude != 1) append_rational(out, magnitude);
      out += 'i';
      return out;
    }
  }
  return {};
}

Scalar conjugate(const Scalar& s) {
  if (s.domain().involution() == Involution::Identity) return s;
  return Scalar::from_gaussian(s.domain(), s.real(), mpq_class(-s.imag()));
}

Scalar invert(const Scalar& s) {
  if (s.is_zero()) throw NotInvertible("zero has no multiplicative inverse");
  const Domain& d = s.domain();
  switch (d.kind()) {
    case DomainKind::Rationals:
      return Scalar::from_rational(d, mpq_class(1) / s.real());
    case DomainKind::GaussianRationals: {
      // 1/(x+yi) = (x-yi)/(x^2+y^2)
      mpq_class re = s.real();
      mpq_class im = s.imag();
      mpq_class norm = re * re + im * im;
      return Scalar::from_gaussian(d, mpq_class(re / norm), mpq_class(-im / norm));
    }
    case DomainKind::ModP:
      return Scalar::from_int(d, mod_inverse(s.residue(), d.modulus()));
  }
  throw DomainError("unsupported domain");
}

Scalar parse_scalar(std::string_view text, const Domain& domain) {
  const std::string_view whole = trim(text);
  if (whole.empty()) throw ParseError("empty scalar");
  if (whole.back() != 'i') return Scalar::from_rational(domain, parse_rational(whole, whole));

  std::string_view body = whole.substr(0, whole.size() - 1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  mpq_class re(0);
  std::string_view coefficient = body;
  if (split != std::string_view::npos) {
    re = parse_rational(body.substr(0, split), whole);
    coefficient = body.substr(split);
  }
  mpq_class im;
  if (coefficient.empty() || coefficient == "+") {
    im = 1;
  } else if (coefficient == "-") {
    im = -1;
  } else {
    im = parse_rational(coefficient, whole);
  }
  if (domain.kind() != DomainKind::GaussianRationals) {
    throw DomainError("imaginary unit in '" + std::string(whole) + "' is not valid in domain " + domain.name());
  }
  return Scalar::from_gaussian(domain, re, im);
}

}  // namespace wcore
