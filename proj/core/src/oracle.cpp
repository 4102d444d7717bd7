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

#include <map>
#include <mutex>
#include <string>
#include <unordered_set>
#include <utility>

#include "harness_internal.hpp"
#include "wcore/harness.hpp"

namespace wcore {

namespace {

std::uint64_t ring_size(std::uint32_t p, std::size_t n, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n * n; ++k) {
    if (total > budget / p) {
      throw OracleInfeasible("M_" + std::to_string(n) + "(Z_" + std::to_string(p) + ") exceeds the enumeration budget of " +
                             std::to_string(budget));
    }
    total *= p;
  }
  return total;
}

const std::vector<Matrix>& cached_ring(std::uint32_t p, std::size_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::size_t>, std::vector<Matrix>> cache;
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace({p, n});
  if (inserted) it->second = enumerate_ring(p, n);
  return it->second;
}

// Positions (in ring order) of every element of the set {m * y} or {y * m}.
std::unordered_set<std::uint64_t> ideal_indices(const std::vector<Matrix>& ring, const Matrix& m, bool right) {
  std::unordered_set<std::uint64_t> out;
  for (const Matrix& y : ring) out.insert(ring_index(right ? m * y : y * m));
  return out;
}

bool satisfies(InverseKind kind, const Matrix& a, const Matrix& x) {
  const Matrix ax = a * x;
  const Matrix xa = x * a;
  const bool inner = ax * a == a;
  switch (kind) {
    case InverseKind::Inner: return inner;
    case InverseKind::Reflexive: return inner && xa * x == x;
    case InverseKind::Group: return inner && xa * x == x && ax == xa;
    case InverseKind::OneThree: return inner && ax.star() == ax;
    case InverseKind::OneFour: return inner && xa.star() == xa;
    case InverseKind::MoorePenrose: return inner && xa * x == x && ax.star() == ax && xa.star() == xa;
    case InverseKind::Core: return inner && xa * x == x && ax * x == x && xa * a == a && ax.star() == ax;
    default: return false;
  }
}

}  // namespace

namespace detail {

const std::vector<Matrix>* tiny_ring(const Domain& domain, std::size_t n) {
  if (!domain.is_finite()) return nullptr;
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < n * n; ++k) {
    size *= domain.modulus();
    if (size > 16) return nullptr;
  }
  return &cached_ring(domain.modulus(), n);
}

}  // namespace detail

std::vector<Matrix> enumerate_ring(std::uint32_t p, std::size_t n, std::uint64_t budget) {
  const Domain d = Domain::mod_p(p);
  const std::uint64_t total = ring_size(p, n, budget);
  std::vector<Matrix> out;
  out.reserve(total);
  std::vector<std::uint32_t> digits(n * n, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    Matrix m(d, n, n);
    for (std::size_t e = 0; e < digits.size(); ++e) m(e / n, e % n) = Scalar::from_int(d, digits[e]);
    out.push_back(std::move(m));
    // Last entry varies fastest.
    for (std::size_t e = digits.size(); e-- > 0;) {
      if (++digits[e] < p) break;
      digits[e] = 0;
    }
  }
  return out;
}

std::uint64_t ring_index(const Matrix& m) {
  const std::uint32_t p = m.domain().modulus();
  if (p == 0) throw DomainError("ring_index requires a Z_p matrix");
  std::uint64_t index = 0;
  for (const Scalar& s : m.entries()) index = index * p + s.residue();
  return index;
}

std::vector<Matrix> brute_force_inverse(const GenInvKind& kind, const Matrix& a, std::uint64_t budget) {
  const Domain& d = a.domain();
  if (!d.is_finite()) throw DomainError("brute_force_inverse requires a Z_p domain");
  if (!a.is_square()) throw ShapeError("brute_force_inverse requires a square matrix");
  const std::size_t n = a.rows();
  ring_size(d.modulus(), n, budget);
  const std::vector<Matrix>& ring = cached_ring(d.modulus(), n);

  std::vector<Matrix> out;
  switch (kind.kind) {
    case InverseKind::Along: {
      if (!kind.aux) throw ConfigError("inverse along requires d");
      const Matrix& dd = *kind.aux;
      const auto right = ideal_indices(ring, dd, true);
      const auto left = ideal_indices(ring, dd, false);
      for (const Matrix& x : ring) {
        const std::uint64_t k = ring_index(x);
        if (!right.contains(k) || !left.contains(k)) continue;
        if (x * a * dd == dd && dd * a * x == dd) out.push_back(x);
      }
      break;
    }
    case InverseKind::WCore: {
      if (!kind.aux) throw ConfigError("w-core inverse requires w");
      const Matrix& w = *kind.aux;
      const Matrix aw = a * w;
      const Matrix awa = aw * a;
      for (const Matrix& x : ring) {
        const Matrix awx = aw * x;
        if (awx * x == x && x * awa == a && awx.star() == awx) out.push_back(x);
      }
      break;
    }
    default:
      for (const Matrix& x : ring) {
        if (satisfies(kind.kind, a, x)) out.push_back(x);
      }
  }
  return out;
}

}  // namespace wcore
