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

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "wcore/harness.hpp"

namespace wcore {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

const Scalar& pool_entry(const TrialConfig& cfg, Rng& rng) { return cfg.entry_pool[pick(rng, cfg.entry_pool.size())]; }

Scalar nonzero_entry(const TrialConfig& cfg, Rng& rng) {
  for (int tries = 0; tries < 16; ++tries) {
    const Scalar& s = pool_entry(cfg, rng);
    if (!s.is_zero()) return s;
  }
  return Scalar::one(cfg.domain);
}

Matrix random_rect(const TrialConfig& cfg, Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(cfg.domain, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = pool_entry(cfg, rng);
  }
  return m;
}

// Rank at most r: an n x r by r x n product.
Matrix random_rank(const TrialConfig& cfg, Rng& rng, std::size_t r) {
  const std::size_t n = cfg.dim;
  if (r == 0) return Matrix::zero(cfg.domain, n);
  const Matrix u = random_rect(cfg, rng, n, r);
  const Matrix v = random_rect(cfg, rng, r, n);
  return u * v;
}

std::size_t random_rank_value(const TrialConfig& cfg, Rng& rng) {
  // Favour proper, nonzero ranks; those are where the orders are interesting.
  const std::size_t n = cfg.dim;
  if (n == 1) return pick(rng, 2);
  const std::size_t roll = pick(rng, 10);
  if (roll == 0) return 0;
  if (roll == 1) return n;
  return 1 + pick(rng, n - 1);
}

// L * U * P with unit lower L and nonzero-diagonal upper U: always invertible.
Matrix triangular_unit(const TrialConfig& cfg, Rng& rng, std::size_t n) {
  Matrix l = Matrix::identity(cfg.domain, n);
  Matrix u = Matrix::identity(cfg.domain, n);
  for (std::size_t i = 0; i < n; ++i) {
    u(i, i) = nonzero_entry(cfg, rng);
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = pool_entry(cfg, rng);
      u(j, i) = pool_entry(cfg, rng);
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[pick(rng, i)]);
  Matrix p(cfg.domain, n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = Scalar::one(cfg.domain);
  return l * u * p;
}

Matrix unit_of_size(const TrialConfig& cfg, Rng& rng, std::size_t n) {
  for (int tries = 0; tries < 24; ++tries) {
    Matrix m = random_rect(cfg, rng, n, n);
    if (is_unit(m)) return m;
  }
  return triangular_unit(cfg, rng, n);
}

// Product of two Householder reflections I - 2vv*/(v*v); identity when the
// domain gives no usable reflection.
Matrix random_unitary(const TrialConfig& cfg, Rng& rng) {
  const std::size_t n = cfg.dim;
  Matrix q = Matrix::identity(cfg.domain, n);
  const Scalar two = Scalar::from_int(cfg.domain, 2);
  for (int k = 0; k < 2; ++k) {
    const Matrix v = random_rect(cfg, rng, n, 1);
    const Scalar norm = (v.star() * v)(0, 0);
    if (norm.is_zero() || two.is_zero()) continue;
    q = q * (Matrix::identity(cfg.domain, n) - (two / norm) * (v * v.star()));
  }
  return q;
}

// S diag(B, 0) S^{-1} with B invertible: group invertible of rank r.
Matrix random_group_invertible(const TrialConfig& cfg, Rng& rng, std::size_t r, bool unitary) {
  const std::size_t n = cfg.dim;
  Matrix core(cfg.domain, n, n);
  if (r > 0) {
    const Matrix blk = unit_of_size(cfg, rng, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) core(i, j) = blk(i, j);
    }
  }
  if (unitary) {
    const Matrix u = random_unitary(cfg, rng);
    return u * core * u.star();
  }
  const Matrix s = unit_of_size(cfg, rng, n);
  return s * core * inverse(s);
}

struct Seed {
  Matrix a;
  Matrix w;
  Matrix t;  // a^(1,3)
  Matrix g;  // (wa)^#
};

std::optional<Seed> make_seed(const Matrix& a, const Matrix& w) {
  if (!is_w_core_invertible(a, w)) return std::nullopt;
  return Seed{a, w, one_three_inverse(a), group_inverse(w * a)};
}

std::optional<Seed> try_seed(const TrialConfig& cfg, Rng& rng, WMode mode) {
  const std::size_t n = cfg.dim;
  const Matrix id = Matrix::identity(cfg.domain, n);
  const std::size_t r = random_rank_value(cfg, rng);
  switch (mode) {
    case WMode::Identity: return make_seed(random_group_invertible(cfg, rng, r, pick(rng, 3) == 0), id);
    case WMode::Unit: {
      const Matrix w = unit_of_size(cfg, rng, n);
      const Matrix c = random_group_invertible(cfg, rng, r, pick(rng, 3) == 0);
      return make_seed(c * inverse(w), w);
    }
    case WMode::StarOfA: {
      const Matrix a = random_rank(cfg, rng, r);
      return make_seed(a, a.star());
    }
    case WMode::SelfA: {
      const Matrix a = random_group_invertible(cfg, rng, r, pick(rng, 3) == 0);
      return make_seed(a, a);
    }
    case WMode::General: {
      const Matrix a = pick(rng, 2) == 0 ? random_rank(cfg, rng, r) : random_group_invertible(cfg, rng, r, false);
      const std::size_t rw = std::min(n, r + pick(rng, n - r + 1));
      return make_seed(a, random_rank(cfg, rng, rw));
    }
  }
  return std::nullopt;
}

Matrix mode_w(const TrialConfig& cfg, Rng& rng, WMode mode) {
  const std::size_t n = cfg.dim;
  switch (mode) {
    case WMode::Unit: return unit_of_size(cfg, rng, n);
    case WMode::General: return random_rank(cfg, rng, random_rank_value(cfg, rng));
    default: return Matrix::identity(cfg.domain, n);
  }
}

Seed seed_for(const TrialConfig& cfg, Rng& rng, WMode mode) {
  for (int tries = 0; tries < 48; ++tries) {
    if (auto s = try_seed(cfg, rng, mode)) return *std::move(s);
  }
  // a = 0 lies in R_w^⊕ for every w.
  const Matrix zero = Matrix::zero(cfg.domain, cfg.dim);
  const Matrix w = mode == WMode::StarOfA || mode == WMode::SelfA ? zero : mode_w(cfg, rng, mode);
  return *make_seed(zero, w);
}

// b = a + n. The shapes of n decide which halves of the order hold:
// (I - at)M(I - wag) gives both, (I - at)M only a*a = a*b, M(I - wag) only awa = bwa.
Matrix partner(const TrialConfig& cfg, Rng& rng, const Seed& s) {
  const std::size_t n = cfg.dim;
  const Matrix id = Matrix::identity(cfg.domain, n);
  const Matrix left = id - s.a * s.t;
  const Matrix right = id - s.w * s.a * s.g;
  const Matrix m = pick(rng, 2) == 0 ? random_matrix(cfg, rng) : random_rank(cfg, rng, 1 + pick(rng, n));
  switch (pick(rng, 8)) {
    case 0:
    case 1:
    case 2: return s.a + left * m * right;
    case 3: return s.a + left * m;
    case 4: return s.a + m * right;
    case 5: return s.a;
    case 6: return s.a + random_rank(cfg, rng, 1);
    default: return random_matrix(cfg, rng);
  }
}

// Partner that is itself w-core invertible; b = a as the last resort.
Matrix strict_partner(const TrialConfig& cfg, Rng& rng, const Seed& s) {
  for (int tries = 0; tries < 16; ++tries) {
    Matrix b = partner(cfg, rng, s);
    if (is_w_core_invertible(b, s.w)) return b;
  }
  return s.a;
}

WMode pick_mode(Rng& rng, bool unit_only) {
  if (unit_only) return pick(rng, 4) == 0 ? WMode::Identity : WMode::Unit;
  constexpr std::array<WMode, 8> modes = {WMode::General, WMode::General, WMode::General, WMode::Unit,
                                          WMode::Unit,    WMode::Identity, WMode::StarOfA, WMode::SelfA};
  return modes[pick(rng, modes.size())];
}

Instance make(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& w) { return Instance{a, b, c, w}; }

Instance pair_instance(const TrialConfig& cfg, Rng& rng, bool strict, bool unit_only) {
  const Seed s = seed_for(cfg, rng, pick_mode(rng, unit_only));
  const Matrix b = strict ? strict_partner(cfg, rng, s) : partner(cfg, rng, s);
  return make(s.a, b, Matrix::zero(cfg.domain, cfg.dim), s.w);
}

Instance chain_instance(const TrialConfig& cfg, Rng& rng) {
  const Seed s = seed_for(cfg, rng, pick_mode(rng, false));
  const Matrix b = strict_partner(cfg, rng, s);
  auto sb = make_seed(b, s.w);
  const Matrix c = sb ? strict_partner(cfg, rng, *sb) : b;
  return make(s.a, b, c, s.w);
}

// (a, w) for criteria that have no hypothesis: half directed, half raw.
Instance free_instance(const TrialConfig& cfg, Rng& rng) {
  if (pick(rng, 2) == 0) return pair_instance(cfg, rng, false, false);
  const Matrix a = random_rank(cfg, rng, random_rank_value(cfg, rng));
  const Matrix w = pick(rng, 2) == 0 ? random_matrix(cfg, rng) : random_rank(cfg, rng, random_rank_value(cfg, rng));
  return make(a, random_matrix(cfg, rng), Matrix::zero(cfg.domain, cfg.dim), w);
}

Instance core_instance(const TrialConfig& cfg, Rng& rng) {
  const Seed s = seed_for(cfg, rng, WMode::Identity);
  return make(s.a, partner(cfg, rng, s), Matrix::zero(cfg.domain, cfg.dim), s.w);
}

Instance star_instance(const TrialConfig& cfg, Rng& rng) {
  const Seed s = seed_for(cfg, rng, WMode::StarOfA);
  const Matrix id = Matrix::identity(cfg.domain, cfg.dim);
  return make(s.a, partner(cfg, rng, s), Matrix::zero(cfg.domain, cfg.dim), id);
}

Instance ep_instance(const TrialConfig& cfg, Rng& rng) {
  const std::size_t n = cfg.dim;
  const Matrix id = Matrix::identity(cfg.domain, n);
  std::optional<Matrix> a;
  for (int tries = 0; tries < 32 && !a; ++tries) {
    const std::size_t r = random_rank_value(cfg, rng);
    Matrix cand = [&] {
      if (r == 0) return Matrix::zero(cfg.domain, n);
      // V B V* has range VR = range of its adjoint.
      const Matrix v = random_rect(cfg, rng, n, r);
      return v * unit_of_size(cfg, rng, r) * v.star();
    }();
    if (is_ep(cand)) a = std::move(cand);
  }
  if (!a) a = id;
  auto s = make_seed(*a, id);
  const Matrix b = s ? partner(cfg, rng, *s) : random_matrix(cfg, rng);
  return make(*a, b, Matrix::zero(cfg.domain, n), id);
}

enum class Commuting { GeneralW, UnitW, WEqualsA };

// Simultaneously diagonalisable a, b, w, or polynomials in one matrix.
Instance commuting_instance(const TrialConfig& cfg, Rng& rng, Commuting kind) {
  const std::size_t n = cfg.dim;
  const Domain& d = cfg.domain;
  const Matrix id = Matrix::identity(d, n);
  Matrix a(d, n, n), b(d, n, n), w = id;
  if (pick(rng, 4) == 0) {
    const Matrix base = random_group_invertible(cfg, rng, random_rank_value(cfg, rng), pick(rng, 2) == 0);
    const Matrix sq = base * base;
    // Draws are sequenced explicitly so every compiler sees the same stream.
    auto poly = [&] {
      const Scalar c0 = pool_entry(cfg, rng);
      const Scalar c1 = pool_entry(cfg, rng);
      const Scalar c2 = pool_entry(cfg, rng);
      return c0 * id + c1 * base + c2 * sq;
    };
    a = poly();
    b = poly();
    if (kind == Commuting::GeneralW) w = poly();
  } else {
    Matrix da(d, n, n), db(d, n, n), dw(d, n, n);
    const bool disjoint = pick(rng, 2) == 0;
    for (std::size_t i = 0; i < n; ++i) {
      da(i, i) = pick(rng, 3) == 0 ? Scalar::zero(d) : nonzero_entry(cfg, rng);
      if (disjoint) {
        db(i, i) = da(i, i).is_zero() ? pool_entry(cfg, rng) : da(i, i);
      } else {
        db(i, i) = pool_entry(cfg, rng);
      }
      dw(i, i) = pick(rng, 4) == 0 ? Scalar::zero(d) : nonzero_entry(cfg, rng);
    }
    const bool unitary = pick(rng, 3) != 0;
    const Matrix s = unitary ? random_unitary(cfg, rng) : unit_of_size(cfg, rng, n);
    const Matrix si = unitary ? s.star() : inverse(s);
    a = s * da * si;
    b = s * db * si;
    if (kind == Commuting::GeneralW) w = s * dw * si;
    if (kind == Commuting::UnitW) w = id;
  }
  if (kind == Commuting::WEqualsA) w = a;
  return make(a, b, Matrix::zero(d, n), w);
}

}  // namespace

std::vector<Scalar> default_entry_pool(const Domain& domain) {
  std::vector<Scalar> pool;
  for (const char* text : {"0", "1", "-1", "2", "-2", "1/2", "i", "-i"}) {
    try {
      Scalar s = parse_scalar(text, domain);
      if (std::find(pool.begin(), pool.end(), s) == pool.end()) pool.push_back(std::move(s));
    } catch (const Error&) {
      // not representable in this domain
    }
  }
  return pool;
}

TrialConfig normalized(TrialConfig cfg) {
  if (cfg.dim < 1 || cfg.dim > 6) throw ConfigError("dim must be between 1 and 6");
  if (cfg.entry_pool.empty()) cfg.entry_pool = default_entry_pool(cfg.domain);
  for (const Scalar& s : cfg.entry_pool) {
    if (!(s.domain() == cfg.domain)) throw ConfigError("entry pool scalar " + s.str() + " is not in " + cfg.domain.name());
  }
  if (cfg.exhaustive && !cfg.domain.is_finite()) throw ConfigError("exhaustive mode needs a mod_p domain");
  return cfg;
}

Rng trial_rng(std::uint64_t seed, PropertyId id, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

Matrix random_matrix(const TrialConfig& cfg, Rng& rng) { return random_rect(cfg, rng, cfg.dim, cfg.dim); }

Matrix random_diagonal(const TrialConfig& cfg, Rng& rng) {
  Matrix m(cfg.domain, cfg.dim, cfg.dim);
  for (std::size_t i = 0; i < cfg.dim; ++i) m(i, i) = pool_entry(cfg, rng);
  return m;
}

Matrix random_unit(const TrialConfig& cfg, Rng& rng) { return unit_of_size(cfg, rng, cfg.dim); }

WCoreInstance random_wcore_instance(const TrialConfig& cfg, Rng& rng, WMode mode) {
  const Seed s = seed_for(cfg, rng, mode);
  return {s.a, partner(cfg, rng, s), s.w};
}

Instance random_instance(PropertyId id, const TrialConfig& cfg, Rng& rng) {
  switch (id) {
    case PropertyId::DEF_WCORE_RELATION:
    case PropertyId::LEM_WCORE_PAR_I:
    case PropertyId::LEM_WCORE_PAR_II:
    case PropertyId::LEM_WCORE_PAR_III:
    case PropertyId::LEM_WCORE_PAR_IV:
    case PropertyId::PROP_SYMMETRIC_CHAR:
    case PropertyId::PROP_MIXED_PRODUCTS:
    case PropertyId::THM_LEFTSTAR_4WAY:
    case PropertyId::THM_REVERSE_ORDER:
    case PropertyId::EX_REVERSE_COUNTEREXAMPLE: return pair_instance(cfg, rng, true, false);
    case PropertyId::THM_PARTIAL_ORDER_AXIOMS: return chain_instance(cfg, rng);
    case PropertyId::LEM_PROJECTION:
    case PropertyId::THM_PROJECTION_6WAY:
    case PropertyId::LEM_IDEMPOTENT_E:
    case PropertyId::LEM_IDEMPOTENT_F:
    case PropertyId::THM_IDEMPOTENT_11WAY:
    case PropertyId::THM_WCORE_12WAY:
    case PropertyId::PROP_IMPLIES_LEFTSTAR_RIGHTSHARP:
    case PropertyId::EX2_CONVERSE_FAILS:
    case PropertyId::PROP_IMPLIES_DIAMOND: return pair_instance(cfg, rng, false, false);
    case PropertyId::THM_UNIT_EQUIVALENCE:
    case PropertyId::THM_WCORE_IFF_AW_CORE: return pair_instance(cfg, rng, false, true);
    case PropertyId::THM_RIGHTSHARP_3WAY: return pair_instance(cfg, rng, true, true);
    case PropertyId::LEM_MARY_CRITERION:
    case PropertyId::LEM_AW_PRODUCT: return free_instance(cfg, rng);
    case PropertyId::COR_CORE_12WAY:
    case PropertyId::THM_THREECLASS_CORE: return core_instance(cfg, rng);
    case PropertyId::THM_THREECLASS_STAR: return star_instance(cfg, rng);
    case PropertyId::THM_EP_5WAY: return ep_instance(cfg, rng);
    case PropertyId::THM_DIFFERENCE_3WAY: return commuting_instance(cfg, rng, Commuting::GeneralW);
    case PropertyId::COR_DIFFERENCE_CORE: return commuting_instance(cfg, rng, Commuting::UnitW);
    case PropertyId::COR_DIFFERENCE_ACORE: return commuting_instance(cfg, rng, Commuting::WEqualsA);
  }
  return Instance::of(random_matrix(cfg, rng));
}

}  // namespace wcore
