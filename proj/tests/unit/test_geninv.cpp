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

#include "wcore/geninv.hpp"
#include "wcore/harness.hpp"

namespace wcore {
namespace {

const Domain Q = Domain::rationals();
const Domain Qi = Domain::gaussian_rationals();

Matrix m(std::initializer_list<std::initializer_list<long>> rows, Domain d = Q) { return Matrix::from_ints(d, rows); }

template <typename F>
Failure failure_of(F&& f) {
  try {
    f();
  } catch (const NotGenInvertible& e) {
    return e.failure();
  }
  ADD_FAILURE() << "expected NotGenInvertible";
  return Failure::NotGroupInvertible;
}

TEST(GenInv, InnerAndReflexive) {
  const Matrix a = m({{1, 1}, {0, 0}});
  EXPECT_EQ(inner_inverse(Matrix::identity(Q, 2)), Matrix::identity(Q, 2));
  EXPECT_EQ(inner_inverse(Matrix::zero(Q, 2)), Matrix::zero(Q, 2));
  const Matrix x = inner_inverse(a);
  EXPECT_EQ(a * x * a, a);
  const Matrix r = reflexive_inverse(a);
  EXPECT_EQ(a * r * a, a);
  EXPECT_EQ(r * a * r, r);
  EXPECT_EQ(reflexive_inverse(Matrix::zero(Q, 2)), Matrix::zero(Q, 2));
}

TEST(GenInv, Group) {
  const Matrix e = m({{1, 1}, {0, 0}});
  EXPECT_EQ(group_inverse(e), e);
  EXPECT_EQ(failure_of([] { group_inverse(m({{0, 1}, {0, 0}})); }), Failure::NotGroupInvertible);
}

TEST(GenInv, OneThreeOneFour) {
  const Matrix a = m({{1, 1}, {0, 0}});
  const Matrix x = one_three_inverse(a);
  EXPECT_EQ(a * x, m({{1, 0}, {0, 0}}));
  const Matrix y = one_four_inverse(a);
  EXPECT_EQ(y * a, Scalar::from_rational(Q, mpq_class(1, 2)) * m({{1, 1}, {1, 1}}));
  const Domain z2 = Domain::mod_p(2);
  const Matrix ones = m({{1, 1}, {1, 1}}, z2);
  EXPECT_EQ(failure_of([&] { one_three_inverse(ones); }), Failure::NotOneThreeInvertible);
  EXPECT_EQ(failure_of([&] { one_four_inverse(ones); }), Failure::NotOneFourInvertible);
  EXPECT_TRUE(brute_force_inverse(GenInvKind::one_three(), ones).empty());
}

TEST(GenInv, MoorePenrose) {
  EXPECT_EQ(moore_penrose(m({{1, 1}, {0, 0}})).str(), "[[1/2,0],[1/2,0]]");
  EXPECT_EQ(moore_penrose(Matrix::identity(Q, 2)), Matrix::identity(Q, 2));
  EXPECT_EQ(moore_penrose(Matrix::zero(Q, 2)), Matrix::zero(Q, 2));
  EXPECT_EQ(failure_of([] { moore_penrose(m({{1, 1}, {1, 1}}, Domain::mod_p(2))); }),
            Failure::NotMoorePenroseInvertible);
}

TEST(GenInv, Along) {
  const Matrix a = m({{1, 1}, {0, 0}}, Qi);
  const Matrix w = m({{1, 0}, {1, 0}}, Qi);
  EXPECT_EQ(inverse_along(w, a).str(), "[[1/2,1/2],[0,0]]");
  EXPECT_EQ(inverse_along(Matrix::identity(Qi, 2), a), a * group_inverse(a));
  EXPECT_EQ(inverse_along(a, a), group_inverse(a));
  EXPECT_EQ(failure_of([&] { inverse_along(Matrix::zero(Qi, 2), a); }), Failure::NotInvertibleAlong);
}

TEST(GenInv, Core) {
  EXPECT_EQ(core_inverse(m({{1, 1}, {0, 0}}, Qi)), m({{1, 0}, {0, 0}}, Qi));
  EXPECT_EQ(core_inverse(Matrix::identity(Qi, 2)), Matrix::identity(Qi, 2));
  EXPECT_EQ(failure_of([] { core_inverse(m({{0, 1}, {0, 0}})); }), Failure::NotCoreInvertible);
}

TEST(GenInv, WCore) {
  const Matrix a = m({{1, 1}, {0, 0}}, Qi);
  EXPECT_EQ(w_core_inverse(a, m({{1, 0}, {1, 0}}, Qi)).str(), "[[1/2,0],[0,0]]");
  EXPECT_EQ(w_core_inverse(a, m({{1, 0}, {0, 0}}, Qi)), m({{1, 0}, {0, 0}}, Qi));
  EXPECT_EQ(w_core_inverse(Matrix::zero(Qi, 2), m({{3, 1}, {0, 2}}, Qi)), Matrix::zero(Qi, 2));
  EXPECT_EQ(w_core_via_product(a, m({{1, 0}, {1, 0}}, Qi)).str(), "[[1/2,0],[0,0]]");
  EXPECT_EQ(core_inverse(a * m({{1, 0}, {1, 0}}, Qi)).str(), "[[1/2,0],[0,0]]");
  EXPECT_EQ(w_core_via_product(Matrix::identity(Qi, 2), Matrix::identity(Qi, 2)), Matrix::identity(Qi, 2));
  // aw = [[0,1],[0,0]] has the range of a but is nilpotent.
  const Matrix nil = m({{0, 0}, {0, 1}}, Qi);
  EXPECT_EQ(failure_of([&] { w_core_inverse(a, nil); }), Failure::WNotInvertibleAlongA);
  EXPECT_EQ(failure_of([&] { w_core_via_product(a, nil); }), Failure::ProductNotCoreInvertible);
  EXPECT_EQ(failure_of([&] { w_core_via_product(a, Matrix::zero(Qi, 2)); }), Failure::RangeMismatch);
  // Over Z_2, a = [[1,0],[1,0]] is idempotent but a*a = 0, so only the {1,3} leg fails.
  const Domain z2 = Domain::mod_p(2);
  const Matrix e = m({{1, 0}, {1, 0}}, z2);
  EXPECT_EQ(failure_of([&] { w_core_inverse(e, Matrix::identity(z2, 2)); }), Failure::NotOneThree);
  try {
    w_core_inverse(e, Matrix::identity(z2, 2));
  } catch (const NotGenInvertible& ex) {
    EXPECT_EQ(ex.tag(), "NotWCoreInvertible");
  }
}

TEST(GenInv, Ep) {
  EXPECT_TRUE(is_ep(Matrix::identity(Q, 2)));
  EXPECT_TRUE(is_ep(m({{1, 2}, {3, 4}})));
  EXPECT_FALSE(is_ep(m({{1, 1}, {0, 0}})));
  EXPECT_TRUE(is_ep(m({{1, 0}, {0, 0}})));
}

TEST(GenInv, KindNames) {
  for (auto k : {InverseKind::Inner, InverseKind::Reflexive, InverseKind::Group, InverseKind::OneThree,
                 InverseKind::OneFour, InverseKind::MoorePenrose, InverseKind::Along, InverseKind::Core,
                 InverseKind::WCore}) {
    EXPECT_EQ(parse_kind(kind_name(k)), k);
  }
  EXPECT_FALSE(parse_kind("drazin"));
}

TEST(GenInv, ComputeCertificate) {
  const auto r = compute(GenInvKind::w_core(m({{1, 0}, {1, 0}}, Qi)), m({{1, 1}, {0, 0}}, Qi));
  EXPECT_FALSE(r.certificate.empty());
  EXPECT_TRUE(all_hold(r.certificate));
  EXPECT_FALSE(all_hold(certify(GenInvKind::moore_penrose(), m({{1, 1}, {0, 0}}), Matrix::zero(Q, 2))));
}

// Existence criteria and alternate-path uniqueness on random input.
class GenInvProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(GenInvProperty, ExistenceAndUniqueness) {
  for (std::size_t n = 1; n <= 3; ++n) {
    TrialConfig cfg;
    cfg.domain = Domain::parse(GetParam());
    cfg.dim = n;
    cfg = normalized(cfg);
    for (std::uint64_t t = 0; t < 60; ++t) {
      Rng rng = trial_rng(5, PropertyId::LEM_AW_PRODUCT, t);
      const Matrix a = (t % 2 == 0) ? random_matrix(cfg, rng) : random_wcore_instance(cfg, rng, WMode::General).a;
      const Matrix w = random_matrix(cfg, rng);
      const Matrix a2 = a * a;
      const Matrix as = a.star();

      EXPECT_TRUE(all_hold(certify(GenInvKind::inner(), a, inner_inverse(a))));
      EXPECT_TRUE(all_hold(certify(GenInvKind::reflexive(), a, reflexive_inverse(a, PivotStrategy::LastNonzero))));

      const auto g = try_group_inverse(a);
      EXPECT_EQ(g.has_value(), rank(a2) == rank(a));
      const auto x13 = try_one_three_inverse(a);
      EXPECT_EQ(x13.has_value(), rank(as * a) == rank(a));
      const auto x14 = try_one_four_inverse(a);
      EXPECT_EQ(x14.has_value(), rank(a * as) == rank(a));
      const auto mp = try_moore_penrose(a);
      EXPECT_EQ(mp.has_value(), x13 && x14);
      if (mp) {
        EXPECT_EQ(*mp, moore_penrose(a, PivotStrategy::LastNonzero));
        EXPECT_EQ(*mp, *x14 * a * *x13);
      }
      const auto core = try_core_inverse(a);
      EXPECT_EQ(core.has_value(), g && x13);
      if (core) {
        EXPECT_EQ(*core, *g * a * *x13);
        EXPECT_EQ(*core, core_inverse(a, PivotStrategy::LastNonzero));
      }
      if (g) EXPECT_EQ(*g, inverse_along(a, a));

      const auto wc = try_w_core_inverse(a, w);
      const auto along = try_inverse_along(w, a);
      EXPECT_EQ(wc.has_value(), along && x13);
      if (wc) {
        EXPECT_TRUE(all_hold(certify(GenInvKind::w_core(w), a, *wc)));
        EXPECT_EQ(*wc, *along * *x13);
        EXPECT_EQ(*wc, w_core_inverse(a, w, PivotStrategy::LastNonzero));
        EXPECT_EQ(*wc, w_core_via_product(a, w));
      }
      const Matrix i = Matrix::identity(cfg.domain, n);
      EXPECT_EQ(try_w_core_inverse(a, i).has_value(), core.has_value());
      if (core) EXPECT_EQ(w_core_inverse(a, i), *core);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Domains, GenInvProperty,
                         ::testing::Values("rationals", "gaussian_rationals", "gaussian_rationals:identity",
                                           "mod_p:2", "mod_p:3", "mod_p:5"));

}  // namespace
}  // namespace wcore
