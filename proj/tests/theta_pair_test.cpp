#include "rigidity/error.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/similarity.hpp"
#include "rigidity/theta_pair.hpp"

#include <gtest/gtest.h>

namespace rigidity {
namespace {

const QMatrix kJ2 = QMatrix::jordan_block(1, 2);

TEST(ThetaPair, RejectsBadShapesAndSingularMonodromy) {
  EXPECT_THROW(ThetaPair(QMatrix::zero(1, 2), QMatrix::zero(1, 1)), Error);
  // 1 + vu = 0
  EXPECT_THROW(ThetaPair(QMatrix{{1}}, QMatrix{{-1}}), Error);
}

TEST(ThetaPair, Monodromies) {
  EXPECT_EQ(monodromy_E(from_star(kJ2)), kJ2);
  EXPECT_TRUE(monodromy_E(ThetaPair(QMatrix::zero(1, 2), QMatrix::zero(2, 1))).is_identity());
  const QMatrix t{{2, 1}, {0, 3}};
  EXPECT_EQ(monodromy_F(from_shriek(t)), t);
  EXPECT_EQ(monodromy_E(from_full_direct_image(t)), t);
}

TEST(ThetaPair, Constructions) {
  EXPECT_EQ(from_star(QMatrix::identity(2)).dim_F(), 0U);
  const ThetaPair j = from_star(kJ2);
  EXPECT_EQ(j.dim_E(), 2U);
  EXPECT_EQ(j.dim_F(), 1U);
  EXPECT_EQ(monodromy_F(j), (QMatrix{{1}}));
  const ThetaPair d = from_full_direct_image(QMatrix{{2}});
  EXPECT_EQ(d.u(), (QMatrix{{1}}));
  EXPECT_EQ(d.v(), (QMatrix{{1}}));
}

TEST(ThetaPair, MinimalExtension) {
  const QMatrix t{{2, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  const ThetaPair s = from_star(t);
  const ThetaPair m = minimal_extension(s);
  EXPECT_EQ(m.dim_E(), s.dim_E());
  EXPECT_EQ(m.dim_F(), s.dim_F());
  EXPECT_TRUE(similar(monodromy_F(m), monodromy_F(s)));

  EXPECT_EQ(minimal_extension(from_shriek(kJ2)).dim_F(), 1U);

  const QMatrix g{{2, 1}, {0, 3}};
  const ThetaPair full = from_full_direct_image(g);
  EXPECT_TRUE(pair_isomorphic(minimal_extension(full), full));
}

TEST(ThetaPair, Minimality) {
  EXPECT_TRUE(is_minimal(from_star(QMatrix{{2, 1}, {0, 3}})));
  EXPECT_FALSE(is_minimal(from_shriek(kJ2)));
  EXPECT_TRUE(is_minimal(ThetaPair(QMatrix::zero(0, 1), QMatrix::zero(1, 0))));
}

TEST(ThetaPair, Isomorphism) {
  const QMatrix t{{2, 1}, {0, 3}};
  EXPECT_TRUE(pair_isomorphic(from_shriek(t), from_shriek(t)));
  EXPECT_FALSE(pair_isomorphic(from_shriek(kJ2), from_star(kJ2)));
}

TEST(CentralizerIdentity, ReferenceValues) {
  auto check = [](const QMatrix& t, long long lhs, long long rhs) {
    const auto r = centralizer_identity_check(from_star(t));
    EXPECT_EQ(r.lhs, lhs);
    EXPECT_EQ(r.rhs, rhs);
  };
  check(kJ2, 1, 1);
  check(QMatrix{{2, 0}, {0, 3}}, 0, 0);
  check(QMatrix::identity(3), 9, 9);
}

TEST(CentralizerIdentity, Preconditions) {
  EXPECT_THROW(centralizer_identity_check(ThetaPair(QMatrix::zero(0, 0), QMatrix::zero(0, 0))), Error);
  EXPECT_THROW(centralizer_identity_check(from_shriek(kJ2)), Error);
}

}  // namespace
}  // namespace rigidity
