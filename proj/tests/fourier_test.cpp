#include "rigidity/catalog.hpp"
#include "rigidity/error.hpp"
#include "rigidity/fourier.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/similarity.hpp"

#include <gtest/gtest.h>

namespace rigidity {
namespace {

MonodromyTuple catalog_tuple(std::string_view name) {
  const auto catalog = builtin_catalog();
  const auto* e = find_entry(catalog, name);
  if (e == nullptr) throw std::runtime_error("missing catalog entry");
  return e->tuple;
}

FourierLocalData data_with(std::vector<QMatrix> regular, QMatrix zero) {
  FourierLocalData d;
  Rational c = 0;
  for (auto& r : regular) {
    d.rank_hat += r.rows();
    d.components.push_back({c, r, r.rows()});
    c += 1;
  }
  d.zero_monodromy = std::move(zero);
  return d;
}

TEST(StationaryPhase, WorkedRankOneExample) {
  const auto d = stationary_phase(catalog_tuple("rank1_two_point"));
  ASSERT_EQ(d.components.size(), 2U);
  EXPECT_EQ(d.components[0].coefficient, 0);
  EXPECT_EQ(d.components[0].regular_monodromy, (QMatrix{{2}}));
  EXPECT_EQ(d.components[1].coefficient, 1);
  EXPECT_EQ(d.components[1].regular_monodromy, (QMatrix{{3}}));
  EXPECT_EQ(d.rank_hat, 2U);
  EXPECT_TRUE(similar(d.zero_monodromy, QMatrix{{Rational(1, 6), 0}, {0, 1}}));
  EXPECT_EQ(irregularity_end(d), 2U);
  EXPECT_EQ(rig_fourier(d), 2);
  EXPECT_TRUE(d.warnings.empty());
}

TEST(StationaryPhase, UnitBlockAtInfinityGrows) {
  const auto d = stationary_phase(catalog_tuple("rank1_unit_infinity"));
  EXPECT_EQ(d.rank_hat, 2U);
  EXPECT_TRUE(similar(d.zero_monodromy, QMatrix::jordan_block(1, 2)));
}

TEST(StationaryPhase, Kummer) {
  const auto d = stationary_phase(catalog_tuple("kummer"));
  ASSERT_EQ(d.components.size(), 1U);
  EXPECT_EQ(d.components[0].dimension, 1U);
  EXPECT_EQ(d.rank_hat, 1U);
  EXPECT_EQ(d.zero_monodromy, (QMatrix{{Rational(1, 2)}}));
  EXPECT_EQ(irregularity_end(d), 0U);
  EXPECT_EQ(rig_fourier(d), 2);
}

TEST(StationaryPhase, HypergeometricRankTwo) {
  const auto d = stationary_phase(catalog_tuple("hypergeometric2"));
  ASSERT_EQ(d.components.size(), 2U);
  EXPECT_EQ(d.components[0].dimension, 2U);
  EXPECT_EQ(d.components[1].dimension, 1U);
  EXPECT_EQ(d.components[1].regular_monodromy, (QMatrix{{3}}));
  EXPECT_EQ(d.rank_hat, 3U);
  EXPECT_EQ(centralizer_dimension(d.zero_monodromy), 3U);
  EXPECT_EQ(rig_fourier(d), 2);
}

TEST(StationaryPhase, HypergeometricRankThree) {
  const auto d = stationary_phase(catalog_tuple("hypergeometric3"));
  EXPECT_EQ(d.rank_hat, 4U);
  EXPECT_EQ(fixed_space_dim(d.zero_monodromy), 1U);
  EXPECT_EQ(rig_fourier(d), 2);
}

TEST(StationaryPhase, ReducibleInputWarnsButProceeds) {
  const auto t = make_tuple(2, {{0, QMatrix{{2, 0}, {0, 3}}}, {1, QMatrix{{5, 0}, {0, 7}}}});
  const auto d = stationary_phase(t);
  EXPECT_FALSE(d.warnings.empty());
  EXPECT_EQ(d.rank_hat, 4U);
}

TEST(StationaryPhase, NonRealizable) {
  const auto t = make_tuple(2, {{0, QMatrix{{2, 0}, {0, 1}}}});
  try {
    stationary_phase(t);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonRealizable);
  }
}

TEST(RigFourier, Formula) {
  EXPECT_EQ(rig_fourier(data_with({QMatrix{{2}}, QMatrix{{3}}}, QMatrix{{Rational(1, 6), 0}, {0, 1}})), 2);
  // one component: the exponential terms cancel
  const auto one = data_with({QMatrix::jordan_block(1, 2)}, QMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(rig_fourier(one), 2 + 2);
}

TEST(Irregularity, Formula) {
  EXPECT_EQ(irregularity_end(data_with({QMatrix{{2}}, QMatrix{{3}}}, QMatrix::identity(2))), 2U);
  EXPECT_EQ(irregularity_end(data_with({QMatrix{{2}}}, QMatrix{{2}})), 0U);
  EXPECT_EQ(irregularity_end(data_with({QMatrix::identity(2), QMatrix{{2}}, QMatrix{{3}}}, QMatrix::identity(4))),
            10U);
}

TEST(FormalEuler, Formula) {
  EXPECT_EQ(formal_euler_end_min(data_with({QMatrix{{2}}, QMatrix{{3}}}, QMatrix::identity(2))), 2U);
  EXPECT_EQ(formal_euler_end_min(data_with({QMatrix::identity(2)}, QMatrix::identity(2))), 4U);
  EXPECT_EQ(formal_euler_end_min(data_with({QMatrix::jordan_block(1, 2)}, QMatrix::identity(2))), 2U);
}

TEST(Preservation, ReferenceTuples) {
  for (const char* name : {"rank1_two_point", "kummer"}) {
    const auto r = verify_preservation(catalog_tuple(name));
    EXPECT_EQ(r.rig_source, 2) << name;
    EXPECT_EQ(r.rig_fourier, 2) << name;
    EXPECT_TRUE(r.equal) << name;
    EXPECT_TRUE(identities_hold(r)) << name;
  }
}

TEST(Preservation, EveryIrreducibleCatalogEntry) {
  for (const auto& e : builtin_catalog()) {
    if (!is_irreducible(e.tuple)) continue;
    const auto r = verify_preservation(e.tuple);
    EXPECT_TRUE(r.equal) << e.name;
    EXPECT_TRUE(identities_hold(r)) << e.name;
  }
}

TEST(Preservation, RefusesReducibleUnlessForced) {
  const auto t = catalog_tuple("reducible_diagonal");
  try {
    verify_preservation(t);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisViolated);
  }
  const auto t2 = make_tuple(2, {{0, QMatrix{{2, 0}, {0, 3}}}, {1, QMatrix{{5, 0}, {0, 7}}}});
  const auto forced = verify_preservation(t2, VerifyOptions{true});
  EXPECT_FALSE(forced.hypothesis_satisfied);
}

}  // namespace
}  // namespace rigidity
