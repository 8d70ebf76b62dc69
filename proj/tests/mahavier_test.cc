#include "usc/mahavier.h"

#include <gtest/gtest.h>

#include "usc/coverage.h"
#include "usc/error.h"
#include "usc/gallery.h"

namespace usc {
namespace {

using Vec = std::vector<Rational>;

Relation diagonal() { return make_example("identity"); }

std::vector<Relation> surjective_gallery() {
  std::vector<Relation> out;
  for (const auto& e : catalog()) {
    if (e.name == "example-6.4") continue;
    Relation r = make_example(e.name);
    if (is_surjective(r).value) out.push_back(std::move(r));
  }
  return out;
}

bool in_gset(const GSet& g, const Vec& x) {
  for (const auto& c : g.cells) {
    if (c.contains(x)) return true;
  }
  return false;
}

TEST(ChainSystemTest, RequiresTwoLabelsAndFullTable) {
  EXPECT_THROW(ChainSystem::single(diagonal(), 1), Error);
  ChainSystem::BondTable t;
  t.emplace(std::make_pair(0, 1), diagonal());
  EXPECT_THROW(ChainSystem::table(3, t), Error);
  t.emplace(std::make_pair(1, 2), diagonal());
  t.emplace(std::make_pair(0, 2), diagonal());
  EXPECT_EQ(ChainSystem::table(3, t).size(), 3u);
}

TEST(ChainSystemTest, SingleFunctionUsesCompositionPowers) {
  const Relation tent = make_example("tent");
  const ChainSystem s = ChainSystem::single(tent, 4);
  EXPECT_TRUE(equal(s.bond(0, 1), tent).value);
  EXPECT_TRUE(equal(s.bond(1, 3), compose(tent, tent)).value);
  EXPECT_TRUE(equal(s.bond(0, 3), compose(tent, compose(tent, tent))).value);
  EXPECT_TRUE(exactness_check(s).exact);
}

TEST(ExactnessTest, Tables) {
  const Relation mirror = make_example("mirror");
  const Relation tent = make_example("tent");
  ChainSystem::BondTable constant{{{0, 1}, mirror}, {{1, 2}, mirror}, {{0, 2}, mirror}};
  EXPECT_TRUE(exactness_check(ChainSystem::table(3, constant)).exact);
  ChainSystem::BondTable composed{{{0, 1}, tent}, {{1, 2}, tent}, {{0, 2}, compose(tent, tent)}};
  EXPECT_TRUE(exactness_check(ChainSystem::table(3, composed)).exact);
  ChainSystem::BondTable naive{{{0, 1}, tent}, {{1, 2}, tent}, {{0, 2}, tent}};
  const auto r = exactness_check(ChainSystem::table(3, naive));
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.witness, (std::array<std::size_t, 3>{0, 1, 2}));
}

TEST(BuildTest, MirrorHasSignPatternCells) {
  const GSet k = k_set(make_example("mirror"), 3);
  EXPECT_EQ(k.cells.size(), 4u);
  for (const auto& c : k.cells) EXPECT_TRUE(c.contains(Vec{Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
}

TEST(BuildTest, ConstantZeroForcesFirstCoordinates) {
  const GSet k = k_set(make_example("constant-zero"), 3);
  ASSERT_EQ(k.cells.size(), 1u);
  EXPECT_TRUE(k.cells[0].contains(Vec{Rational(0), Rational(0), Rational(2, 3)}));
  EXPECT_FALSE(k.cells[0].contains(Vec{Rational(0), Rational(1, 3), Rational(2, 3)}));
}

TEST(BuildTest, DiagonalHasOneCell) {
  const GSet k = k_set(diagonal(), 4);
  ASSERT_EQ(k.cells.size(), 1u);
  EXPECT_TRUE(k.cells[0].contains(Vec(4, Rational(1, 3))));
}

TEST(BuildTest, PairConventionPutsInputFirst) {
  // f = {0}×[0,1] ∪ [0,1]×{1}: x1 ∈ f(x2), so (x2, x1) = (0, 1/2) is allowed.
  const GSet k = k_set(make_example("example-6.2"), 2);
  EXPECT_TRUE(in_gset(k, Vec{Rational(1, 2), Rational(0)}));
  EXPECT_FALSE(in_gset(k, Vec{Rational(0), Rational(1, 2)}));
}

TEST(ConnectivityTest, Examples) {
  const auto m = gset_connected(k_set(make_example("mirror"), 3));
  EXPECT_TRUE(m.connected);
  EXPECT_EQ(m.components, 1);
  const auto l = gset_connected(k_set(make_example("lemma-4.4"), 2));
  EXPECT_FALSE(l.connected);
  EXPECT_EQ(l.components, 2);
  EXPECT_TRUE(gset_connected(k_set(make_example("example-6.1"), 4)).connected);
}

TEST(ProjectionTest, CordialityExamples) {
  const GSet k0 = k_set(make_example("constant-zero"), 3);
  const GSet p = project_gset(k0, {0, 1});
  EXPECT_EQ(p.semantics, Semantics::kAllPairs);
  ASSERT_EQ(p.cells.size(), 1u);
  EXPECT_TRUE(p.cells[0].contains(Vec{Rational(0), Rational(0)}));
  EXPECT_FALSE(p.cells[0].contains(Vec{Rational(0), Rational(1, 2)}));

  const Relation e62 = make_example("example-6.2");
  const auto s62 = ChainSystem::single(e62, 3);
  EXPECT_TRUE(gset_equal(project_gset(k_set(e62, 3), {0, 1}), direct_gset(s62, {0, 1})).equal);
  for (const auto& f : surjective_gallery()) {
    if (!is_idempotent(f).value) continue;
    EXPECT_TRUE(gset_equal(project_gset(k_set(f, 3), {0, 2}), k_set(f, 2)).equal) << f.name();
  }
}

TEST(EqualTest, ExamplesAndErrors) {
  const Relation mirror = make_example("mirror");
  const auto s = ChainSystem::single(mirror, 4);
  EXPECT_TRUE(gset_equal(build_gset(s, Semantics::kConsecutive), build_gset(s, Semantics::kAllPairs)).equal);
  const auto s62 = ChainSystem::single(make_example("example-6.2"), 3);
  EXPECT_TRUE(
      gset_equal(build_gset(s62, Semantics::kConsecutive), build_gset(s62, Semantics::kAllPairs)).equal);
  const Relation anti("anti", {Piece::segment({0, 1}, {1, 0})});
  const auto r = gset_equal(k_set(diagonal(), 2), k_set(anti, 2));
  EXPECT_FALSE(r.equal);
  ASSERT_TRUE(r.witness.has_value());
  try {
    gset_equal(k_set(diagonal(), 2), k_set(diagonal(), 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(ReverseTest, Examples) {
  const Relation e62 = make_example("example-6.2");
  EXPECT_TRUE(gset_equal(reverse_gset(k_set(e62, 3)), k_set(inverse(e62), 3)).equal);
  const GSet d = k_set(diagonal(), 3);
  EXPECT_TRUE(gset_equal(reverse_gset(d), d).equal);
  const GSet m = k_set(make_example("mirror"), 3);
  EXPECT_TRUE(gset_equal(reverse_gset(m), m).equal);
}

TEST(CordialityTest, Reports) {
  const auto r62 = cordiality_report(make_example("example-6.2"), 4);
  ASSERT_EQ(r62.size(), 14u);
  for (const auto& e : r62) EXPECT_EQ(e.status, CordialityStatus::kEqual);
  const auto r0 = cordiality_report(make_example("constant-zero"), 3, {{0, 1}});
  ASSERT_EQ(r0.size(), 1u);
  EXPECT_EQ(r0[0].status, CordialityStatus::kStrictSubset);
  EXPECT_EQ(r0[0].witness, (Vec{Rational(0), Rational(1, 2)}));
  for (int n = 2; n <= 4; ++n) {
    for (const auto& e : cordiality_report(diagonal(), n)) EXPECT_EQ(e.status, CordialityStatus::kEqual);
  }
}

TEST(CordialityTest, SubsetOrder) {
  const auto s = proper_subsets(3);
  const std::vector<std::vector<std::size_t>> expected{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(s, expected);
  EXPECT_EQ(proper_subsets(4).size(), 14u);
}

TEST(CertifyTest, Routes) {
  EXPECT_EQ(certify_continuum(make_example("mirror"), 5, std::vector<std::vector<std::size_t>>{{0}, {1}}).label(),
            "CERTIFIED_ALL_N");
  EXPECT_EQ(certify_continuum(make_example("lemma-4.4"), 5).label(), "DISCONNECTED(2,2)");
  EXPECT_EQ(certify_continuum(make_example("constant-zero"), 5).label(), "REJECTED(NOT_SURJECTIVE)");
  EXPECT_EQ(certify_continuum(make_example("mirror"), 4).label(), "CONNECTED_UP_TO_N(4)");
  // Diagonal plus the segment from (1/2,1/2) to (1/4,3/4).
  const Relation e65 = make_lemma44(Rational(1, 2), {Piece::segment({Rational(1, 2), Rational(1, 2)},
                                                                    {Rational(1, 4), Rational(3, 4)})});
  const Verdict v = certify_continuum(e65, 5);
  EXPECT_TRUE(v.kind == VerdictKind::kCertifiedAllN || v.kind == VerdictKind::kConnectedUpToN) << v.label();
}

TEST(MahavierProperties, ConsecutiveEqualsAllPairsForIdempotent) {
  for (const auto& f : surjective_gallery()) {
    if (!is_idempotent(f).value) continue;
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto s = ChainSystem::single(f, n);
      EXPECT_TRUE(gset_equal(build_gset(s, Semantics::kConsecutive), build_gset(s, Semantics::kAllPairs)).equal)
          << f.name() << " n=" << n;
    }
  }
}

TEST(MahavierProperties, ReversalIsAnInvolution) {
  for (const auto& f : surjective_gallery()) {
    for (std::size_t n = 2; n <= 4; ++n) {
      const GSet k = k_set(f, n);
      const GSet rr = reverse_gset(reverse_gset(k));
      EXPECT_EQ(rr.cells, k.cells) << f.name();
      EXPECT_EQ(rr.coordinates, k.coordinates);
    }
  }
}

TEST(MahavierProperties, ReverseMatchesInverse) {
  for (const auto& f : surjective_gallery()) {
    if (!is_idempotent(f).value) continue;
    for (std::size_t n = 2; n <= 4; ++n) {
      EXPECT_TRUE(gset_equal(reverse_gset(k_set(f, n)), k_set(inverse(f), n)).equal) << f.name() << " n=" << n;
    }
  }
}

TEST(MahavierProperties, ConsecutiveProjectionConsistency) {
  for (const auto& f : surjective_gallery()) {
    for (std::size_t n = 3; n <= 4; ++n) {
      const GSet k = k_set(f, n);
      for (std::size_t m = 2; m < n; ++m) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < m; ++i) keep.push_back(i);
        EXPECT_TRUE(gset_equal(project_gset(k, keep), k_set(f, m)).equal) << f.name() << " " << n << "->" << m;
      }
    }
  }
}

TEST(MahavierProperties, TwoCoordinateSetIsSwappedGraph) {
  for (const auto& e : catalog()) {
    const Relation f = make_example(e.name);
    const GSet k = k_set(f, 2);
    std::vector<Cell> graph;
    for (const auto& p : f.pieces()) graph.push_back(piece_cell(p).reversed());
    for (const auto& c : k.cells) EXPECT_TRUE(cell_in_union(c, graph).covered) << e.name;
    for (const auto& c : graph) EXPECT_TRUE(cell_in_union(c, k.cells).covered) << e.name;
  }
}

TEST(MahavierProperties, CertificateSanity) {
  for (int max_n = 2; max_n <= 4; ++max_n) {
    EXPECT_NE(certify_continuum(make_example("lemma-4.4"), max_n).kind, VerdictKind::kCertifiedAllN);
    EXPECT_NE(certify_continuum(make_example("mirror"), max_n).kind, VerdictKind::kDisconnected);
  }
}

}  // namespace
}  // namespace usc
