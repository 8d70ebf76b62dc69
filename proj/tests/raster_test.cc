#include "usc/raster.h"

#include <gtest/gtest.h>

#include "usc/error.h"
#include "usc/gallery.h"

namespace usc {
namespace {

TEST(RasterTest, DiagonalAtQuarterStep) {
  EXPECT_THROW(raster_oracle(make_example("identity"), Rational(1, 4)), Error);
  // Step 1/4 is below the supported range; 1/8 keeps the same shape.
  const Raster r = raster_oracle(make_example("identity"), Rational(1, 8));
  // 8 diagonal squares plus the 14 squares touching them at a corner.
  EXPECT_EQ(r.count(), 8u + 14u);
  EXPECT_TRUE(r.marked({3, 3}));
  EXPECT_TRUE(r.marked({3, 4}));
  EXPECT_FALSE(r.marked({3, 5}));
  EXPECT_EQ(raster_components(r), 1);
}

TEST(RasterTest, StepValidation) {
  EXPECT_THROW(raster_oracle(make_example("identity"), Rational(1, 300)), Error);
  EXPECT_THROW(raster_oracle(make_example("identity"), Rational(3, 64)), Error);
  EXPECT_THROW(raster_oracle(k_set(make_example("identity"), 5)), Error);
}

TEST(RasterTest, GraphComponentsAgree) {
  for (const auto& e : catalog()) {
    const Relation r = make_example(e.name);
    EXPECT_EQ(raster_components(raster_oracle(r)), graph_components(r).count) << e.name;
  }
}

TEST(RasterTest, KnownConnectivity) {
  EXPECT_EQ(raster_components(raster_oracle(k_set(make_example("lemma-4.4"), 2))), 2);
  EXPECT_EQ(raster_components(raster_oracle(k_set(make_example("mirror"), 3))), 1);
}

TEST(RasterTest, ConnectivityAgreesOnGallery) {
  for (const auto& e : catalog()) {
    const Relation f = make_example(e.name);
    for (std::size_t n = 2; n <= 4; ++n) {
      const GSet k = k_set(f, n);
      EXPECT_EQ(raster_components(raster_oracle(k)), gset_connected(k).components) << e.name << " n=" << n;
    }
  }
}

TEST(RasterTest, ExactWitnessesLieInMarkedCells) {
  for (const auto& e : catalog()) {
    const Relation f = make_example(e.name);
    const Raster graph = raster_oracle(f);
    for (const auto& p : f.pieces()) {
      for (const auto& v : p.vertices()) EXPECT_TRUE(raster_near(graph, {v.x, v.y})) << e.name;
    }
    for (std::size_t n = 2; n <= 4; ++n) {
      const GSet k = k_set(f, n);
      const Raster r = raster_oracle(k);
      for (const auto& c : k.cells) {
        const auto w = cell_feasible(c);
        ASSERT_TRUE(w.has_value());
        EXPECT_TRUE(raster_near(r, *w)) << e.name << " n=" << n;
      }
    }
  }
}

TEST(RasterTest, GridPowersMatchComposition) {
  const Relation tent = make_example("tent");
  const GridTable t = grid_table(tent, 64, RasterMode::kGridPoints);
  EXPECT_EQ(grid_power(t, 2), grid_table(compose(tent, tent), 64, RasterMode::kGridPoints));
  EXPECT_EQ(grid_transpose(grid_transpose(t)), t);
}

}  // namespace
}  // namespace usc
