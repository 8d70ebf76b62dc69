#pragma once

#include <cstdint>
#include <vector>

#include "usc/mahavier.h"
#include "usc/rational.h"
#include "usc/relation.h"

// Brute-force grid oracles, independent of the cell machinery. Used by tests
// to cross-check exact verdicts.
namespace usc {

enum class RasterMode {
  // Grid points within one step (max metric) of a marked square of every
  // constrained pair. Over-approximates; used for connectivity.
  kThick,
  // Grid points lying exactly in every constrained pair's graph, with grid
  // points as the only intermediate values. Used for set comparisons.
  kGridPoints,
};

struct Raster {
  Rational step;
  int k = 0;  // step = 1/k
  std::size_t dim = 0;
  RasterMode mode = RasterMode::kThick;
  // Packed, sorted, unique coordinates (9 bits each). Relation rasters store
  // square indices in [0,k); G-set rasters store grid indices in [0,k].
  std::vector<std::uint64_t> bits;

  std::size_t count() const { return bits.size(); }
  bool marked(const std::vector<int>& index) const;
  friend bool operator==(const Raster&, const Raster&) = default;
};

// Boolean table t[input][output] over grid indices 0..k.
using GridTable = std::vector<std::vector<char>>;

// Constraint x_output ∈ table[x_input] on tuple coordinates.
struct PairTable {
  std::size_t output;
  std::size_t input;
  GridTable table;
};

std::uint64_t pack_index(const std::vector<int>& index);
std::vector<int> unpack_index(std::uint64_t key, std::size_t dim);

// Squares [i/k,(i+1)/k] x [j/k,(j+1)/k] meeting the graph; index (i, j).
// Requires step = 1/k with 8 <= k <= 256 (Error(kInvalidArgument)).
Raster raster_oracle(const Relation& r, const Rational& step = Rational(1, 64));

GridTable grid_table(const Relation& r, int k, RasterMode mode);
GridTable grid_transpose(const GridTable& t);
// (second ∘ first) with grid intermediates.
GridTable grid_compose(const GridTable& second, const GridTable& first);
GridTable grid_power(const GridTable& t, int m);

// Tuples of grid indices in [0,k]^dim meeting every pair constraint,
// projected (existentially) onto `keep` in the given order.
Raster raster_product(int k, std::size_t dim, const std::vector<PairTable>& constraints,
                      const std::vector<std::size_t>& keep, RasterMode mode);

// The G-set described by g.source, g.built_with and g.coordinates. For a
// single-function source the pair tables are grid powers of f. Requires a
// source chain of length <= 4 (Error(kInvalidArgument)). A G-set without a
// source is the unit interval.
Raster raster_oracle(const GSet& g, const Rational& step = Rational(1, 64),
                     RasterMode mode = RasterMode::kThick);

// K(n) of f with all constrained pairs (i, i+1) or (i, j), projected onto keep.
Raster raster_chain(const Relation& f, std::size_t n, Semantics semantics,
                    const std::vector<std::size_t>& keep, int k, RasterMode mode);

// Face-adjacent flood fill over marked entries.
int raster_components(const Raster& r);

// True when some marked entry is within one grid step of `point`
// (square containment for relation rasters).
bool raster_near(const Raster& r, const std::vector<Rational>& point);

}  // namespace usc
