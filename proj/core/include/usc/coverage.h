#pragma once

#include <optional>
#include <span>
#include <vector>

#include "usc/cell.h"

namespace usc {

struct CoverageResult {
  bool covered = false;
  // When not covered: a point of the cell outside every cover cell.
  std::optional<std::vector<Rational>> witness;
};

// Decides whether `cell` lies inside the union of `cover`. Recursively splits
// the cell along hyperplanes of the cover cells that cut it in two nonempty
// halves; a branch is covered once one cover cell contains it. All cells must
// share a dimension (Error(kDimensionMismatch) otherwise).
CoverageResult cell_in_union(const Cell& cell, std::span<const Cell> cover);

// Single-cell containment: inner ⊆ outer.
bool cell_contains(const Cell& outer, const Cell& inner);

}  // namespace usc
