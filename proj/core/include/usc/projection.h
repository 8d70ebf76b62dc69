#pragma once

#include <cstddef>
#include <vector>

#include "usc/cell.h"

namespace usc {

struct ProjectionOptions {
  // Drop inequalities implied by the rest of the system (one LP each).
  bool lp_redundancy = false;
};

// Orthogonal projection of `cell` onto the coordinates in `keep` (0-based,
// strictly increasing). Eliminates the dropped variables one at a time:
// by substitution when an equality involves the variable, by Fourier–Motzkin
// combination otherwise. Exact duplicates and constraints implied by the unit
// box are pruned after every step. An empty input yields an empty cell.
Cell fm_project(const Cell& cell, const std::vector<std::size_t>& keep,
                const ProjectionOptions& options = {});

}  // namespace usc
