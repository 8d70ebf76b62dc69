#pragma once

#include <string>

#include "usc/mahavier.h"
#include "usc/relation.h"

namespace usc::cli {

// Unit square, y upward. Output depends only on the input.
std::string render_relation_svg(const Relation& r);

// One panel for dim 1 or 2, three coordinate-pair panels for dim 3.
// Cell outlines come from LP extreme points in eight directions and are for
// display only. Throws Error(kDimensionMismatch) above dim 3.
std::string render_gset_svg(const GSet& g, const std::string& title);

}  // namespace usc::cli
