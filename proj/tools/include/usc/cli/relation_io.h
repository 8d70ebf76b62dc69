#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "usc/mahavier.h"
#include "usc/relation.h"

namespace usc::cli {

// Relation document: {"name": ..., "pieces": [...]} with piece records
// {"type": "rect", "x": [lo, hi], "y": [lo, hi]} or
// {"type": "segment", "from": [x, y], "to": [x, y]}. Rationals are strings.
// Throws Error(kParse) on malformed text, Error(kInvalidArgument) on
// out-of-range coordinates and Error(kNotTotal) on a non-total relation.
Relation parse_relation(std::string_view text);
std::string serialize_relation(const Relation& r);

// {"groups": [[0, 1], [2]]}, 0-based piece indices.
std::vector<std::vector<std::size_t>> parse_decomposition(std::string_view text);

// {"n": 3, "bonds": [{"from": 1, "to": 2, "relation": {...}}, ...]},
// 1-based labels with from < to.
ChainSystem parse_chain_table(std::string_view text);
std::string serialize_chain_table(const ChainSystem& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// A path to a relation document, or "gallery:NAME".
Relation load_relation(const std::string& source);

}  // namespace usc::cli
