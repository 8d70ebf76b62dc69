#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "usc/piece.h"
#include "usc/rational.h"
#include "usc/relation.h"

namespace usc {

struct ExampleSpec {
  std::string name;
  std::map<std::string, Rational> params;
};

struct ExpectedFlags {
  bool idempotent = false;
  bool surjective = false;
  bool continuum_valued = false;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  ExpectedFlags flags;  // for the default parameters
  std::vector<std::string> params;  // accepted parameter names
};

// Catalog in a fixed order; "example-6.4" is listed as an alias of "mirror".
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(std::string_view name);  // throws kUnknownExample

// Missing parameters take their default (a = 1/2). Unknown names throw
// Error(kUnknownExample); unknown parameters throw Error(kInvalidArgument).
Relation make_example(const ExampleSpec& spec);
Relation make_example(std::string_view name);

// Δ ∪ K. Every vertex of every piece of K must equal (a,a) or lie in the
// open region x < a, y > a. Throws Error(kRegionViolation) naming the piece
// and point, or Error(kInvalidArgument) unless 0 < a < 1.
Relation make_lemma44(const Rational& a, const std::vector<Piece>& k,
                      const std::string& name = "lemma-4.4");

// `count` pieces with coordinates on the 1/64 grid inside the region above.
// Deterministic for a given seed.
Relation random_lemma44(std::uint64_t seed, const Rational& a, int count);

}  // namespace usc
