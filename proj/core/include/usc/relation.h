#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "usc/cell.h"
#include "usc/interval_set.h"
#include "usc/piece.h"
#include "usc/verdict.h"

namespace usc {

// Closed graph of a set-valued function [0,1] -> 2^[0,1], held as a finite
// union of pieces. Totality (every f(x) nonempty) is enforced on
// construction.
class Relation {
 public:
  // Throws Error(kNotTotal) with an uncovered x, or Error(kInvalidArgument)
  // for an empty piece list.
  Relation(std::string name, std::vector<Piece> pieces);

  const std::string& name() const { return name_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  Relation renamed(std::string name) const;

  // Representation equality (piece-for-piece). Use `equal` for point sets.
  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::string name_;
  std::vector<Piece> pieces_;
};

// An x in [0,1] with empty value set, if any.
std::optional<Rational> domain_gap(std::span<const Piece> pieces);

struct Diagnostics {
  bool total = false;
  bool surjective = false;
  bool idempotent = false;
  int graph_components = 0;
  bool continuum_valued = false;
  std::vector<Witness> witnesses;
  // Set when the pieces do not describe a total relation.
  std::optional<std::string> rejected;
};

Diagnostics validate(const std::string& name, std::span<const Piece> pieces);
Diagnostics validate(const Relation& r);

IntervalSet slice(const Relation& r, const Rational& x);
IntervalSet image(const Relation& r, const IntervalSet& a);

// Coordinate swap. Throws Error(kNotSurjective) with an uncovered y.
Relation inverse(const Relation& r);

// Graph of g∘f: (x, z) such that y ∈ f(x) and z ∈ g(y) for some y.
Relation compose(const Relation& g, const Relation& f);

// Drops pieces contained in others and merges collinear / abutting pieces.
// The point set is unchanged.
std::vector<Piece> simplify_pieces(std::vector<Piece> pieces);

// Constraints placing the piece on coordinates (x_input, x_output) of
// [0,1]^dim: the pair (x_input, x_output) lies in the piece.
std::vector<LinearConstraint> piece_constraints(const Piece& p, std::size_t dim,
                                                std::size_t input, std::size_t output);

// Convex cell in [0,1]^2 holding the piece, coordinates (x, y).
Cell piece_cell(const Piece& p);

struct CheckResult {
  bool value = false;
  std::optional<Point> witness;
};

// Point-set equality of graphs; the witness lies in exactly one of them.
CheckResult equal(const Relation& a, const Relation& b);
// f∘f = f; the witness lies in the symmetric difference.
CheckResult is_idempotent(const Relation& r);

struct ValueCheck {
  bool value = false;
  std::optional<Rational> witness;
};

// Witness: an uncovered y.
ValueCheck is_surjective(const Relation& r);
// Witness: an x whose value set is disconnected.
ValueCheck is_continuum_valued(const Relation& r);

struct Components {
  int count = 0;
  std::vector<std::vector<std::size_t>> groups;  // piece indices
};

Components graph_components(const Relation& r);

// Certifies a covering of the graph by continuum-valued total sub-relations
// whose union graph is connected. Throws Error(kInvalidArgument) for an
// out-of-range piece index.
Verdict verify_nall_decomposition(
    const Relation& r, const std::vector<std::vector<std::size_t>>& groups);

// Slice breakpoints: piece x-endpoints and crossings of slice boundaries,
// plus 0 and 1, sorted and unique.
std::vector<Rational> slice_breakpoints(std::span<const Piece> pieces);

}  // namespace usc
