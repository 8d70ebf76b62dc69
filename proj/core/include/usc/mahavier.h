#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "usc/cell.h"
#include "usc/relation.h"
#include "usc/verdict.h"

namespace usc {

// Finite chain β1 ≺ … ≺ βn with bonding relations f_ij : X_j -> 2^{X_i}
// for i < j (indices 0-based). f_ii is the identity and never stored.
class ChainSystem {
 public:
  using BondTable = std::map<std::pair<std::size_t, std::size_t>, Relation>;

  // f_ij = f^(j-i), the (j-i)-fold composition of f.
  static ChainSystem single(const Relation& f, std::size_t n);
  // Every pair i < j must be present. Throws Error(kInvalidArgument).
  static ChainSystem table(std::size_t n, BondTable bonds);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_single() const { return base_.has_value(); }
  const Relation& base() const { return *base_; }
  const Relation& bond(std::size_t i, std::size_t j) const;
  // Sub-chain on the given strictly increasing indices, as a table.
  ChainSystem restrict_to(const std::vector<std::size_t>& indices) const;

 private:
  ChainSystem() = default;
  std::vector<std::string> labels_;
  std::optional<Relation> base_;
  BondTable bonds_;
};

enum class Semantics {
  kConsecutive,  // K-set: x_i ∈ f_{i,i+1}(x_{i+1})
  kAllPairs,     // G-set: x_i ∈ f_ij(x_j) for all i < j
};

const char* semantics_name(Semantics s);

// Finite Mahavier product as a union of nonempty convex cells.
// `coordinates[k]` names the chain index carried by axis k, which lets
// projections and reversals stay traceable to their source.
struct GSet {
  std::size_t dim = 0;
  std::vector<Cell> cells;
  Semantics semantics = Semantics::kConsecutive;
  std::shared_ptr<const ChainSystem> source;
  std::vector<std::size_t> coordinates;
  // Constraint family used when the cells were built from `source`;
  // unchanged by projection and reversal.
  Semantics built_with = Semantics::kConsecutive;
};

struct ExactnessResult {
  bool exact = false;
  std::optional<std::array<std::size_t, 3>> witness;  // failing (i, j, k)
};

// f_ij ∘ f_jk = f_ik for every i < j < k.
ExactnessResult exactness_check(const ChainSystem& s);

// One cell per combination of piece choices (one piece per constrained pair),
// enumerated depth-first with infeasible prefixes pruned. The pair
// constraint "x_i ∈ f_ij(x_j)" places (x_j, x_i) in Graph(f_ij).
// Cells equal as point sets are kept once.
GSet build_gset(std::shared_ptr<const ChainSystem> s, Semantics semantics);
GSet build_gset(const ChainSystem& s, Semantics semantics);

// K(n) of a single relation.
GSet k_set(const Relation& f, std::size_t n);

struct Connectivity {
  bool connected = false;
  int components = 0;
  std::vector<std::vector<std::size_t>> groups;  // cell indices
};

// Cells are compact and convex, so the union is connected iff the graph of
// pairwise intersecting cells is connected.
Connectivity gset_connected(const GSet& g);

// Cells not contained in any other cell.
std::size_t maximal_cell_count(const GSet& g);

// Projection onto the 0-based increasing coordinates `keep`.
GSet project_gset(const GSet& g, const std::vector<std::size_t>& keep);

struct SetComparison {
  bool equal = false;
  std::optional<std::vector<Rational>> witness;  // in exactly one of the sets
  bool witness_in_first = false;
};

// Throws Error(kDimensionMismatch).
SetComparison gset_equal(const GSet& a, const GSet& b);

GSet reverse_gset(const GSet& g);

// G-set on a sub-chain built directly from its bonding relations (all pairs).
// A one-element subset gives the unit interval with no source system.
GSet direct_gset(const ChainSystem& s, const std::vector<std::size_t>& subset);

enum class CordialityStatus { kEqual, kStrictSubset, kNotContained };

const char* cordiality_status_name(CordialityStatus s);

struct CordialityEntry {
  std::vector<std::size_t> subset;  // 0-based
  CordialityStatus status = CordialityStatus::kEqual;
  // kStrictSubset: in the direct G-set, outside the projection.
  std::optional<std::vector<Rational>> witness;
};

// All nonempty proper subsets of {0..n-1}, by size then lexicographically.
std::vector<std::vector<std::size_t>> proper_subsets(std::size_t n);

// Compares the projection of K(n) onto each subset with the G-set built
// directly on that sub-chain. Empty `subsets` means all proper subsets.
std::vector<CordialityEntry> cordiality_report(
    const Relation& f, std::size_t n,
    std::vector<std::vector<std::size_t>> subsets = {});

// Decides connectedness of every K(n) where a finite certificate exists, or
// checks n = 2..max_n otherwise. See README for the route order.
Verdict certify_continuum(
    const Relation& f, int max_n,
    const std::optional<std::vector<std::vector<std::size_t>>>& decomposition =
        std::nullopt);

}  // namespace usc
