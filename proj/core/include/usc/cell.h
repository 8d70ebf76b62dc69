#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "usc/rational.h"

namespace usc {

enum class ConstraintKind { kLessEqual, kEqual };

// coefficients · x (<= | =) bound.
struct LinearConstraint {
  std::vector<Rational> coefficients;
  Rational bound;
  ConstraintKind kind = ConstraintKind::kLessEqual;

  static LinearConstraint less_equal(std::vector<Rational> coefficients,
                                     Rational bound);
  static LinearConstraint equal(std::vector<Rational> coefficients,
                                Rational bound);

  std::size_t dim() const { return coefficients.size(); }
  bool is_trivial() const;  // all coefficients zero
  Rational evaluate(std::span<const Rational> x) const;
  bool satisfied_by(std::span<const Rational> x) const;
  // Positive rescaling so the first nonzero coefficient is +-1 (and +1 for
  // equalities). Two constraints with the same point set compare equal
  // after normalization.
  LinearConstraint normalized() const;
  // Same constraint over permuted / renamed variables.
  LinearConstraint reversed() const;

  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
  friend std::ostream& operator<<(std::ostream& os, const LinearConstraint& c);
};

// Convex rational polytope inside the unit box [0,1]^dim. The box bounds are
// implicit; `constraints()` holds only the additional ones.
class Cell {
 public:
  explicit Cell(std::size_t dim, std::vector<LinearConstraint> constraints = {});

  std::size_t dim() const { return dim_; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  // Box constraints followed by the stored ones.
  std::vector<LinearConstraint> all_constraints() const;
  bool contains(std::span<const Rational> x) const;

  Cell with(LinearConstraint c) const;
  Cell with(std::span<const LinearConstraint> cs) const;
  // Cell of points in both.
  Cell intersect(const Cell& other) const;
  // Coordinates reversed: x_i -> x_{n-1-i}.
  Cell reversed() const;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Cell& c);

 private:
  std::size_t dim_;
  std::vector<LinearConstraint> constraints_;
};

// Exact rational LP over a cell: phase-1/phase-2 tableau simplex with
// Bland's rule. Phase 1 runs once in the constructor; each maximize() call
// restarts phase 2 from the feasible basis.
class CellLp {
 public:
  explicit CellLp(const Cell& cell);
  ~CellLp();
  CellLp(CellLp&&) noexcept;
  CellLp& operator=(CellLp&&) noexcept;

  bool feasible() const;
  // A vertex of the cell; requires feasible().
  const std::vector<Rational>& witness() const;

  struct Optimum {
    Rational value;
    std::vector<Rational> point;
  };
  // Maximum of objective · x; throws Error(kInfeasible) on an empty cell.
  Optimum maximize(std::span<const Rational> objective) const;
  Optimum minimize(std::span<const Rational> objective) const;

 private:
  struct Tableau;
  std::unique_ptr<Tableau> tableau_;
  std::vector<Rational> witness_;
};

// Witness point when the cell is nonempty.
std::optional<std::vector<Rational>> cell_feasible(const Cell& cell);

// Exact maximum of objective · x over the cell. Throws Error(kInfeasible).
Rational cell_max(const Cell& cell, std::span<const Rational> objective);

}  // namespace usc
