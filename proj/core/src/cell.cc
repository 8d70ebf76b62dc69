#include "usc/cell.h"

#include <algorithm>

#include "usc/error.h"

namespace usc {

LinearConstraint LinearConstraint::less_equal(std::vector<Rational> coefficients,
                                              Rational bound) {
  return {std::move(coefficients), std::move(bound), ConstraintKind::kLessEqual};
}

LinearConstraint LinearConstraint::equal(std::vector<Rational> coefficients,
                                         Rational bound) {
  return {std::move(coefficients), std::move(bound), ConstraintKind::kEqual};
}

bool LinearConstraint::is_trivial() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

Rational LinearConstraint::evaluate(std::span<const Rational> x) const {
  Rational sum;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!coefficients[i].is_zero()) sum += coefficients[i] * x[i];
  }
  return sum;
}

bool LinearConstraint::satisfied_by(std::span<const Rational> x) const {
  const Rational lhs = evaluate(x);
  return kind == ConstraintKind::kEqual ? lhs == bound : lhs <= bound;
}

LinearConstraint LinearConstraint::normalized() const {
  auto lead = std::find_if(coefficients.begin(), coefficients.end(),
                           [](const Rational& c) { return !c.is_zero(); });
  if (lead == coefficients.end()) return *this;
  Rational scale = lead->abs();
  if (kind == ConstraintKind::kEqual && lead->sign() < 0) scale = -scale;
  LinearConstraint out = *this;
  for (auto& c : out.coefficients) c /= scale;
  out.bound /= scale;
  return out;
}

LinearConstraint LinearConstraint::reversed() const {
  LinearConstraint out = *this;
  std::reverse(out.coefficients.begin(), out.coefficients.end());
  return out;
}

std::ostream& operator<<(std::ostream& os, const LinearConstraint& c) {
  bool first = true;
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
    const Rational& a = c.coefficients[i];
    if (a.is_zero()) continue;
    if (!first) os << (a.sign() > 0 ? " + " : " - ");
    else if (a.sign() < 0) os << "-";
    first = false;
    const Rational mag = a.abs();
    if (mag != Rational(1)) os << mag << "*";
    os << "x" << (i + 1);
  }
  if (first) os << "0";
  return os << (c.kind == ConstraintKind::kEqual ? " = " : " <= ") << c.bound;
}

Cell::Cell(std::size_t dim, std::vector<LinearConstraint> constraints)
    : dim_(dim), constraints_(std::move(constraints)) {
  if (dim_ == 0) throw Error(ErrorCode::kInvalidArgument, "cell of dimension 0");
  for (const auto& c : constraints_) {
    if (c.dim() != dim_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "constraint length does not match cell dimension");
    }
  }
}

std::vector<LinearConstraint> Cell::all_constraints() const {
  std::vector<LinearConstraint> out;
  out.reserve(2 * dim_ + constraints_.size());
  for (std::size_t i = 0; i < dim_; ++i) {
    std::vector<Rational> lo(dim_), hi(dim_);
    lo[i] = Rational(-1);
    hi[i] = Rational(1);
    out.push_back(LinearConstraint::less_equal(std::move(lo), Rational(0)));
    out.push_back(LinearConstraint::less_equal(std::move(hi), Rational(1)));
  }
  out.insert(out.end(), constraints_.begin(), constraints_.end());
  return out;
}

bool Cell::contains(std::span<const Rational> x) const {
  if (x.size() != dim_) return false;
  for (const auto& v : x) {
    if (v < Rational(0) || v > Rational(1)) return false;
  }
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const LinearConstraint& c) { return c.satisfied_by(x); });
}

Cell Cell::with(LinearConstraint c) const {
  auto cs = constraints_;
  cs.push_back(std::move(c));
  return Cell(dim_, std::move(cs));
}

Cell Cell::with(std::span<const LinearConstraint> extra) const {
  auto cs = constraints_;
  cs.insert(cs.end(), extra.begin(), extra.end());
  return Cell(dim_, std::move(cs));
}

Cell Cell::intersect(const Cell& other) const {
  if (other.dim_ != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "intersecting cells of different dimension");
  }
  return with(other.constraints_);
}

Cell Cell::reversed() const {
  std::vector<LinearConstraint> cs;
  cs.reserve(constraints_.size());
  for (const auto& c : constraints_) cs.push_back(c.reversed());
  return Cell(dim_, std::move(cs));
}

std::ostream& operator<<(std::ostream& os, const Cell& c) {
  os << "cell[" << c.dim() << "]{";
  for (std::size_t i = 0; i < c.constraints().size(); ++i) {
    if (i) os << "; ";
    os << c.constraints()[i];
  }
  return os << "}";
}

std::optional<std::vector<Rational>> cell_feasible(const Cell& cell) {
  CellLp lp(cell);
  if (!lp.feasible()) return std::nullopt;
  return lp.witness();
}

Rational cell_max(const Cell& cell, std::span<const Rational> objective) {
  return CellLp(cell).maximize(objective).value;
}

}  // namespace usc
