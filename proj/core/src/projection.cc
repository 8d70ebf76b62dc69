#include "usc/projection.h"

#include <algorithm>

#include "usc/error.h"

namespace usc {

namespace {

using Constraints = std::vector<LinearConstraint>;

// Maximum of a·x over the unit box.
Rational box_max(const LinearConstraint& c) {
  Rational sum;
  for (const auto& a : c.coefficients) {
    if (a.sign() > 0) sum += a;
  }
  return sum;
}

Rational box_min(const LinearConstraint& c) {
  Rational sum;
  for (const auto& a : c.coefficients) {
    if (a.sign() < 0) sum += a;
  }
  return sum;
}

LinearConstraint contradiction(std::size_t dim) {
  std::vector<Rational> a(dim);
  a[0] = Rational(1);
  return LinearConstraint::less_equal(std::move(a), Rational(-1));
}

// Normalizes, removes trivial / box-implied / duplicate rows. Returns false
// when the system is detectably empty.
bool tidy(Constraints& cs) {
  Constraints out;
  for (auto& raw : cs) {
    LinearConstraint c = raw.normalized();
    if (c.is_trivial()) {
      const bool ok = c.kind == ConstraintKind::kEqual ? c.bound.is_zero()
                                                       : c.bound.sign() >= 0;
      if (!ok) return false;
      continue;
    }
    if (c.kind == ConstraintKind::kLessEqual) {
      if (box_max(c) <= c.bound) continue;
      if (box_min(c) > c.bound) return false;
    } else if (c.bound < box_min(c) || c.bound > box_max(c)) {
      return false;
    }
    // Same normal: keep the tighter inequality.
    auto same = std::find_if(out.begin(), out.end(), [&](const LinearConstraint& o) {
      return o.kind == c.kind && o.coefficients == c.coefficients;
    });
    if (same == out.end()) {
      out.push_back(std::move(c));
    } else if (c.kind == ConstraintKind::kLessEqual) {
      if (c.bound < same->bound) same->bound = c.bound;
    } else if (c.bound != same->bound) {
      return false;
    }
  }
  cs = std::move(out);
  return true;
}

// Eliminates variable v from cs. The box bounds of v are made explicit first;
// those of the remaining variables stay implicit.
void eliminate(Constraints& cs, std::size_t v, std::size_t dim) {
  {
    std::vector<Rational> lo(dim), hi(dim);
    lo[v] = Rational(-1);
    hi[v] = Rational(1);
    cs.push_back(LinearConstraint::less_equal(std::move(lo), Rational(0)));
    cs.push_back(LinearConstraint::less_equal(std::move(hi), Rational(1)));
  }

  auto pivot = std::find_if(cs.begin(), cs.end(), [&](const LinearConstraint& c) {
    return c.kind == ConstraintKind::kEqual && !c.coefficients[v].is_zero();
  });
  if (pivot != cs.end()) {
    // v = (bound - sum_{i != v} a_i x_i) / a_v, substituted everywhere.
    const LinearConstraint eq = *pivot;
    cs.erase(pivot);
    const Rational& av = eq.coefficients[v];
    for (auto& c : cs) {
      if (c.coefficients[v].is_zero()) continue;
      const Rational factor = c.coefficients[v] / av;
      for (std::size_t i = 0; i < dim; ++i) {
        if (!eq.coefficients[i].is_zero()) {
          c.coefficients[i] -= factor * eq.coefficients[i];
        }
      }
      c.bound -= factor * eq.bound;
    }
    return;
  }

  Constraints upper, lower, rest;
  for (auto& c : cs) {
    const int s = c.coefficients[v].sign();
    if (s > 0) upper.push_back(std::move(c));
    else if (s < 0) lower.push_back(std::move(c));
    else rest.push_back(std::move(c));
  }
  for (const auto& u : upper) {
    for (const auto& l : lower) {
      // (-l_v) * u + u_v * l cancels v; both multipliers are positive.
      const Rational mu = -l.coefficients[v];
      const Rational ml = u.coefficients[v];
      std::vector<Rational> a(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i == v) continue;
        a[i] = mu * u.coefficients[i] + ml * l.coefficients[i];
      }
      rest.push_back(LinearConstraint::less_equal(
          std::move(a), mu * u.bound + ml * l.bound));
    }
  }
  cs = std::move(rest);
}

}  // namespace

Cell fm_project(const Cell& cell, const std::vector<std::size_t>& keep,
                const ProjectionOptions& options) {
  const std::size_t dim = cell.dim();
  if (keep.empty()) throw Error(ErrorCode::kInvalidArgument, "empty coordinate selection");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= dim || (i > 0 && keep[i] <= keep[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "kept coordinates must be strictly increasing and in range");
    }
  }

  Constraints cs = cell.constraints();
  bool nonempty = tidy(cs);
  for (std::size_t v = 0; v < dim && nonempty; ++v) {
    if (std::binary_search(keep.begin(), keep.end(), v)) continue;
    eliminate(cs, v, dim);
    nonempty = tidy(cs);
  }
  const std::size_t out_dim = keep.size();
  if (!nonempty) return Cell(out_dim, {contradiction(out_dim)});

  Constraints projected;
  projected.reserve(cs.size());
  for (const auto& c : cs) {
    std::vector<Rational> a(out_dim);
    for (std::size_t i = 0; i < out_dim; ++i) a[i] = c.coefficients[keep[i]];
    projected.push_back({std::move(a), c.bound, c.kind});
  }

  if (options.lp_redundancy) {
    for (std::size_t i = 0; i < projected.size();) {
      if (projected[i].kind != ConstraintKind::kLessEqual) {
        ++i;
        continue;
      }
      Constraints others = projected;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
      CellLp lp(Cell(out_dim, others));
      if (lp.feasible() &&
          lp.maximize(projected[i].coefficients).value <= projected[i].bound) {
        projected = std::move(others);
      } else {
        ++i;
      }
    }
  }
  return Cell(out_dim, std::move(projected));
}

}  // namespace usc
