#include "usc/coverage.h"

#include <map>

#include "usc/error.h"

namespace usc {

namespace {

// Range of a·x over the current cell, cached per coefficient vector.
struct Range {
  Rational lo;
  Rational hi;
};

class RangeCache {
 public:
  explicit RangeCache(const CellLp& lp) : lp_(lp) {}

  const Range& of(const std::vector<Rational>& a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    Range r{lp_.minimize(a).value, lp_.maximize(a).value};
    return cache_.emplace(a, std::move(r)).first->second;
  }

 private:
  const CellLp& lp_;
  std::map<std::vector<Rational>, Range> cache_;
};

enum class Relation { kContains, kDisjoint, kTouches };

Relation classify(RangeCache& ranges, const Cell& cell, const Cell& q) {
  bool contains = true;
  for (const auto& c : q.constraints()) {
    const Range& r = ranges.of(c.coefficients);
    if (c.kind == ConstraintKind::kLessEqual) {
      if (r.lo > c.bound) return Relation::kDisjoint;
      if (r.hi > c.bound) contains = false;
    } else {
      if (r.lo > c.bound || r.hi < c.bound) return Relation::kDisjoint;
      if (r.lo != c.bound || r.hi != c.bound) contains = false;
    }
  }
  if (contains) return Relation::kContains;
  return cell_feasible(cell.intersect(q)) ? Relation::kTouches
                                          : Relation::kDisjoint;
}

CoverageResult cover_rec(const Cell& cell, std::span<const Cell> cover) {
  CellLp lp(cell);
  if (!lp.feasible()) return {true, std::nullopt};
  RangeCache ranges(lp);

  std::vector<const Cell*> touching;
  for (const Cell& q : cover) {
    switch (classify(ranges, cell, q)) {
      case Relation::kContains: return {true, std::nullopt};
      case Relation::kTouches: touching.push_back(&q); break;
      case Relation::kDisjoint: break;
    }
  }
  if (touching.empty()) return {false, lp.witness()};

  // Split along the first hyperplane that cuts the cell strictly.
  for (const Cell* q : touching) {
    for (const auto& c : q->constraints()) {
      const Range& r = ranges.of(c.coefficients);
      if (!(r.lo < c.bound && c.bound < r.hi)) continue;
      std::vector<Rational> neg(c.coefficients);
      for (auto& v : neg) v = -v;
      const Cell below = cell.with(LinearConstraint::less_equal(c.coefficients, c.bound));
      const Cell above = cell.with(LinearConstraint::less_equal(std::move(neg), -c.bound));
      CoverageResult lower = cover_rec(below, cover);
      if (!lower.covered) return lower;
      return cover_rec(above, cover);
    }
  }

  // Every touching cover cell meets the cell only inside a proper face
  // {a·x = lo} (or {a·x = hi}). Averaging the opposite extreme points with the
  // cell witness gives a point strictly off all those faces.
  const std::size_t n = cell.dim();
  std::vector<Rational> centroid(n);
  std::size_t count = 0;
  for (const Cell* q : touching) {
    for (const auto& c : q->constraints()) {
      const Range& r = ranges.of(c.coefficients);
      const bool off_low = r.lo >= c.bound && r.hi > c.bound;
      const bool off_high =
          c.kind == ConstraintKind::kEqual && r.hi <= c.bound && r.lo < c.bound;
      if (!off_low && !off_high) continue;
      const auto extreme = off_low ? lp.maximize(c.coefficients).point
                                   : lp.minimize(c.coefficients).point;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += extreme[i];
      ++count;
      break;
    }
  }
  std::vector<Rational> witness = lp.witness();
  if (count > 0) {
    const Rational k(static_cast<long>(count));
    for (std::size_t i = 0; i < n; ++i) {
      witness[i] = midpoint(witness[i], centroid[i] / k);
    }
  }
  return {false, std::move(witness)};
}

}  // namespace

CoverageResult cell_in_union(const Cell& cell, std::span<const Cell> cover) {
  for (const Cell& q : cover) {
    if (q.dim() != cell.dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "cover cell has a different dimension");
    }
  }
  return cover_rec(cell, cover);
}

bool cell_contains(const Cell& outer, const Cell& inner) {
  return cell_in_union(inner, std::span<const Cell>(&outer, 1)).covered;
}

}  // namespace usc
