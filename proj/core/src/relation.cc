#include "usc/relation.h"

#include <algorithm>
#include <sstream>

#include "union_find.h"
#include "usc/coverage.h"
#include "usc/error.h"

namespace usc {

namespace {

IntervalSet x_projection(std::span<const Piece> pieces) {
  std::vector<Interval> xs;
  for (const auto& p : pieces) xs.push_back(p.x_extent());
  return normalize_intervals(std::move(xs));
}

IntervalSet y_projection(std::span<const Piece> pieces) {
  std::vector<Interval> ys;
  for (const auto& p : pieces) ys.push_back(p.y_extent());
  return normalize_intervals(std::move(ys));
}

}  // namespace

std::optional<Rational> domain_gap(std::span<const Piece> pieces) {
  return first_uncovered(x_projection(pieces), Interval::unit());
}

Relation::Relation(std::string name, std::vector<Piece> pieces)
    : name_(std::move(name)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "relation '" + name_ + "' has no pieces");
  }
  if (auto gap = domain_gap(pieces_)) {
    throw Error(ErrorCode::kNotTotal,
                "relation '" + name_ + "' is not total: f(" + gap->str() + ") is empty",
                {*gap});
  }
}

Relation Relation::renamed(std::string name) const {
  Relation out = *this;
  out.name_ = std::move(name);
  return out;
}

IntervalSet slice(const Relation& r, const Rational& x) {
  std::vector<Interval> ys;
  for (const auto& p : r.pieces()) {
    if (auto f = p.fiber(x)) ys.push_back(*f);
  }
  return normalize_intervals(std::move(ys));
}

IntervalSet image(const Relation& r, const IntervalSet& a) {
  std::vector<Interval> ys;
  for (const auto& p : r.pieces()) {
    for (const auto& window : a.intervals()) {
      if (auto y = p.image_of(window)) ys.push_back(*y);
    }
  }
  return normalize_intervals(std::move(ys));
}

ValueCheck is_surjective(const Relation& r) {
  auto gap = first_uncovered(y_projection(r.pieces()), Interval::unit());
  return {!gap.has_value(), gap};
}

Relation inverse(const Relation& r) {
  if (auto gap = is_surjective(r).witness) {
    throw Error(ErrorCode::kNotSurjective,
                "relation '" + r.name() + "' is not surjective: no preimage of " +
                    gap->str(),
                {*gap});
  }
  std::vector<Piece> swapped;
  swapped.reserve(r.pieces().size());
  for (const auto& p : r.pieces()) swapped.push_back(p.transposed());
  return Relation(r.name() + "^-1", std::move(swapped));
}

namespace {

bool same_line(const Segment& a, const Segment& b) {
  return a.slope() == b.slope() && a.y_at(b.from.x) == b.from.y;
}

// Union of a and b when it is itself a single convex piece.
std::optional<Piece> merge(const Piece& a, const Piece& b) {
  if (a.is_segment() && b.is_segment()) {
    const Segment& s = a.as_segment();
    const Segment& t = b.as_segment();
    if (!same_line(s, t) || t.from.x > s.to.x || s.from.x > t.to.x) return std::nullopt;
    const Point& from = s.from.x <= t.from.x ? s.from : t.from;
    const Point& to = s.to.x >= t.to.x ? s.to : t.to;
    return Piece::segment(from, to);
  }
  if (a.is_rect() && b.is_rect()) {
    const Rect& r = a.as_rect();
    const Rect& q = b.as_rect();
    if (r.x == q.x && r.y.overlaps(q.y)) {
      return Piece::rect(r.x, Interval(min(r.y.lo(), q.y.lo()), max(r.y.hi(), q.y.hi())));
    }
    if (r.y == q.y && r.x.overlaps(q.x)) {
      return Piece::rect(Interval(min(r.x.lo(), q.x.lo()), max(r.x.hi(), q.x.hi())), r.y);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Piece> simplify_pieces(std::vector<Piece> pieces) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pieces.size() && !changed; ++i) {
      for (std::size_t j = 0; j < pieces.size() && !changed; ++j) {
        if (i == j) continue;
        if (piece_contains(pieces[i], pieces[j])) {
          pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        } else if (auto m = merge(pieces[i], pieces[j])) {
          pieces[std::min(i, j)] = *m;
          pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
          changed = true;
        }
      }
    }
  }
  return pieces;
}

Relation compose(const Relation& g, const Relation& f) {
  std::vector<Piece> out;
  for (const auto& fp : f.pieces()) {
    for (const auto& gp : g.pieces()) {
      if (auto c = compose_pieces(gp, fp)) out.push_back(*c);
    }
  }
  return Relation(g.name() + "∘" + f.name(), simplify_pieces(std::move(out)));
}

namespace {

void bound_coordinate(std::vector<LinearConstraint>& out, std::size_t dim,
                      std::size_t coord, const Interval& range) {
  auto unit = [&](long sign) {
    std::vector<Rational> a(dim);
    a[coord] = Rational(sign);
    return a;
  };
  if (range.is_point()) {
    out.push_back(LinearConstraint::equal(unit(1), range.lo()));
    return;
  }
  if (range.lo().sign() > 0) out.push_back(LinearConstraint::less_equal(unit(-1), -range.lo()));
  if (range.hi() < Rational(1)) out.push_back(LinearConstraint::less_equal(unit(1), range.hi()));
}

}  // namespace

std::vector<LinearConstraint> piece_constraints(const Piece& p, std::size_t dim,
                                                std::size_t input, std::size_t output) {
  std::vector<LinearConstraint> out;
  if (p.is_rect()) {
    bound_coordinate(out, dim, input, p.as_rect().x);
    bound_coordinate(out, dim, output, p.as_rect().y);
    return out;
  }
  // (to.y - from.y) (u - from.x) = (to.x - from.x) (v - from.y)
  const Segment& s = p.as_segment();
  const Rational dy = s.to.y - s.from.y;
  const Rational dx = s.to.x - s.from.x;
  std::vector<Rational> a(dim);
  a[input] = dy;
  a[output] = -dx;
  out.push_back(LinearConstraint::equal(std::move(a), dy * s.from.x - dx * s.from.y).normalized());
  bound_coordinate(out, dim, input, p.x_extent());
  return out;
}

Cell piece_cell(const Piece& p) { return Cell(2, piece_constraints(p, 2, 0, 1)); }

namespace {

std::vector<Cell> piece_cells(const Relation& r) {
  std::vector<Cell> cells;
  cells.reserve(r.pieces().size());
  for (const auto& p : r.pieces()) cells.push_back(piece_cell(p));
  return cells;
}

std::optional<Point> first_uncovered_point(const std::vector<Cell>& mine,
                                           const std::vector<Cell>& theirs) {
  for (const auto& c : mine) {
    auto res = cell_in_union(c, theirs);
    if (!res.covered) return Point{(*res.witness)[0], (*res.witness)[1]};
  }
  return std::nullopt;
}

}  // namespace

CheckResult equal(const Relation& a, const Relation& b) {
  const auto ca = piece_cells(a);
  const auto cb = piece_cells(b);
  if (auto w = first_uncovered_point(ca, cb)) return {false, w};
  if (auto w = first_uncovered_point(cb, ca)) return {false, w};
  return {true, std::nullopt};
}

CheckResult is_idempotent(const Relation& r) { return equal(compose(r, r), r); }

std::vector<Rational> slice_breakpoints(std::span<const Piece> pieces) {
  std::vector<Rational> xs{Rational(0), Rational(1)};
  struct Line {
    Rational slope;
    Rational intercept;
  };
  std::vector<Line> lines;
  for (const auto& p : pieces) {
    xs.push_back(p.x_extent().lo());
    xs.push_back(p.x_extent().hi());
    if (p.is_rect()) {
      lines.push_back({Rational(0), p.as_rect().y.lo()});
      lines.push_back({Rational(0), p.as_rect().y.hi()});
    } else {
      const Segment& s = p.as_segment();
      lines.push_back({s.slope(), s.from.y - s.slope() * s.from.x});
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].slope == lines[j].slope) continue;
      Rational x = (lines[j].intercept - lines[i].intercept) /
                   (lines[i].slope - lines[j].slope);
      if (x.sign() >= 0 && x <= Rational(1)) xs.push_back(std::move(x));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

ValueCheck is_continuum_valued(const Relation& r) {
  const auto xs = slice_breakpoints(r.pieces());
  // Generic points first, so witnesses avoid degenerate x where possible.
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational mid = midpoint(xs[i], xs[i + 1]);
    if (!slice(r, mid).is_single_interval()) return {false, mid};
  }
  for (const auto& x : xs) {
    if (!slice(r, x).is_single_interval()) return {false, x};
  }
  return {true, std::nullopt};
}

Components graph_components(const Relation& r) {
  const auto& ps = r.pieces();
  internal::UnionFind uf(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (piece_intersects(ps[i], ps[j])) uf.unite(i, j);
    }
  }
  Components out;
  out.groups = uf.groups();
  out.count = static_cast<int>(out.groups.size());
  return out;
}

Diagnostics validate(const std::string& name, std::span<const Piece> pieces) {
  Diagnostics d;
  if (pieces.empty()) {
    d.rejected = "relation has no pieces";
    return d;
  }
  if (auto gap = domain_gap(pieces)) {
    d.rejected = "not total: f(" + gap->str() + ") is empty";
    d.witnesses.push_back({"domain-gap x", {*gap}});
    return d;
  }
  return validate(Relation(name, {pieces.begin(), pieces.end()}));
}

Diagnostics validate(const Relation& r) {
  Diagnostics d;
  d.total = true;
  const auto surj = is_surjective(r);
  d.surjective = surj.value;
  if (!surj.value) d.witnesses.push_back({"uncovered y", {*surj.witness}});
  const auto idem = is_idempotent(r);
  d.idempotent = idem.value;
  if (!idem.value) {
    d.witnesses.push_back({"f∘f vs f difference (x,y)", {idem.witness->x, idem.witness->y}});
  }
  const auto comps = graph_components(r);
  d.graph_components = comps.count;
  if (comps.count > 1) {
    const Point p = r.pieces()[comps.groups[1].front()].vertices().front();
    d.witnesses.push_back({"point in second graph component (x,y)", {p.x, p.y}});
  }
  const auto cv = is_continuum_valued(r);
  d.continuum_valued = cv.value;
  if (!cv.value) d.witnesses.push_back({"disconnected value at x", {*cv.witness}});
  return d;
}

Verdict verify_nall_decomposition(const Relation& r,
                                  const std::vector<std::vector<std::size_t>>& groups) {
  const auto& ps = r.pieces();
  std::vector<bool> used(ps.size(), false);
  for (const auto& g : groups) {
    for (std::size_t idx : g) {
      if (idx >= ps.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "decomposition references piece " + std::to_string(idx) + " of " +
                        std::to_string(ps.size()));
      }
      used[idx] = true;
    }
  }

  Verdict v;
  v.kind = VerdictKind::kRejected;
  auto unused = std::find(used.begin(), used.end(), false);
  if (unused != used.end()) {
    v.reason = "PIECE_NOT_COVERED";
    v.evidence = "piece " + std::to_string(unused - used.begin()) +
                 " belongs to no group";
    return v;
  }
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    std::vector<Piece> sub;
    for (std::size_t idx : groups[gi]) sub.push_back(ps[idx]);
    if (sub.empty()) {
      v.reason = "GROUP_NOT_TOTAL";
      v.evidence = "group " + std::to_string(gi) + " is empty";
      return v;
    }
    if (auto gap = domain_gap(sub)) {
      v.reason = "GROUP_NOT_TOTAL";
      v.evidence = "group " + std::to_string(gi) + " has empty value at x=" + gap->str();
      v.witnesses.push_back({"group " + std::to_string(gi) + " domain gap x", {*gap}});
      return v;
    }
    const Relation part(r.name() + "#" + std::to_string(gi), std::move(sub));
    const auto cv = is_continuum_valued(part);
    if (!cv.value) {
      v.reason = "GROUP_NOT_CONTINUUM_VALUED";
      v.evidence = "group " + std::to_string(gi) + ": value at x=" + cv.witness->str() +
                   " is " + [&] {
                     std::ostringstream os;
                     os << slice(part, *cv.witness);
                     return os.str();
                   }() + ", disconnected";
      v.witnesses.push_back({"group " + std::to_string(gi) + " disconnected value x",
                             {*cv.witness}});
      return v;
    }
  }
  const auto comps = graph_components(r);
  if (comps.count != 1) {
    v.reason = "GRAPH_DISCONNECTED";
    v.evidence = "graph has " + std::to_string(comps.count) + " components";
    return v;
  }
  v.kind = VerdictKind::kCertifiedAllN;
  v.evidence = "graph is connected and covered by " + std::to_string(groups.size()) +
               " total continuum-valued group(s); every K(n) is connected";
  return v;
}

}  // namespace usc
