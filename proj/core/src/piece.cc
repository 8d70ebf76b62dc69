#include "usc/piece.h"

#include <algorithm>

#include "usc/error.h"

namespace usc {

namespace {

void check_unit(const Point& p) {
  const Rational zero(0), one(1);
  if (p.x < zero || p.x > one || p.y < zero || p.y > one) {
    throw Error(ErrorCode::kInvalidArgument,
                "coordinate outside the unit square",
                {p.x, p.y});
  }
}

Interval hull(const Rational& a, const Rational& b) {
  return a <= b ? Interval(a, b) : Interval(b, a);
}

}  // namespace

Piece Piece::rect(Interval x, Interval y) {
  return Piece(Rect{std::move(x), std::move(y)});
}

Piece Piece::point(const Point& p) {
  check_unit(p);
  return rect(Interval::point(p.x), Interval::point(p.y));
}

Piece Piece::segment(const Point& a, const Point& b) {
  check_unit(a);
  check_unit(b);
  if (a.x == b.x || a.y == b.y) return rect(hull(a.x, b.x), hull(a.y, b.y));
  if (a.x < b.x) return Piece(Segment{a, b});
  return Piece(Segment{b, a});
}

bool Piece::is_point() const {
  return is_rect() && as_rect().x.is_point() && as_rect().y.is_point();
}

Interval Piece::x_extent() const {
  if (is_rect()) return as_rect().x;
  const Segment& s = as_segment();
  return Interval(s.from.x, s.to.x);
}

Interval Piece::y_extent() const {
  if (is_rect()) return as_rect().y;
  const Segment& s = as_segment();
  return hull(s.from.y, s.to.y);
}

bool Piece::contains(const Point& p) const {
  if (is_rect()) return as_rect().x.contains(p.x) && as_rect().y.contains(p.y);
  const Segment& s = as_segment();
  return s.from.x <= p.x && p.x <= s.to.x && s.y_at(p.x) == p.y;
}

std::optional<Interval> Piece::fiber(const Rational& x) const {
  if (!x_extent().contains(x)) return std::nullopt;
  if (is_rect()) return as_rect().y;
  return Interval::point(as_segment().y_at(x));
}

std::optional<Interval> Piece::image_of(const Interval& window) const {
  auto clipped = x_extent().intersect(window);
  if (!clipped) return std::nullopt;
  if (is_rect()) return as_rect().y;
  const Segment& s = as_segment();
  return hull(s.y_at(clipped->lo()), s.y_at(clipped->hi()));
}

Piece Piece::transposed() const {
  if (is_rect()) return rect(as_rect().y, as_rect().x);
  const Segment& s = as_segment();
  return segment(Point{s.from.y, s.from.x}, Point{s.to.y, s.to.x});
}

std::vector<Point> Piece::vertices() const {
  std::vector<Point> out;
  if (is_segment()) {
    out = {as_segment().from, as_segment().to};
    return out;
  }
  const Rect& r = as_rect();
  for (const Rational* x : {&r.x.lo(), &r.x.hi()}) {
    for (const Rational* y : {&r.y.lo(), &r.y.hi()}) {
      Point p{*x, *y};
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Piece& p) {
  if (p.is_rect()) {
    return os << "rect " << p.as_rect().x << "x" << p.as_rect().y;
  }
  return os << "segment " << p.as_segment().from << "-" << p.as_segment().to;
}

namespace {

// Segment clipped to an x-window, or nullopt when it misses the window.
std::optional<std::pair<Rational, Rational>> clip_x(const Segment& s,
                                                    const Interval& window) {
  auto span = Interval(s.from.x, s.to.x).intersect(window);
  if (!span) return std::nullopt;
  return std::make_pair(span->lo(), span->hi());
}

bool segment_meets_rect(const Segment& s, const Rect& r) {
  auto span = clip_x(s, r.x);
  if (!span) return false;
  return hull(s.y_at(span->first), s.y_at(span->second)).overlaps(r.y);
}

bool segments_meet(const Segment& a, const Segment& b) {
  auto span = Interval(a.from.x, a.to.x)
                  .intersect(Interval(b.from.x, b.to.x));
  if (!span) return false;
  // Sign of the vertical gap at both window ends: a crossing or touching
  // exists iff the gap changes sign or vanishes.
  const int lo = (a.y_at(span->lo()) - b.y_at(span->lo())).sign();
  const int hi = (a.y_at(span->hi()) - b.y_at(span->hi())).sign();
  return lo * hi <= 0;
}

}  // namespace

bool piece_intersects(const Piece& p, const Piece& q) {
  if (p.is_rect() && q.is_rect()) {
    return p.as_rect().x.overlaps(q.as_rect().x) &&
           p.as_rect().y.overlaps(q.as_rect().y);
  }
  if (p.is_segment() && q.is_segment()) {
    return segments_meet(p.as_segment(), q.as_segment());
  }
  if (p.is_segment()) return segment_meets_rect(p.as_segment(), q.as_rect());
  return segment_meets_rect(q.as_segment(), p.as_rect());
}

bool piece_contains(const Piece& outer, const Piece& inner) {
  if (outer.is_rect()) {
    const Rect& r = outer.as_rect();
    return r.x.contains(inner.x_extent()) && r.y.contains(inner.y_extent());
  }
  if (inner.is_rect()) {
    return inner.is_point() &&
           outer.contains(Point{inner.as_rect().x.lo(), inner.as_rect().y.lo()});
  }
  const Segment& s = inner.as_segment();
  return outer.contains(s.from) && outer.contains(s.to);
}

std::optional<Piece> compose_pieces(const Piece& second, const Piece& first) {
  // Intermediate coordinate y ranges over first's y-extent and second's
  // x-extent simultaneously.
  auto shared = first.y_extent().intersect(second.x_extent());
  if (!shared) return std::nullopt;

  // x-range of first whose images land in `shared`.
  Interval xs = first.x_extent();
  if (first.is_segment()) {
    const Segment& s = first.as_segment();
    xs = hull(s.x_at(shared->lo()), s.x_at(shared->hi()));
  }

  if (second.is_rect()) {
    return Piece::rect(xs, second.as_rect().y);
  }
  const Segment& g = second.as_segment();
  if (first.is_rect()) {
    // z over the shared y-window, independent of x.
    return Piece::rect(xs, hull(g.y_at(shared->lo()), g.y_at(shared->hi())));
  }
  // Segment after segment: affine with nonzero slope, or a point.
  const Segment& f = first.as_segment();
  const Point a{xs.lo(), g.y_at(f.y_at(xs.lo()))};
  const Point b{xs.hi(), g.y_at(f.y_at(xs.hi()))};
  return Piece::segment(a, b);
}

}  // namespace usc
