#pragma once

#include <optional>
#include <ostream>
#include <variant>

#include "usc/interval_set.h"
#include "usc/rational.h"

namespace usc {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << "(" << p.x << "," << p.y << ")";
  }
};

// Axis-aligned rectangle, possibly degenerate to a segment or a point.
struct Rect {
  Interval x;
  Interval y;
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Non-axis-parallel segment with from.x < to.x.
struct Segment {
  Point from;
  Point to;

  Rational slope() const { return (to.y - from.y) / (to.x - from.x); }
  Rational y_at(const Rational& x) const {
    return from.y + (x - from.x) * slope();
  }
  Rational x_at(const Rational& y) const {
    return from.x + (y - from.y) / slope();
  }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Convex building block of a relation graph in the unit square. All
// axis-parallel content is held as a Rect, so a Segment is never horizontal
// or vertical.
class Piece {
 public:
  static Piece rect(Interval x, Interval y);
  static Piece point(const Point& p);
  // Canonicalizes: degenerate or axis-parallel input becomes a Rect, and the
  // endpoints are ordered by x. Coordinates must lie in [0,1].
  static Piece segment(const Point& a, const Point& b);

  bool is_rect() const { return std::holds_alternative<Rect>(shape_); }
  bool is_segment() const { return std::holds_alternative<Segment>(shape_); }
  bool is_point() const;
  const Rect& as_rect() const { return std::get<Rect>(shape_); }
  const Segment& as_segment() const { return std::get<Segment>(shape_); }

  Interval x_extent() const;
  Interval y_extent() const;
  bool contains(const Point& p) const;
  // Values {y : (x, y) in piece}; nullopt when x is outside the x-extent.
  std::optional<Interval> fiber(const Rational& x) const;
  // y-range over the x-window, or nullopt when the window misses the piece.
  std::optional<Interval> image_of(const Interval& window) const;
  // Piece with coordinates swapped (graph of the inverse).
  Piece transposed() const;
  // Corner points for rects (deduplicated) or the two endpoints.
  std::vector<Point> vertices() const;

  friend bool operator==(const Piece&, const Piece&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Piece& p);

 private:
  explicit Piece(std::variant<Rect, Segment> shape) : shape_(std::move(shape)) {}
  std::variant<Rect, Segment> shape_;
};

bool piece_intersects(const Piece& p, const Piece& q);
// Point-set containment of inner in outer.
bool piece_contains(const Piece& outer, const Piece& inner);

// Graph piece of (second ∘ first) restricted to these two pieces: the set of
// (x, z) with (x, y) in first and (y, z) in second for some y.
std::optional<Piece> compose_pieces(const Piece& second, const Piece& first);

}  // namespace usc
