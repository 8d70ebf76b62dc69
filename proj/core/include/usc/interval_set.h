#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "usc/rational.h"

namespace usc {

// Closed interval [lo, hi] inside [0, 1]. A point when lo == hi.
class Interval {
 public:
  // Throws Error(kInvalidArgument) unless 0 <= lo <= hi <= 1.
  Interval(Rational lo, Rational hi);
  static Interval point(const Rational& v) { return Interval(v, v); }
  static Interval unit() { return Interval(Rational(0), Rational(1)); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& o) const {
    return lo_ <= o.lo_ && o.hi_ <= hi_;
  }
  bool overlaps(const Interval& o) const {
    return lo_ <= o.hi_ && o.lo_ <= hi_;
  }
  std::optional<Interval> intersect(const Interval& o) const;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Interval& i);

 private:
  Rational lo_;
  Rational hi_;
};

// Finite union of closed intervals, stored sorted, pairwise disjoint and
// maximal (no two members touch). May be empty.
class IntervalSet {
 public:
  IntervalSet() = default;

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }
  // Connected and nonempty.
  bool is_single_interval() const { return intervals_.size() == 1; }
  bool contains(const Rational& v) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

 private:
  friend IntervalSet normalize_intervals(std::vector<Interval> raw);
  std::vector<Interval> intervals_;
};

IntervalSet normalize_intervals(std::vector<Interval> raw);

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);

// True iff b lies inside the union of a.
bool covers(const IntervalSet& a, const Interval& b);

// A rational point of b outside a, or nullopt when a covers b. Prefers the
// midpoint of the first uncovered gap.
std::optional<Rational> first_uncovered(const IntervalSet& a,
                                        const Interval& b);

}  // namespace usc
