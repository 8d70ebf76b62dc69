#include "usc/interval_set.h"

#include <algorithm>

#include "usc/error.h"

namespace usc {

Interval::Interval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_ || lo_ < Rational(0) || hi_ > Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "interval [" + lo_.str() + "," + hi_.str() +
                    "] is not a subinterval of [0,1]");
  }
}

std::optional<Interval> Interval::intersect(const Interval& o) const {
  if (!overlaps(o)) return std::nullopt;
  return Interval(max(lo_, o.lo_), min(hi_, o.hi_));
}

std::ostream& operator<<(std::ostream& os, const Interval& i) {
  if (i.is_point()) return os << "{" << i.lo() << "}";
  return os << "[" << i.lo() << "," << i.hi() << "]";
}

bool IntervalSet::contains(const Rational& v) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), v,
      [](const Rational& x, const Interval& i) { return x < i.lo(); });
  if (it == intervals_.begin()) return false;
  return std::prev(it)->contains(v);
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
  os << "{";
  for (std::size_t i = 0; i < s.intervals().size(); ++i) {
    if (i) os << ", ";
    os << s.intervals()[i];
  }
  return os << "}";
}

IntervalSet normalize_intervals(std::vector<Interval> raw) {
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo() < b.lo();
  });
  IntervalSet out;
  for (auto& iv : raw) {
    if (!out.intervals_.empty() && iv.lo() <= out.intervals_.back().hi()) {
      Interval& last = out.intervals_.back();
      if (iv.hi() > last.hi()) last = Interval(last.lo(), iv.hi());
    } else {
      out.intervals_.push_back(std::move(iv));
    }
  }
  return out;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return normalize_intervals(std::move(all));
}

bool covers(const IntervalSet& a, const Interval& b) {
  return !first_uncovered(a, b).has_value();
}

std::optional<Rational> first_uncovered(const IntervalSet& a,
                                        const Interval& b) {
  if (b.is_point()) {
    if (a.contains(b.lo())) return std::nullopt;
    return b.lo();
  }
  // Walk the complement of a: gaps are (prev.hi, next.lo), closed at 0 / 1
  // when those ends are uncovered. Every gap that meets b in more than one
  // point yields its midpoint.
  Rational gap_lo(0);
  for (const Interval& iv : a.intervals()) {
    const Rational lo = max(gap_lo, b.lo());
    const Rational hi = min(iv.lo(), b.hi());
    if (lo < hi) return midpoint(lo, hi);
    gap_lo = iv.hi();
  }
  const Rational lo = max(gap_lo, b.lo());
  const Rational& hi = b.hi();
  if (lo < hi) return midpoint(lo, hi);
  // b is nondegenerate; only its endpoints can remain uncovered.
  if (!a.contains(b.lo())) return b.lo();
  if (!a.contains(b.hi())) return b.hi();
  return std::nullopt;
}

}  // namespace usc
