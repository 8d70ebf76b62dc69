#include "usc/interval_set.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "usc/error.h"

namespace usc {
namespace {

TEST(IntervalTest, RejectsOutOfRangeAndReversed) {
  EXPECT_THROW(Interval(Rational(-1, 2), Rational(1)), Error);
  EXPECT_THROW(Interval(Rational(0), Rational(3, 2)), Error);
  EXPECT_THROW(Interval(Rational(1, 2), Rational(1, 4)), Error);
}

TEST(IntervalSetTest, MergesOverlappingAndTouching) {
  const IntervalSet s = normalize_intervals({Interval(Rational(1, 2), Rational(3, 4)),
                                             Interval(Rational(0), Rational(1, 4)),
                                             Interval(Rational(1, 4), Rational(1, 3))});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.intervals()[0], Interval(Rational(0), Rational(1, 3)));
  EXPECT_EQ(s.intervals()[1], Interval(Rational(1, 2), Rational(3, 4)));
}

TEST(IntervalSetTest, FirstUncoveredIsGapMidpoint) {
  const IntervalSet s = normalize_intervals({Interval::point(Rational(0))});
  EXPECT_FALSE(covers(s, Interval::unit()));
  EXPECT_EQ(first_uncovered(s, Interval::unit()), Rational(1, 2));
  const IntervalSet full = normalize_intervals({Interval(Rational(0), Rational(1, 2)),
                                                Interval(Rational(1, 2), Rational(1))});
  EXPECT_TRUE(covers(full, Interval::unit()));
  EXPECT_FALSE(first_uncovered(full, Interval::unit()).has_value());
}

// Oracle: membership of every 1/64 grid point against the raw interval list.
TEST(IntervalSetTest, NormalizationPreservesMembership) {
  testing::Gen gen(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Interval> raw;
    for (long i = gen.integer(1, 5); i > 0; --i) {
      const Rational a = gen.grid(16), b = gen.grid(16);
      raw.emplace_back(min(a, b), max(a, b));
    }
    const IntervalSet s = normalize_intervals(raw);
    for (std::size_t i = 1; i < s.size(); ++i) {
      EXPECT_LT(s.intervals()[i - 1].hi(), s.intervals()[i].lo());
    }
    for (long k = 0; k <= 64; ++k) {
      const Rational v(k, 64);
      bool expected = false;
      for (const auto& iv : raw) expected = expected || iv.contains(v);
      EXPECT_EQ(s.contains(v), expected);
    }
    const auto gap = first_uncovered(s, Interval::unit());
    if (gap) {
      EXPECT_FALSE(s.contains(*gap));
    } else {
      EXPECT_TRUE(covers(s, Interval::unit()));
    }
  }
}

TEST(IntervalSetTest, NormalizeExamples) {
  const auto q = [](long a, long b, long den) { return Interval(Rational(a, den), Rational(b, den)); };
  EXPECT_EQ(normalize_intervals({q(0, 2, 4), q(1, 3, 4)}).intervals(), std::vector<Interval>{q(0, 3, 4)});
  EXPECT_EQ(normalize_intervals({q(1, 1, 2)}).intervals(), std::vector<Interval>{q(1, 1, 2)});
  EXPECT_EQ(normalize_intervals({q(0, 1, 4), q(1, 2, 4)}).intervals(), std::vector<Interval>{q(0, 2, 4)});
}

TEST(IntervalSetTest, CoversExamples) {
  const auto q = [](long a, long b, long den) { return Interval(Rational(a, den), Rational(b, den)); };
  EXPECT_TRUE(covers(normalize_intervals({q(0, 1, 2), q(1, 2, 2)}), Interval::unit()));
  EXPECT_FALSE(covers(normalize_intervals({q(0, 1, 2)}), Interval::unit()));
  EXPECT_TRUE(covers(normalize_intervals({Interval::unit()}), q(1, 2, 3)));
}

}  // namespace
}  // namespace usc
