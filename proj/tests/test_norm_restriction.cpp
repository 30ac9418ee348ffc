#include <map>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "trcalc/norm_restriction.hpp"

using namespace trcalc;

namespace {

// Survivors counted from the differential itself: build every monomial in a
// box, apply d, and discard sources and targets of nonzero differentials.
int brute_survivors(int n, long long shift, SSVariant v, long long degree) {
  constexpr long long B = 60;
  using Key = std::tuple<int, long long, long long>;
  auto in_region = [&](long long a) {
    if (v == SSVariant::Fixed) return a >= 0;
    if (v == SSVariant::Orbit) return a <= -1;
    return true;
  };
  std::set<Key> present, dead;
  for (long long a = -B; a <= B; ++a) {
    if (!in_region(a)) continue;
    for (long long b = 0; b <= B; ++b) {
      present.insert({0, a, b});
      present.insert({1, a, b});
    }
  }
  for (const auto& [e, a, b] : present) {
    if (e != 1) continue;
    const Key target{0, a + n, b + n - 1};
    if (present.count(target)) {
      dead.insert({e, a, b});
      dead.insert(target);
    }
  }
  int count = 0;
  for (const auto& [e, a, b] : present) {
    if (std::abs(a) > 20 || b > 20) continue;
    long long total = -e - 2 * a + 2 * b + shift;
    if (v == SSVariant::Orbit) total -= 1;
    if (total == degree && !dead.count({e, a, b})) ++count;
  }
  return count;
}

SWindow required_or(int n, long long shift, SSVariant v, long long degree) {
  auto w = required_window(n, shift, v, degree);
  return w ? *w : SWindow{degree - 2, degree + 2};
}

}  // namespace

TEST(Row, PositiveDimension) {
  for (int p : {2, 3, 5}) {
    const NormRestrictionRow r = row(3, 1, p);
    EXPECT_EQ(r.r, 2);
    EXPECT_EQ(r.orbit, PGroup::cyclic(p, 2));
    EXPECT_EQ(r.fixed, PGroup::cyclic(p, 3));
    EXPECT_EQ(r.tate, PGroup::cyclic(p, 2));
    EXPECT_EQ(r.norm.entry(0, 0), p);
    EXPECT_EQ(r.restriction.entry(0, 0), p);
    EXPECT_TRUE(row_is_exact(r));
  }
}

TEST(Row, NegativeDimension) {
  const NormRestrictionRow r = row(2, -4, 3);
  EXPECT_TRUE(r.orbit.is_trivial());
  EXPECT_EQ(r.fixed, PGroup::cyclic(3, 1));
  EXPECT_EQ(r.tate, PGroup::cyclic(3, 1));
  EXPECT_TRUE(is_isomorphic(r.fixed, r.tate));
  EXPECT_TRUE(kernel(r.restriction).group.is_trivial());
}

TEST(Row, FirstLevel) {
  const NormRestrictionRow a = row(1, 0, 2);
  EXPECT_EQ(a.orbit, PGroup::cyclic(2, 1));
  EXPECT_EQ(a.fixed, PGroup::cyclic(2, 1));
  EXPECT_TRUE(a.tate.is_trivial());
  EXPECT_TRUE(a.orbit_minus1.is_trivial());
  const NormRestrictionRow b = row(1, -1, 2);
  EXPECT_TRUE(b.orbit.is_trivial());
  EXPECT_TRUE(b.fixed.is_trivial());
  EXPECT_THROW(row(0, 0, 2), std::invalid_argument);
}

TEST(RowProperty, Exact) {
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 8; ++n) {
      for (int d = -10; d <= 10; ++d) {
        const NormRestrictionRow r = row(n, d, p);
        EXPECT_TRUE(row_is_exact(r)) << p << " " << n << " " << d;
        EXPECT_EQ(r.tate.order_length(), n - 1);
        if (d >= 0) EXPECT_EQ(r.r, std::min(n, d + 1));
        EXPECT_EQ(r.norm.source(), r.orbit);
        EXPECT_EQ(r.restriction.target(), r.tate);
      }
    }
  }
}

TEST(Variant, Parse) {
  for (auto v : {SSVariant::Tate, SSVariant::Orbit, SSVariant::Fixed}) EXPECT_EQ(parse_variant(to_string(v)), v);
  EXPECT_FALSE(parse_variant("homotopy").has_value());
}

TEST(SS, TateDegreeZero) {
  const SSResult r = ss_window(2, 0, SSVariant::Tate, SWindow{-6, 6}, 0);
  EXPECT_EQ(r.rank_einf, 1);
  EXPECT_EQ(r.cells.size(), 13u);
  EXPECT_EQ(closed_form_length(2, 0, SSVariant::Tate, 0), 1);
}

TEST(SS, FixedAndOrbit) {
  EXPECT_EQ(ss_window(3, -4, SSVariant::Fixed, SWindow{-10, 10}, 0).rank_einf, 3);
  EXPECT_EQ(ss_window(3, -4, SSVariant::Orbit, SWindow{-10, 10}, -1).rank_einf, 2);
}

TEST(SS, OddTateDegreeIsZero) {
  for (int n = 1; n <= 5; ++n) {
    const SSResult r = ss_window(n, -2, SSVariant::Tate, SWindow{-20, 20}, 1);
    EXPECT_EQ(r.rank_einf, 0);
    EXPECT_FALSE(required_window(n, -2, SSVariant::Tate, 1).has_value());
  }
}

TEST(SS, WindowTooSmall) {
  try {
    ss_window(3, -4, SSVariant::Fixed, SWindow{0, 0}, 0);
    FAIL() << "no throw";
  } catch (const WindowTooSmall& e) {
    EXPECT_LE(e.required().s_min, 0);
    EXPECT_LT(e.required().s_min, e.required().s_max);
  }
  EXPECT_THROW(ss_window(2, 1, SSVariant::Tate, SWindow{-4, 4}, 0), std::invalid_argument);
  EXPECT_THROW(ss_window(2, 0, SSVariant::Tate, SWindow{4, -4}, 0), std::invalid_argument);
}

TEST(SSProperty, TateIsTwoPeriodic) {
  for (int n = 1; n <= 5; ++n) {
    for (int alpha = -3; alpha <= 3; ++alpha) {
      for (long long D = -4; D <= 4; ++D) {
        const SSResult a = ss_window(n, -2 * alpha, SSVariant::Tate, SWindow{-40, 40}, D);
        const SSResult b = ss_window(n, -2 * alpha, SSVariant::Tate, SWindow{-42, 38}, D - 2);
        ASSERT_EQ(a.cells.size(), b.cells.size());
        for (std::size_t i = 0; i < a.cells.size(); ++i) {
          EXPECT_EQ(a.cells[i].t, b.cells[i].t);
          EXPECT_EQ(a.cells[i].einf, b.cells[i].einf);
        }
      }
    }
  }
}

TEST(SSProperty, SurvivorsMatchBruteForceAndClosedForm) {
  for (int n = 1; n <= 5; ++n) {
    for (int alpha = -3; alpha <= 3; ++alpha) {
      for (auto v : {SSVariant::Tate, SSVariant::Orbit, SSVariant::Fixed}) {
        for (long long D = -3; D <= 3; ++D) {
          const long long shift = -2 * alpha;
          const int brute = brute_survivors(n, shift, v, D);
          const SSResult r = ss_window(n, shift, v, required_or(n, shift, v, D), D);
          EXPECT_EQ(r.rank_einf, brute) << to_string(v) << " n=" << n << " alpha=" << alpha << " D=" << D;
          EXPECT_EQ(closed_form_length(n, shift, v, D), brute)
              << to_string(v) << " n=" << n << " alpha=" << alpha << " D=" << D;
        }
      }
    }
  }
}

TEST(SSProperty, RequiredWindowIsTight) {
  for (int n = 1; n <= 4; ++n) {
    for (auto v : {SSVariant::Tate, SSVariant::Orbit, SSVariant::Fixed}) {
      const auto w = required_window(n, -2, v, 0);
      if (!w) continue;
      EXPECT_NO_THROW(ss_window(n, -2, v, *w, 0));
      EXPECT_THROW(ss_window(n, -2, v, SWindow{w->s_min + 1, w->s_max + 1}, 0), WindowTooSmall);
    }
  }
}
