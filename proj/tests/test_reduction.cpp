#include <gtest/gtest.h>

#include <algorithm>

#include "mingenus/error.hpp"
#include "mingenus/fixtures.hpp"
#include "mingenus/reduction.hpp"

using namespace mingenus;

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize({-3, 1, -2}).canonical, (HomologyClass{3, 2, 1}));
  EXPECT_EQ(normalize({0, 0, 0}).canonical, (HomologyClass{0, 0, 0}));
  EXPECT_EQ(normalize({1, -1, 0}).canonical, (HomologyClass{1, 1, 0}));
  EXPECT_TRUE(normalize({0, 0, 0}).trace.steps.empty());
  EXPECT_THROW(normalize({1, 2}), DimensionMismatch);
}

TEST(ReduceNonnegative, Examples) {
  EXPECT_EQ(reduce_nonnegative({5, 4, 3}).canonical, (HomologyClass{1, 1, 0}));
  const auto id = reduce_nonnegative({3, 1, 1});
  EXPECT_EQ(id.canonical, (HomologyClass{3, 1, 1}));
  EXPECT_TRUE(id.trace.steps.empty());
  EXPECT_EQ(reduce_nonnegative({2, 1, 1, 1}).canonical, (HomologyClass{1, 0, 0, 0}));
  EXPECT_THROW(reduce_nonnegative({1, 1, 1}), WrongRoutine);
}

TEST(ReduceNonnegative, TraceOfPythagoreanTriple) {
  const auto r = reduce_nonnegative({5, 4, 3});
  const auto form = blowup_form_for(r.trace.start);
  EXPECT_EQ(r.trace.replay(form), r.canonical);
  EXPECT_EQ(r.trace.reflection_count(), 1u);
  EXPECT_EQ(r.trace.to_text(form),
            "start 5 4 3\nreflect 1 1 1 -> 1 0 -1\nflip 2 -> 1 0 1\npermute 0 2 1 -> 1 1 0\nend 1 1 0\n");
}

TEST(ReduceNegative, Rank3Examples) {
  EXPECT_EQ(reduce_negative_rank3({1, 3, 1}).canonical, (HomologyClass{5, 5, 3}));
  EXPECT_EQ(reduce_negative_rank3({1, 2, 0}).canonical, (HomologyClass{1, 2, 0}));
  // One reflection in (2,1,1) takes (0,1,0) to (2,2,1), square -1 preserved.
  const auto e = reduce_negative_rank3({0, 1, 0});
  EXPECT_EQ(e.canonical, (HomologyClass{2, 2, 1}));
  EXPECT_EQ(e.trace.reflection_count(), 1u);
  EXPECT_THROW(reduce_negative_rank3({3, 1, 1}), WrongRoutine);
}

TEST(ReduceNegative, Rank4OnlyLowersA) {
  const auto r = reduce_negative_rank4({3, 2, 2, 2});
  const auto& c = r.canonical;
  EXPECT_LE(c[0], 3);
  const auto form = IntersectionForm::cp2_blowup(3);
  EXPECT_EQ(square(form, c), square(form, {3, 2, 2, 2}));
  EXPECT_EQ(r.trace.replay(form), c);
}

TEST(Reduce, DispatchAndPredicate) {
  EXPECT_EQ(reduce({5, 4, 3}).canonical, (HomologyClass{1, 1, 0}));
  EXPECT_EQ(reduce({1, 3, 1}).canonical, (HomologyClass{5, 5, 3}));
  EXPECT_TRUE(is_nonnegative_canonical({3, 1, 1}));
  EXPECT_FALSE(is_nonnegative_canonical({3, 1, 2}));
  EXPECT_FALSE(is_nonnegative_canonical({5, 4, 3}));
}

TEST(Trace, TextRoundTrip) {
  const auto r = reduce({7, 5, 5});
  const auto form = blowup_form_for(r.trace.start);
  const auto text = r.trace.to_text(form);
  EXPECT_EQ(ReductionTrace::from_text(text), r.trace);
  EXPECT_THROW(ReductionTrace::from_text("start 1 2 3\nwobble 1\nend 1 2 3\n"), ParseError);
}

TEST(Trace, PathEndpoints) {
  const auto r = reduce({13, 12, 5});
  const auto form = blowup_form_for(r.trace.start);
  const auto p = r.trace.path(form);
  ASSERT_FALSE(p.empty());
  EXPECT_EQ(p.front(), (HomologyClass{13, 12, 5}));
  EXPECT_EQ(p.back(), r.canonical);
  for (const auto& c : p) EXPECT_EQ(square(form, c), 0);
}

TEST(OrbitBfs, Examples) {
  const auto m = fixtures::cp2_2cp2bar();
  EXPECT_EQ(orbit_bfs(m, {0, 0, 0}, 3), (std::vector<HomologyClass>{{0, 0, 0}}));
  const auto o = orbit_bfs(m, {5, 4, 3}, 5);
  EXPECT_TRUE(std::binary_search(o.begin(), o.end(), HomologyClass{1, 1, 0}));
  EXPECT_TRUE(std::is_sorted(o.begin(), o.end()));
  for (const auto& c : o) EXPECT_EQ(square(m.form, c), 0);
  EXPECT_THROW(orbit_bfs(m, {5, 4, 3}, 4), PreconditionViolated);
}

TEST(OrbitBfs, ReachesRank4Canonical) {
  const auto m = fixtures::cp2_3cp2bar();
  const auto o = orbit_bfs(m, {2, 1, 1, 1}, 2);
  EXPECT_TRUE(std::binary_search(o.begin(), o.end(), HomologyClass{1, 0, 0, 0}));
}

TEST(ReduceNegative, TerminatesOnBox30) {
  const auto form = IntersectionForm::cp2_blowup(2);
  std::size_t negatives = 0;
  for (Int a = -30; a <= 30; ++a)
    for (Int b1 = -30; b1 <= 30; ++b1)
      for (Int b2 = -30; b2 <= 30; ++b2) {
        const HomologyClass c{a, b1, b2};
        if (square(form, c) >= 0) continue;
        ++negatives;
        const auto r = reduce_negative_rank3(c);
        const auto& e = r.canonical;
        ASSERT_GE(2 * e[0], e[1] + e[2]) << c;
        ASSERT_EQ(square(form, e), square(form, c)) << c;
        ASSERT_EQ(is_characteristic(form, e), is_characteristic(form, c)) << c;
      }
  EXPECT_GT(negatives, 0u);
}
