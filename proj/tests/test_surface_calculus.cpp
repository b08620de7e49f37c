#include <gtest/gtest.h>

#include <vector>

#include "mingenus/error.hpp"
#include "mingenus/surface_calculus.hpp"

using namespace mingenus;

TEST(Resolve, Examples) {
  SurfaceConfiguration c;
  const auto b = c.add_component("B", 2);
  const auto cc = c.add_component("C", 3);
  c.add_intersections(b, cc, 1);
  EXPECT_EQ(resolve_genus(c), 5);

  SurfaceConfiguration one;
  one.add_component("S", 4);
  EXPECT_EQ(resolve_genus(one), 4);
}

TEST(Resolve, GridOfGenusTwoSurfaces) {
  for (Int a = 1; a <= 4; ++a)
    for (Int b = 1; b <= 4; ++b) {
      SurfaceConfiguration c;
      std::vector<std::size_t> xs, ys;
      for (Int i = 0; i < a; ++i) xs.push_back(c.add_component("x" + std::to_string(i), 2));
      for (Int j = 0; j < b; ++j) ys.push_back(c.add_component("y" + std::to_string(j), 2));
      for (auto x : xs)
        for (auto y : ys) c.add_intersections(x, y, 1);
      EXPECT_EQ(resolve_genus(c), (a + 1) * (b + 1));
    }
}

TEST(Resolve, DisconnectedThrows) {
  SurfaceConfiguration c;
  c.add_component("a", 1);
  c.add_component("b", 1);
  EXPECT_THROW(resolve_genus(c), DisconnectedConfiguration);
  EXPECT_EQ(resolve_and_tube_genus(c), 2);
}

TEST(Resolve, ImmersedComponentDoublePoints) {
  SurfaceConfiguration c;
  const auto s = c.add_component("s", 0);
  c.add_intersections(s, s, 3);
  EXPECT_EQ(resolve_genus(c), 3);
}

TEST(Tube, Examples) {
  EXPECT_EQ(tube_genus(5, 2), 7);
  EXPECT_EQ(tube_genus(0, 0), 0);
  EXPECT_EQ(tube_genus(2, 2), 4);
}

TEST(Cover, Examples) {
  EXPECT_EQ(cover_genus(2, 1), 2);
  for (Int a = 1; a <= 10; ++a) EXPECT_EQ(cover_genus(2, a), a + 1);
  EXPECT_EQ(cover_genus(3, 2), 5);
  EXPECT_THROW(cover_genus(2, 0), PreconditionViolated);
}

TEST(LineArrangement, Examples) {
  const std::vector<Int> b11{1, 1};
  EXPECT_EQ(line_arrangement_genus(3, b11), 1);
  EXPECT_EQ(line_arrangement_genus(1, {}), 0);
  const std::vector<Int> b21{2, 1};
  EXPECT_EQ(line_arrangement_genus(4, b21), 2);
  const std::vector<Int> b40{4, 0};
  EXPECT_EQ(line_arrangement_genus(4, b40), 0);
  EXPECT_EQ(line_arrangement_genus(0, {}), 0);
  const std::vector<Int> too_many{3, 2};
  EXPECT_THROW(line_arrangement_genus(4, too_many), PreconditionViolated);
}

TEST(NegativeSquare, Examples) {
  EXPECT_EQ(negative_square_upper_bound(1, 2, 0), 0);
  // Square must be negative: (1,1,0) has square 0.
  EXPECT_THROW(negative_square_upper_bound(1, 1, 0), PreconditionViolated);
  EXPECT_GE(negative_square_upper_bound(2, 3, 1), 0);
  EXPECT_THROW(negative_square_upper_bound(1, 3, 0), PreconditionViolated);
}

TEST(BlowupConfiguration, ClosedFormMatchesExplicit) {
  for (Int m1 = 0; m1 <= 4; ++m1)
    for (Int m2 = 0; m2 <= 3; ++m2)
      for (Int g = 0; g <= 2; ++g)
        for (Int e1 = 0; e1 <= 3; ++e1)
          for (Int e2 = 0; e2 <= 2; ++e2) {
            if (m1 + m2 + g + e1 + e2 == 0) continue;
            const std::vector<Int> p{m1, m2}, e{e1, e2};
            EXPECT_EQ(blowup_configuration_genus(p, g, e), resolve_and_tube_genus(blowup_configuration(p, g, e)))
                << m1 << " " << m2 << " " << g << " " << e1 << " " << e2;
          }
}

TEST(BlowupConfiguration, NegativePointsCounted) {
  const std::vector<Int> p{1}, e{1};
  const auto c = blowup_configuration(p, 0, e);
  EXPECT_FALSE(c.all_points_positive());
  const std::vector<Int> e0{0};
  EXPECT_TRUE(blowup_configuration(p, 1, e0).all_points_positive());
}

TEST(BlowupUpper, NeverBelowZeroAndMatchesFormulaOnCanonical) {
  const std::vector<Int> b{1, 1};
  EXPECT_EQ(blowup_configuration_upper_bound(3, b), 1);
  const std::vector<Int> b20{2, 0};
  EXPECT_EQ(blowup_configuration_upper_bound(1, b20), 0);
}

TEST(Permuted, PreservesGenus) {
  SurfaceConfiguration c;
  const auto a = c.add_component("a", 1);
  const auto b = c.add_component("b", 2);
  const auto d = c.add_component("d", 0);
  c.add_intersections(a, b, 2);
  c.add_intersections(b, d, 1, -1);
  const std::vector<std::size_t> order{2, 0, 1};
  EXPECT_EQ(resolve_genus(c.permuted(order)), resolve_genus(c));
  EXPECT_EQ(c.total_points(), 3);
  EXPECT_EQ(c.total_genus(), 3);
}

TEST(Combination, CoverAndPushOffs) {
  // 3 copies of a square-zero genus-2 surface form one connected cover.
  std::vector<WeightedSurface> s{{"x", 2, 0, 3}};
  EXPECT_EQ(resolve_and_tube_genus(combination_configuration(s, {{0}})), 4);
  // x + y meeting once.
  std::vector<WeightedSurface> xy{{"x", 2, 0, 1}, {"y", 2, 0, 1}};
  EXPECT_EQ(resolve_and_tube_genus(combination_configuration(xy, {{0, 1}, {1, 0}})), 4);
}
