#include <gtest/gtest.h>

#include <algorithm>

#include "mingenus/bounds.hpp"
#include "mingenus/error.hpp"
#include "mingenus/evaluator.hpp"
#include "mingenus/fixtures.hpp"
#include "mingenus/profile.hpp"
#include "mingenus/sw.hpp"

using namespace mingenus;

namespace {

HomologyClass k3_vec(std::initializer_list<std::pair<std::size_t, Int>> entries) {
  HomologyClass c(22);
  for (auto [i, v] : entries) c[i] = v;
  return c;
}

}  // namespace

TEST(LexMin, Examples) {
  EXPECT_EQ(lex_min({{2, 2, 3}, {2, 2, 2}}), (std::vector<Int>{2, 2, 2}));
  EXPECT_EQ(lex_min({{1, 9}, {2, 0}}), (std::vector<Int>{1, 9}));
  EXPECT_EQ(lex_min({{4}}), (std::vector<Int>{4}));
  EXPECT_THROW(lex_min({}), PreconditionViolated);
  EXPECT_THROW(lex_min({{1}, {1, 2}}), PreconditionViolated);
}

TEST(IsAllowed, K3) {
  const auto k3 = fixtures::k3();
  EnkLayout L{2};
  // x + y in each hyperbolic block, and S + 2F in the first block.
  const std::vector<HomologyClass> good{k3_vec({{0, 1}, {1, 2}}),
                                        k3_vec({{L.hyperbolic_x(0), 1}, {L.hyperbolic_y(0), 1}}),
                                        k3_vec({{L.hyperbolic_x(1), 1}, {L.hyperbolic_y(1), 1}})};
  EXPECT_TRUE(is_allowed(k3, good));
  auto zero_sq = good;
  zero_sq[2] = k3_vec({{L.hyperbolic_x(1), 1}});
  EXPECT_FALSE(is_allowed(k3, zero_sq));
  auto not_orth = good;
  not_orth[2] = k3_vec({{L.hyperbolic_x(0), 1}, {L.hyperbolic_y(0), 1}, {L.hyperbolic_y(1), 1}, {L.hyperbolic_x(1), 0}});
  EXPECT_FALSE(is_allowed(k3, not_orth));
  EXPECT_THROW(is_allowed(k3, std::vector<HomologyClass>(good.begin(), good.begin() + 2)), DimensionMismatch);
}

TEST(IsAllowed, OddSquareRejected) {
  const auto m = fixtures::cp2();
  const std::vector<HomologyClass> one{{1}};
  EXPECT_FALSE(is_allowed(m, one));
  const std::vector<HomologyClass> two{{2}};
  EXPECT_TRUE(is_allowed(m, two));
}

TEST(ProfileSearch, K3) {
  const auto p = profile_search(fixtures::k3(), {});
  EXPECT_EQ(p.lower, (std::vector<Int>{2, 2, 2}));
  EXPECT_TRUE(p.is_exact());
  EXPECT_TRUE(is_allowed(fixtures::k3(), p.lower_witness.vectors));
  EXPECT_TRUE(is_allowed(fixtures::k3(), p.upper_witness.vectors));
  EXPECT_EQ(p.radius, 3);
  EXPECT_TRUE(p.restricted);
}

TEST(ProfileSearch, CustomEvaluatorIsUsed) {
  const auto k3 = fixtures::k3();
  GenusEvaluator flat = [](const HomologyClass&) {
    GenusResult r;
    r.lower = 7;
    r.upper = 7;
    r.exact = true;
    return r;
  };
  EXPECT_EQ(profile_search(k3, {}, flat).lower, (std::vector<Int>{7, 7, 7}));
}

TEST(ProfileSearch, NotFoundWhenBoxTooSmall) {
  // E(3): the first block [[-3,1],[1,0]] has no positive even square within radius 3.
  EXPECT_THROW(profile_search(fixtures::enk(3, 0), {}), NotFound);
  ProfileOptions o;
  o.norm_bound = 0;
  EXPECT_THROW(profile_search(fixtures::k3(), o), PreconditionViolated);
}

TEST(ProfileSearch, CapExceeded) {
  ProfileOptions o;
  o.restrict_to_blocks = false;
  o.max_box_points = 1000;
  EXPECT_THROW(profile_search(fixtures::k3(), o), CapExceeded);
}

TEST(ProfileSearch, WitnessGeneraMatchLower) {
  const auto k3 = fixtures::k3();
  const auto p = profile_search(k3, {});
  std::vector<Int> g;
  for (const auto& v : p.lower_witness.vectors) g.push_back(evaluate_genus(k3, v).lower);
  std::sort(g.begin(), g.end());
  EXPECT_EQ(g, p.lower);
}

TEST(ProfileSearch, Enk2Exact) {
  for (Int m = 0; m <= 3; ++m) {
    const auto p = profile_search(fixtures::enk(2, m), {});
    EXPECT_EQ(p.lower, (std::vector<Int>{2, 2, m + 2})) << m;
  }
}

TEST(ProfileSearch, E2pIntervalLower) {
  const auto p = profile_search(fixtures::e2p(3), {});
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.lower[2], e2p_third_entry_lower(3));
  EXPECT_FALSE(p.upper[2].has_value());
  EXPECT_FALSE(p.is_exact());
  EXPECT_TRUE(p.exact[1]);
}
