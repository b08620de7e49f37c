#include <gtest/gtest.h>

#include <vector>

#include "mingenus/error.hpp"
#include "mingenus/genus_formulas.hpp"

using namespace mingenus;

TEST(Cp2, Examples) {
  EXPECT_EQ(genus_cp2(3), 1);
  EXPECT_EQ(genus_cp2(1), 0);
  EXPECT_EQ(genus_cp2(4), 3);
  EXPECT_EQ(genus_cp2(0), 0);
  EXPECT_EQ(genus_cp2(-4), 3);
  EXPECT_EQ(genus_cp2(2), 0);
}

TEST(Cp2Cp2bar, Examples) {
  EXPECT_EQ(genus_cp2_cp2bar(3, 1), 1);
  EXPECT_EQ(genus_cp2_cp2bar(2, 2), 0);
  EXPECT_EQ(genus_cp2_cp2bar(4, 2), 2);
  EXPECT_EQ(genus_cp2_cp2bar(0, 0), 0);
  EXPECT_EQ(genus_cp2_cp2bar(2, -4), genus_cp2_cp2bar(4, 2));
  EXPECT_EQ(genus_cp2_cp2bar(-5, 5), 0);
}

TEST(S2xS2, Examples) {
  EXPECT_EQ(genus_s2xs2(2, 3), 2);
  EXPECT_EQ(genus_s2xs2(5, 0), 0);
  EXPECT_EQ(genus_s2xs2(1, 1), 0);
  EXPECT_EQ(genus_s2xs2(-2, 3), 2);
}

TEST(Xn, Examples) {
  EXPECT_EQ(genus_xn(1, 0), 2);
  EXPECT_EQ(genus_xn(1, 1), 4);
  EXPECT_EQ(genus_xn(2, 3), 12);
  EXPECT_EQ(genus_xn(0, 0), 0);
}

TEST(Xn, DominatesS2xS2) {
  for (Int u = -6; u <= 6; ++u)
    for (Int v = -6; v <= 6; ++v)
      if (u || v) EXPECT_GE(genus_xn(u, v), genus_s2xs2(u, v));
  EXPECT_GT(genus_xn(1, 1), genus_s2xs2(1, 1));
}

TEST(Blowup, CanonicalFormula) {
  const std::vector<Int> b11{1, 1};
  EXPECT_EQ(genus_blowup_canonical(3, b11), 1);
  const std::vector<Int> b10{1, 0};
  EXPECT_EQ(genus_blowup_canonical(1, b10), 0);
  const std::vector<Int> b111{1, 1, 1};
  EXPECT_EQ(genus_blowup_canonical(4, b111), 3);
  const std::vector<Int> b00{0, 0};
  EXPECT_EQ(genus_blowup_canonical(0, b00), 0);
  // A single pencil is a union of spheres.
  const std::vector<Int> b50{5, 0};
  EXPECT_EQ(genus_blowup_canonical(5, b50), 0);
  const std::vector<Int> neg{-1, 0};
  EXPECT_THROW(genus_blowup_canonical(3, neg), PreconditionViolated);
}

TEST(Blowup, PrintedCoefficientDiffers) {
  const std::vector<Int> b{2, 0};
  EXPECT_NE(genus_blowup_printed_doubled(4, b), 2 * genus_blowup_canonical(4, b));
}

TEST(Cp2kNonnegative, Examples) {
  EXPECT_EQ(genus_cp2k_nonnegative({3, 1, 1}), 1);
  EXPECT_EQ(genus_cp2k_nonnegative({5, 4, 3}), 0);
  EXPECT_EQ(genus_cp2k_nonnegative({4, 1, 1, 1}), 3);
  EXPECT_THROW(genus_cp2k_nonnegative({1, 1, 1}), WrongRoutine);
}

TEST(Cp2kNonnegative, AgreesWithRubermanAtZero) {
  for (Int a = 0; a <= 30; ++a)
    for (Int b = 0; b <= a; ++b) EXPECT_EQ(genus_cp2k_nonnegative({a, b, 0}), genus_cp2_cp2bar(a, b)) << a << "," << b;
}

TEST(GenusResult, CheckRejectsInvertedInterval) {
  GenusResult r;
  r.lower = 3;
  r.upper = 2;
  EXPECT_THROW(r.check(), PreconditionViolated);
  r.upper = 5;
  EXPECT_NO_THROW(r.check());
  r.exact = true;
  EXPECT_THROW(r.check(), PreconditionViolated);
  EXPECT_TRUE(GenusResult::zero_class().zero_convention);
  EXPECT_TRUE(GenusResult::zero_class().exact);
}
