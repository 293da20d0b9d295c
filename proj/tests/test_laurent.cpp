#include <gtest/gtest.h>

#include "support.hpp"

using namespace qkseidel;

namespace {
LaurentPoly x(int k, int e = 1) {
  RootVec v(2);
  v[static_cast<std::size_t>(k - 1)] = e;
  return LaurentPoly::monomial(v);
}
}  // namespace

TEST(LaurentPoly, ArithmeticCancels) {
  LaurentPoly one = LaurentPoly::one(2);
  EXPECT_EQ((one - x(1)) * (one + x(1)), one - x(1, 2));
  EXPECT_TRUE((x(1) - x(1)).is_zero());
  EXPECT_EQ(x(1) * x(1, -1), one);
  EXPECT_EQ(x(2).scaled(3).coefficient({0, 1}), 3);
}

TEST(LaurentPoly, ExactDivisionByOneMinus) {
  LaurentPoly one = LaurentPoly::one(2);
  LaurentPoly p = (one - x(1, 3)) * (x(2) + one);
  LaurentPoly q = p.divided_by_one_minus({1, 0});
  EXPECT_EQ(q, (one + x(1) + x(1, 2)) * (x(2) + one));
  EXPECT_EQ((one - x(1, -1)).divided_by_one_minus({-1, 0}), one);
  EXPECT_THROW((one + x(1)).divided_by_one_minus({1, 0}), VerificationError);
}

TEST(LaurentPoly, WeylActionOnExponents) {
  RootSystem rs = RootSystem::build('A', 2);
  // s_1(alpha_1) = -alpha_1, s_1(alpha_2) = alpha_1 + alpha_2
  EXPECT_EQ(x(1).apply(rs.simple_reflection(1)), x(1, -1));
  EXPECT_EQ(x(2).apply(rs.simple_reflection(1)), x(1) * x(2));
}

TEST(LaurentPoly, BudgetIsEnforced) {
  std::size_t saved = term_budget().load();
  term_budget().store(4);
  LaurentPoly p = LaurentPoly::one(2);
  EXPECT_THROW(
      {
        for (int k = 1; k < 10; ++k) p += x(1, k);
      },
      BudgetExceeded);
  term_budget().store(saved);
}

TEST(LaurentPoly, OverflowIsDetected) {
  LaurentPoly big = LaurentPoly::constant(2, std::int64_t{1} << 62);
  EXPECT_THROW(big + big, std::overflow_error);
  EXPECT_THROW(big * big, std::overflow_error);
}

TEST(LaurentPoly, ToString) {
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ(LaurentPoly::one(2).to_string(), "1");
}

TEST(RationalFunction, EqualityByCrossMultiplication) {
  LaurentPoly one = LaurentPoly::one(2);
  RationalFunction a(one, one - x(1));
  RationalFunction b(one + x(1), one - x(1, 2));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, RationalFunction(one, one + x(1)));
}

TEST(RationalFunction, FieldOperations) {
  LaurentPoly one = LaurentPoly::one(2);
  RationalFunction a(one, one - x(1));
  RationalFunction b(x(2), one - x(1));
  EXPECT_EQ(a + b, RationalFunction(one + x(2), one - x(1)));
  EXPECT_EQ(a * a.inverse(), RationalFunction::from_poly(one, 2));
  EXPECT_TRUE((a - a).is_zero());
  // 1/(1-x) - x/(1-x) = 1
  EXPECT_EQ(a - RationalFunction(x(1), one - x(1)), RationalFunction::from_poly(one, 2));
}

TEST(RationalFunction, ZeroDenominatorRejected) {
  EXPECT_THROW(RationalFunction(LaurentPoly::one(2), LaurentPoly()), InvalidInput);
}
