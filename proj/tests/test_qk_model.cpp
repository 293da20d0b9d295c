#include <gtest/gtest.h>

#include "support.hpp"

using namespace qkseidel;

TEST(Parabolic, CosetCounts) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'D', 4}}) {
    RootSystem rs = RootSystem::build(t, n);
    for (const auto& P : all_parabolics(rs)) {
      EXPECT_EQ(P.min_reps.size() * P.parabolic_order, rs.elements().size());
      for (const auto& w : P.min_reps)
        for (int j : P.nodes) EXPECT_GT(root_sign(w.apply(rs.simple_root(j))), 0);
    }
  }
  EXPECT_THROW(make_parabolic(RootSystem::build('A', 2), {3}), InvalidInput);
}

TEST(Minrep, CoordinatesAndIdempotence) {
  RootSystem rs = RootSystem::build('D', 5);
  QKModel M(rs);
  ParabolicData P4 = make_parabolic(rs, {1, 2, 3, 5});
  EXPECT_EQ(M.minrep(QExponent{0, 1, 1, 1, 1}, P4), (QExponent{0, 0, 0, 1, 0}));
  ParabolicData Pj = make_parabolic(rs, {2});
  EXPECT_TRUE(M.minrep(QExponent{0, 1, 0, 0, 0}, Pj).is_zero());
  for (const auto& w : P4.min_reps) EXPECT_EQ(M.minrep(w, P4), w);
}

TEST(LeftAction, TwoCases) {
  RootSystem rs = RootSystem::build('A', 2);
  QKModel M(rs);
  ParabolicData B = M.borel();
  WeylElement s1 = rs.simple_reflection(1);
  // s_2 s_1 > s_1: only the coefficient moves, and 1 is fixed
  EXPECT_EQ(M.left_action(2, M.schubert(s1, B)), M.schubert(s1, B));
  // s_1 s_1 < s_1
  QKElement got = M.left_action(1, M.schubert(s1, B));
  QKElement expect(B.nodes);
  RootVec a = rs.simple_root(1);
  expect.add(M.zero_exponent(), s1, LaurentPoly::monomial(a));
  expect.add(M.zero_exponent(), rs.identity(), LaurentPoly::one_minus(a));
  EXPECT_EQ(got, expect);
  EXPECT_EQ(M.left_action(1, got), M.schubert(s1, B));
}

TEST(SeidelProduct, Examples) {
  RootSystem a2 = RootSystem::build('A', 2);
  QKModel M(a2);
  EXPECT_EQ(M.seidel_product(2, a2.from_word({1, 2})), M.monomial({0, 1}, a2.from_word({2, 1}), M.borel()));
  RootSystem c2 = RootSystem::build('C', 2);
  QKModel N(c2);
  EXPECT_EQ(N.seidel_product(2, c2.from_word({1})), N.schubert(c2.longest_element(), N.borel()));
  EXPECT_EQ(N.seidel_product(2, c2.identity()), N.schubert(seidel_element(c2, 2), N.borel()));
  EXPECT_THROW(N.seidel_product(1, c2.identity()), InvalidInput);
}

TEST(SeidelProduct, D5Instance) {
  RootSystem rs = RootSystem::build('D', 5);
  QKModel M(rs);
  WeylElement w = rs.from_word({2, 4, 3, 5, 3, 1, 2});
  WeylElement v = seidel_element(rs, 4);
  EXPECT_EQ(M.seidel_product(4, w), M.monomial({0, 1, 1, 1, 1}, v * w, M.borel()));

  ParabolicData P4 = make_parabolic(rs, {1, 2, 3, 5});
  QKElement pushed = M.pushforward(M.seidel_product(4, w), P4);
  EXPECT_EQ(pushed, M.monomial({0, 0, 0, 1, 0}, M.minrep(v * w, P4), P4));
  EXPECT_EQ(M.seidel_product_parabolic(4, M.minrep(w, P4), P4), pushed);
}

TEST(SeidelProduct, ProductEntryPoint) {
  RootSystem rs = RootSystem::build('C', 2);
  QKModel M(rs);
  ParabolicData B = M.borel();
  WeylElement v = seidel_element(rs, 2);
  for (const auto& w : rs.elements()) {
    QKElement b = M.left_action_w(v, M.schubert(w, B));
    EXPECT_EQ(M.product(M.schubert(v, B), b), M.seidel_product(2, w));
  }
  EXPECT_THROW(M.product(M.schubert(rs.from_word({1}), B), M.schubert(rs.from_word({1}), B)), UnsupportedOperation);
}

TEST(Pushforward, BasicProperties) {
  RootSystem rs = RootSystem::build('A', 3);
  QKModel M(rs);
  ParabolicData B = M.borel();
  QKElement xi = M.monomial({1, 0, 2}, rs.from_word({1, 2}), B);
  EXPECT_EQ(M.pushforward(xi, B), xi);

  ParabolicData P = make_parabolic(rs, {1, 3});
  std::set<WeylElement> hit;
  for (const auto& w : rs.elements()) hit.insert(M.pushforward(M.schubert(w, B), P).terms().begin()->first.second);
  EXPECT_EQ(hit, std::set<WeylElement>(P.min_reps.begin(), P.min_reps.end()));

  QKElement neg(B.nodes);
  neg.add(QExponent{-1, 0, 0}, rs.identity(), LaurentPoly::one(3));
  EXPECT_THROW(M.pushforward(neg, P), InvalidInput);
}

TEST(Pushforward, ParabolicSeidelRejectsNonMinimal) {
  RootSystem rs = RootSystem::build('A', 2);
  QKModel M(rs);
  ParabolicData P = make_parabolic(rs, {1});
  EXPECT_THROW(M.seidel_product_parabolic(2, rs.from_word({1}), P), InvalidInput);
}

TEST(Pushforward, SeidelClassOfCominusculeSpace) {
  RootSystem rs = RootSystem::build('D', 4);
  QKModel M(rs);
  for (int i : special_nodes(rs)) {
    ParabolicData Pi = make_parabolic(rs, rs.complement({i}));
    EXPECT_EQ(M.seidel_product_parabolic(i, rs.identity(), Pi), M.schubert(M.minrep(seidel_element(rs, i), Pi), Pi));
  }
}

TEST(Pushforward, CommutesWithLeftAction) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'C', 2}}) {
    QKModel M(RootSystem::build(t, n));
    for (const auto& P : all_parabolics(M.root_system())) {
      PushforwardReport rep = M.verify_pushforward_commutes(P);
      EXPECT_TRUE(rep.ok()) << rep.first_failure;
      EXPECT_TRUE(M.verify_two_routes(P));
    }
  }
}

TEST(SeidelProduct, IsABijectionOnSchubertIndices) {
  RootSystem rs = RootSystem::build('B', 3);
  QKModel M(rs);
  EXPECT_THROW(M.seidel_product(1, rs.identity(), SeidelPolicy::trust_sweep), VerificationError);
  EXPECT_TRUE(summarize("sweep", rs, theorem_sweep(M, theorem_cases(rs), 2)).ok());
  ASSERT_TRUE(M.sweep_recorded());
  std::set<WeylElement> images;
  for (const auto& w : rs.elements()) images.insert(M.seidel_product(1, w, SeidelPolicy::trust_sweep).terms().begin()->first.second);
  EXPECT_EQ(images.size(), rs.elements().size());
}

TEST(SeidelProduct, VerifiedPairsAreRemembered) {
  RootSystem rs = RootSystem::build('A', 3);
  QKModel M(rs);
  WeylElement w = rs.from_word({1, 2});
  EXPECT_FALSE(M.is_verified(2, w));
  M.seidel_product(2, w);
  EXPECT_TRUE(M.is_verified(2, w));
  EXPECT_FALSE(M.sweep_recorded());
}
