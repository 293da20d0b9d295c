#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

using namespace qkseidel;

TEST(ExtAffineWeyl, AffineReflectionFlipsAffineSimpleRoot) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'C', 2}, {'G', 2}, {'D', 4}}) {
    ExtAffineWeyl W(RootSystem::build(t, n));
    for (int i : W.affine_nodes()) {
      AffineRoot a = W.simple_affine_root(i);
      AffineRoot b = W.simple_reflection(i).apply(a);
      EXPECT_EQ(b.finite_part, -a.finite_part);
      EXPECT_EQ(b.level, -a.level);
      EXPECT_EQ(W.simple_reflection(i) * W.simple_reflection(i), W.identity());
    }
    AffineRoot a0 = W.simple_affine_root(0);
    EXPECT_EQ(a0.level, 1);
    EXPECT_EQ(a0.finite_part, -W.root_system().highest_root());
  }
}

TEST(ExtAffineWeyl, AffineNodeIsTranslationTimesReflection) {
  ExtAffineWeyl W(RootSystem::build('B', 3));
  const RootSystem& rs = W.root_system();
  ExtAffineWeylElement s0 = W.translation(W.theta_coroot()) * W.finite(rs.reflection(rs.highest_root()));
  EXPECT_EQ(W.simple_reflection(0), s0);
}

TEST(ExtAffineWeyl, BraidOrders) {
  ExtAffineWeyl a2(RootSystem::build('A', 2));
  EXPECT_EQ(a2.braid_order(0, 1), 3);
  EXPECT_EQ(a2.braid_order(0, 2), 3);
  EXPECT_EQ(a2.braid_order(1, 1), 1);
  ExtAffineWeyl c2(RootSystem::build('C', 2));
  EXPECT_EQ(c2.braid_order(0, 1), 4);
  EXPECT_EQ(c2.braid_order(0, 2), 2);
  EXPECT_EQ(c2.braid_order(1, 2), 4);
  ExtAffineWeyl g2(RootSystem::build('G', 2));
  EXPECT_EQ(g2.braid_order(0, 2), 3);
  EXPECT_EQ(g2.braid_order(0, 1), 2);
  EXPECT_EQ(g2.braid_order(1, 2), 6);
  ExtAffineWeyl a1(RootSystem::build('A', 1));
  EXPECT_EQ(a1.braid_order(0, 1), 0);
}

TEST(ExtAffineWeyl, SigmaOrdersMatchFundamentalGroup) {
  std::map<std::string, std::size_t> expect{{"A2", 3}, {"A3", 4}, {"B3", 2}, {"C2", 2}, {"D4", 4},
                                            {"D5", 4}, {"E6", 3}, {"E7", 2}, {"G2", 1}, {"F4", 1}};
  for (const auto& [name, order] : expect) {
    ExtAffineWeyl W(RootSystem::build(name[0], name[1] - '0'));
    EXPECT_EQ(W.sigma_group().size(), order) << name;
    for (const auto& s : W.sigma_group()) {
      EXPECT_EQ(W.length(s.element), 0) << name;
      EXPECT_TRUE(W.is_sigma_automorphism(s)) << name;
    }
  }
}

TEST(ExtAffineWeyl, A2SigmaNodeAction) {
  ExtAffineWeyl W(RootSystem::build('A', 2));
  EXPECT_EQ(W.pi(1).node_perm, (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(W.pi(2).node_perm, (std::vector<int>{2, 0, 1}));
}

TEST(ExtAffineWeyl, D5SigmaNodeActionAndRelations) {
  ExtAffineWeyl W(RootSystem::build('D', 5));
  EXPECT_EQ(W.pi(4).node_perm, (std::vector<int>{4, 5, 3, 2, 1, 0}));
  EXPECT_EQ(W.pi(4).element * W.pi(4).element, W.pi(1).element);
  EXPECT_EQ(W.pi(5).element, W.pi(4).element.inverse());
  EXPECT_EQ(W.minuscule_nodes(), (std::vector<int>{1, 4, 5}));
}

TEST(ExtAffineWeyl, TranslationLengthFormula) {
  ExtAffineWeyl W(RootSystem::build('D', 5));
  const RootSystem& rs = W.root_system();
  for (Coweight lam : {Coweight{0, 0, 0, -1, 0}, Coweight{-1, 0, 0, 0, 0}, Coweight{0, -1, 0, 0, -1}, Coweight{1, -1, 0, 0, 0}}) {
    int expect = 0;
    for (const auto& a : rs.positive_roots()) expect += std::abs(pairing(lam, a));
    EXPECT_EQ(W.length(W.translation(lam)), expect);
  }
  EXPECT_EQ(W.length(W.translation(-rs.fundamental_coweight(4))), 10);
}

TEST(ExtAffineWeyl, AntidominantTranslationsAreGrassmannian) {
  ExtAffineWeyl W(RootSystem::build('C', 3));
  EXPECT_TRUE(W.is_grassmannian(W.translation({-1, 0, -2})));
  EXPECT_FALSE(W.is_grassmannian(W.translation({1, 0, 0})));
  EXPECT_TRUE(W.is_grassmannian(W.identity()));
  EXPECT_FALSE(W.is_grassmannian(W.finite(W.root_system().simple_reflection(1))));
}

TEST(ExtAffineWeyl, ReducedWordRoundTrip) {
  ExtAffineWeyl W(RootSystem::build('C', 2));
  Word w{0, 1, 2, 1, 0, 2};
  ExtAffineWeylElement x = W.from_word(w);
  Word r = W.reduced_word(x);
  EXPECT_EQ(W.from_word(r), x);
  EXPECT_EQ(static_cast<int>(r.size()), W.length(x));
}

TEST(ExtAffineWeyl, ReducedWordRejectsSigma) {
  ExtAffineWeyl W(RootSystem::build('A', 2));
  EXPECT_THROW(W.reduced_word(W.pi(1).element), InvalidInput);
}

TEST(ExtAffineWeyl, SigmaDecomposition) {
  ExtAffineWeyl W(RootSystem::build('A', 3));
  ExtAffineWeylElement x = W.pi(2).element * W.from_word({0, 1, 3});
  SigmaDecomposition d = W.sigma_decompose(x);
  EXPECT_EQ(d.sigma.element, W.pi(2).element);
  EXPECT_EQ(d.sigma.element * W.from_word(d.word), x);
}

TEST(ExtAffineWeyl, RejectsInvalidAffineNode) {
  ExtAffineWeyl W(RootSystem::build('A', 2));
  EXPECT_THROW(W.simple_reflection(3), InvalidInput);
  EXPECT_THROW(W.simple_reflection(-1), InvalidInput);
  EXPECT_TRUE(W.pi(0).element.is_identity());
  ExtAffineWeyl B(RootSystem::build('B', 3));
  EXPECT_THROW(B.pi(2), InvalidInput);
}

TEST(ExtAffineWeyl, A2NegativeFundamentalTranslation) {
  ExtAffineWeyl W(RootSystem::build('A', 2));
  ExtAffineWeylElement t = W.translation(-W.root_system().fundamental_coweight(1));
  EXPECT_TRUE(W.is_grassmannian(t));
  EXPECT_EQ(W.length(t), 2);
}
