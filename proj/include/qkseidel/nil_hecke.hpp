#pragma once

#include <map>
#include <string>

#include "qkseidel/affine_weyl.hpp"
#include "qkseidel/laurent.hpp"

namespace qkseidel {

/// Level-zero action: (t_gamma w) e^beta = e^{w(beta)}. Translations act
/// trivially and s_0 acts as s_theta.
inline LaurentPoly level_zero_action(const ExtAffineWeylElement& x, const LaurentPoly& f) { return f.apply(x.finite_part()); }
inline RationalFunction level_zero_action(const ExtAffineWeylElement& x, const RationalFunction& f) { return f.apply(x.finite_part()); }

/// Element of the twisted group algebra F[W_af^ext]: sum of f_x * x with the
/// product (f x)(g y) = f x(g) xy.
class GroupAlgebraElement {
 public:
  using Terms = std::map<ExtAffineWeylElement, RationalFunction>;

  explicit GroupAlgebraElement(int rank = 0) : rank_(rank) {}

  static GroupAlgebraElement basis(const ExtAffineWeylElement& x, RationalFunction coeff) {
    GroupAlgebraElement a(x.rank());
    a.add(x, std::move(coeff));
    return a;
  }
  static GroupAlgebraElement basis(const ExtAffineWeylElement& x) {
    return basis(x, RationalFunction::from_poly(LaurentPoly::one(x.rank()), x.rank()));
  }
  static GroupAlgebraElement scalar(int rank, const RationalFunction& f) {
    return basis(ExtAffineWeylElement::identity(rank), f);
  }

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }

  void add(const ExtAffineWeylElement& x, RationalFunction c) {
    if (c.is_zero()) return;
    auto it = terms_.find(x);
    if (it == terms_.end()) {
      terms_.emplace(x, std::move(c));
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    for (const auto& [x, c] : b.terms_) a.add(x, c);
    return a;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    for (const auto& [x, c] : b.terms_) a.add(x, -c);
    return a;
  }

  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r(a.rank_);
    for (const auto& [x, f] : a.terms_)
      for (const auto& [y, g] : b.terms_) r.add(x * y, f * level_zero_action(x, g));
    return r;
  }

  /// Coefficientwise comparison by cross-multiplication; a zero coefficient
  /// may be stored as an unreduced fraction, so absent keys compare with 0.
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement diff = a - b;
    for (const auto& [x, c] : diff.terms_)
      if (!c.is_zero()) return false;
    return true;
  }

 private:
  int rank_;
  Terms terms_;
};

/// Demazure elements D_i = (1 - e^{alpha_i})^{-1}(s_i - 1) + 1 in F[W_af].
class NilHecke {
 public:
  explicit NilHecke(ExtAffineWeyl W) : W_(std::move(W)) {}

  const ExtAffineWeyl& group() const { return W_; }

  GroupAlgebraElement demazure(int i) const {
    int n = W_.rank();
    RootVec a = W_.level_zero_root(i);
    LaurentPoly one = LaurentPoly::one(n);
    LaurentPoly denom = LaurentPoly::one_minus(a);
    RationalFunction inv(one, denom);
    RationalFunction rest(-LaurentPoly::monomial(a), denom);  // 1 - 1/(1-e^a)
    GroupAlgebraElement d = GroupAlgebraElement::basis(W_.simple_reflection(i), inv);
    d.add(W_.identity(), rest);
    return d;
  }

  /// D_w for a reduced word over I_af; rejects non-reduced words.
  GroupAlgebraElement demazure_of_word(const Word& word) const {
    if (W_.length(W_.from_word(word)) != static_cast<int>(word.size()))
      throw InvalidInput("word " + word_to_string(word) + " is not reduced");
    GroupAlgebraElement d = identity();
    for (int i : word) d = d * demazure(i);
    return d;
  }

  /// D_{sigma y} = sigma D_y.
  GroupAlgebraElement demazure_extended(const SigmaElement& sigma, const Word& word) const {
    return GroupAlgebraElement::basis(sigma.element) * demazure_of_word(word);
  }

  GroupAlgebraElement identity() const { return GroupAlgebraElement::basis(W_.identity()); }

  GroupAlgebraElement scalar(const LaurentPoly& f) const {
    return GroupAlgebraElement::scalar(W_.rank(), RationalFunction::from_poly(f, W_.rank()));
  }

  /// D_a D_b D_a ... (m factors) == D_b D_a D_b ... (m factors), m = braid order.
  bool braid_relation_holds(int a, int b) const {
    int m = W_.braid_order(a, b);
    if (m == 0) return true;
    GroupAlgebraElement lhs = identity(), rhs = identity();
    for (int k = 0; k < m; ++k) {
      lhs = lhs * demazure(k % 2 == 0 ? a : b);
      rhs = rhs * demazure(k % 2 == 0 ? b : a);
    }
    return lhs == rhs;
  }

  bool idempotent(int i) const {
    GroupAlgebraElement d = demazure(i);
    return d * d == d;
  }

 private:
  ExtAffineWeyl W_;
};

}  // namespace qkseidel
