#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "qkseidel/rootsys.hpp"

namespace qkseidel {

/// Real affine root alpha + level * delta.
struct AffineRoot {
  RootVec finite_part;
  int level = 0;

  bool is_positive() const { return level > 0 || (level == 0 && root_sign(finite_part) > 0); }
  AffineRoot operator-() const { return {-finite_part, -level}; }
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/// Element t_lambda * u of the extended affine Weyl group, lambda in P^vee.
class ExtAffineWeylElement {
 public:
  ExtAffineWeylElement() = default;
  ExtAffineWeylElement(Coweight lambda, WeylElement u) : lambda_(std::move(lambda)), u_(std::move(u)) {}

  static ExtAffineWeylElement identity(int rank) {
    return {Coweight(static_cast<std::size_t>(rank)), WeylElement::identity(rank)};
  }
  static ExtAffineWeylElement translation(const Coweight& lambda) {
    return {lambda, WeylElement::identity(static_cast<int>(lambda.size()))};
  }
  static ExtAffineWeylElement finite(const WeylElement& u) {
    return {Coweight(static_cast<std::size_t>(u.rank())), u};
  }

  const Coweight& translation_part() const { return lambda_; }
  const WeylElement& finite_part() const { return u_; }
  int rank() const { return u_.rank(); }

  // (t_l u)(t_m v) = t_{l + u(m)} uv
  friend ExtAffineWeylElement operator*(const ExtAffineWeylElement& a, const ExtAffineWeylElement& b) {
    return {a.lambda_ + a.u_.apply(b.lambda_), a.u_ * b.u_};
  }

  ExtAffineWeylElement inverse() const {
    WeylElement ui = u_.inverse();
    return {-ui.apply(lambda_), ui};
  }

  /// (t_l u)(alpha + n delta) = u(alpha) + (n - <l, u(alpha)>) delta
  AffineRoot apply(const AffineRoot& a) const {
    RootVec ua = u_.apply(a.finite_part);
    return {ua, a.level - pairing(lambda_, ua)};
  }

  bool is_identity() const { return lambda_.is_zero() && u_.is_identity(); }

  friend bool operator==(const ExtAffineWeylElement&, const ExtAffineWeylElement&) = default;
  friend std::strong_ordering operator<=>(const ExtAffineWeylElement& a, const ExtAffineWeylElement& b) {
    if (auto c = a.lambda_ <=> b.lambda_; c != 0) return c;
    return a.u_ <=> b.u_;
  }

 private:
  Coweight lambda_;
  WeylElement u_;
};

/// Length-zero element of the extended affine Weyl group, i.e. an element of
/// Sigma = P^vee / Q^vee, together with its permutation of I_af.
struct SigmaElement {
  int image_of_zero = 0;        ///< node sigma(0); 0 for the identity
  ExtAffineWeylElement element;
  std::vector<int> node_perm;   ///< node_perm[j] = sigma(j), j in 0..rank

  friend bool operator==(const SigmaElement& a, const SigmaElement& b) { return a.element == b.element; }
};

struct SigmaDecomposition {
  SigmaElement sigma;
  Word word;  ///< reduced word over I_af of the W_af part y, x = sigma * y
};

/// The extended affine Weyl group attached to a finite root system.
/// Node 0 is the affine node with alpha_0 = delta - theta, s_0 = t_{theta^vee} s_theta.
class ExtAffineWeyl {
 public:
  explicit ExtAffineWeyl(RootSystem rs) : rs_(std::move(rs)) {
    theta_ = rs_.highest_root();
    theta_vee_ = rs_.to_coweight(rs_.coroot(theta_));
    s_theta_ = rs_.reflection(theta_);
    s0_ = ExtAffineWeylElement(theta_vee_, s_theta_);
    build_sigma();
  }

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  const Coweight& theta_coroot() const { return theta_vee_; }

  std::vector<int> affine_nodes() const {
    std::vector<int> v;
    for (int i = 0; i <= rank(); ++i) v.push_back(i);
    return v;
  }

  bool valid_affine_node(int i) const { return i >= 0 && i <= rank(); }

  AffineRoot simple_affine_root(int i) const {
    check_node(i);
    if (i == 0) return {-theta_, 1};
    return {rs_.simple_root(i), 0};
  }

  /// Level-zero image of alpha_i: alpha_0 is read as -theta.
  RootVec level_zero_root(int i) const {
    check_node(i);
    return i == 0 ? -theta_ : rs_.simple_root(i);
  }

  ExtAffineWeylElement identity() const { return ExtAffineWeylElement::identity(rank()); }
  ExtAffineWeylElement translation(const Coweight& lambda) const { return ExtAffineWeylElement::translation(lambda); }
  ExtAffineWeylElement finite(const WeylElement& u) const { return ExtAffineWeylElement::finite(u); }

  /// s_i for i in I_af; s_0 = t_{theta^vee} s_theta.
  ExtAffineWeylElement simple_reflection(int i) const {
    check_node(i);
    if (i == 0) return s0_;
    return ExtAffineWeylElement::finite(rs_.simple_reflection(i));
  }

  ExtAffineWeylElement from_word(std::span<const int> word) const {
    ExtAffineWeylElement x = identity();
    for (int i : word) x = x * simple_reflection(i);
    return x;
  }
  ExtAffineWeylElement from_word(std::initializer_list<int> word) const {
    return from_word(std::span<const int>(word.begin(), word.size()));
  }

  /// Number of positive affine roots sent to negative roots, by enumeration
  /// of levels 0..max|<lambda, beta>|+1 over all finite roots beta.
  int length(const ExtAffineWeylElement& x) const {
    int bound = 0;
    for (const auto& a : rs_.positive_roots()) bound = std::max(bound, std::abs(pairing(x.translation_part(), a)));
    bound += 1;
    int count = 0;
    for (const auto& a : rs_.positive_roots()) {
      for (const RootVec& beta : {a, -a}) {
        for (int n = 0; n <= bound; ++n) {
          AffineRoot r{beta, n};
          if (!r.is_positive()) continue;
          if (!x.apply(r).is_positive()) ++count;
        }
      }
    }
    return count;
  }

  /// s_i x > x, tested as x^{-1}(alpha_i) > 0.
  bool is_left_ascent(int i, const ExtAffineWeylElement& x) const {
    return x.inverse().apply(simple_affine_root(i)).is_positive();
  }

  /// Minimal in its coset x W: x(alpha_j) > 0 for every finite j.
  bool is_grassmannian(const ExtAffineWeylElement& x) const {
    for (int j = 1; j <= rank(); ++j)
      if (!x.apply(simple_affine_root(j)).is_positive()) return false;
    return true;
  }

  /// Greedy reduced word (smallest left descent first) for y in W_af.
  Word reduced_word(ExtAffineWeylElement y) const {
    Word out;
    for (;;) {
      int pick = -1;
      for (int i = 0; i <= rank(); ++i)
        if (!is_left_ascent(i, y)) {
          pick = i;
          break;
        }
      if (pick < 0) break;
      out.push_back(pick);
      y = simple_reflection(pick) * y;
    }
    if (!y.is_identity()) throw InvalidInput("element does not lie in the non-extended affine Weyl group");
    return out;
  }

  // ---- Sigma ----------------------------------------------------------------

  /// Nodes k with <varpi_k^vee, theta> = 1; together with 0 they index P^vee/Q^vee.
  const std::vector<int>& minuscule_nodes() const { return minuscule_; }

  const std::vector<SigmaElement>& sigma_group() const { return sigma_; }

  /// The Sigma element in the class of lambda mod Q^vee.
  const SigmaElement& sigma_of(const Coweight& lambda) const {
    for (const auto& s : sigma_)
      if (rs_.in_coroot_lattice(lambda - s.element.translation_part())) return s;
    throw VerificationError("coweight class not represented in Sigma");
  }
  const SigmaElement& sigma_of(const ExtAffineWeylElement& x) const {
    for (const auto& s : sigma_)
      if (s.element == x) return s;
    throw InvalidInput("element is not in Sigma");
  }

  /// pi_i: the Sigma element sending node 0 to node i.
  const SigmaElement& pi(int i) const {
    for (const auto& s : sigma_)
      if (s.image_of_zero == i) return s;
    throw InvalidInput("node " + std::to_string(i) + " is not special; pi_i undefined");
  }

  bool in_sigma(const ExtAffineWeylElement& x) const {
    for (const auto& s : sigma_)
      if (s.element == x) return true;
    return false;
  }

  SigmaDecomposition sigma_decompose(const ExtAffineWeylElement& x) const {
    const SigmaElement& s = sigma_of(x.translation_part());
    return {s, reduced_word(s.element.inverse() * x)};
  }

  /// (gamma_sigma, u_sigma) with sigma = t_{gamma_sigma} u_sigma.
  std::pair<Coweight, WeylElement> sigma_finite_part(const SigmaElement& s) const {
    return {s.element.translation_part(), s.element.finite_part()};
  }

  bool is_sigma_automorphism(const SigmaElement& s) const {
    for (int a = 0; a <= rank(); ++a)
      for (int b = 0; b <= rank(); ++b)
        if (affine_cartan(a, b) != affine_cartan(s.node_perm[static_cast<std::size_t>(a)], s.node_perm[static_cast<std::size_t>(b)]))
          return false;
    return true;
  }

  /// <alpha_a^vee, alpha_b> on I_af, with alpha_0 = -theta at level zero.
  int affine_cartan(int a, int b) const {
    RootVec ra = level_zero_root(a), rb = level_zero_root(b);
    return pairing(rs_.to_coweight(rs_.coroot(ra)), rb);
  }

  /// Order of s_a s_b, read from the affine Cartan matrix.
  int braid_order(int a, int b) const {
    if (a == b) return 1;
    switch (affine_cartan(a, b) * affine_cartan(b, a)) {
      case 0: return 2;
      case 1: return 3;
      case 2: return 4;
      case 3: return 6;
      default: return 0;  // infinite (affine A1)
    }
  }

 private:
  void check_node(int i) const {
    if (!valid_affine_node(i)) throw InvalidInput("affine node " + std::to_string(i) + " outside 0.." + std::to_string(rank()));
  }

  // Each class of P^vee/Q^vee is represented by 0 or a minuscule varpi_k^vee.
  // The length-zero element of the coset W_af t_lambda is found by stripping
  // left descents from t_lambda.
  void build_sigma() {
    minuscule_.clear();
    for (int k = 1; k <= rank(); ++k)
      if (pairing(rs_.fundamental_coweight(k), theta_) == 1) minuscule_.push_back(k);
    std::vector<Coweight> reps{Coweight(static_cast<std::size_t>(rank()))};
    for (int k : minuscule_) reps.push_back(rs_.fundamental_coweight(k));
    for (const auto& lam : reps) {
      ExtAffineWeylElement x = translation(lam);
      for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i <= rank(); ++i)
          if (!is_left_ascent(i, x)) {
            x = simple_reflection(i) * x;
            moved = true;
            break;
          }
      }
      SigmaElement s;
      s.element = x;
      s.node_perm.assign(static_cast<std::size_t>(rank() + 1), -1);
      for (int j = 0; j <= rank(); ++j) {
        AffineRoot img = x.apply(simple_affine_root(j));
        for (int k = 0; k <= rank(); ++k)
          if (img == simple_affine_root(k)) s.node_perm[static_cast<std::size_t>(j)] = k;
        if (s.node_perm[static_cast<std::size_t>(j)] < 0) throw VerificationError("length-zero element does not permute simple affine roots");
      }
      s.image_of_zero = s.node_perm[0];
      sigma_.push_back(std::move(s));
    }
  }

  RootSystem rs_;
  RootVec theta_;
  Coweight theta_vee_;
  WeylElement s_theta_;
  ExtAffineWeylElement s0_;
  std::vector<int> minuscule_;
  std::vector<SigmaElement> sigma_;
};

}  // namespace qkseidel
