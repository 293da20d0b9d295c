#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "qkseidel/lattice.hpp"

namespace qkseidel {

/// Finite Weyl group element, stored as its action matrix on the root lattice
/// (column k is w(alpha_k) in simple-root coordinates) together with the
/// matrix of its inverse. Two elements are equal iff their matrices are.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(int rank) {
    std::vector<int> m(static_cast<std::size_t>(rank * rank), 0);
    for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i * rank + i)] = 1;
    return WeylElement(rank, m, m);
  }

  WeylElement(int rank, std::vector<int> mat, std::vector<int> inv)
      : rank_(rank), mat_(std::move(mat)), inv_(std::move(inv)) {}

  int rank() const { return rank_; }
  const std::vector<int>& matrix() const { return mat_; }

  RootVec apply(const RootVec& beta) const { return RootVec(mul(mat_, beta.coords())); }

  /// Action on coweights: w(lambda)_k = <lambda, w^{-1} alpha_k>.
  Coweight apply(const Coweight& lambda) const {
    std::vector<int> out(static_cast<std::size_t>(rank_), 0);
    for (int k = 0; k < rank_; ++k) {
      int s = 0;
      for (int m = 0; m < rank_; ++m) s += lambda[static_cast<std::size_t>(m)] * inv_[idx(m, k)];
      out[static_cast<std::size_t>(k)] = s;
    }
    return Coweight(std::move(out));
  }

  WeylElement inverse() const { return WeylElement(rank_, inv_, mat_); }

  bool is_identity() const { return *this == identity(rank_); }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return WeylElement(a.rank_, matmul(a.rank_, a.mat_, b.mat_), matmul(a.rank_, b.inv_, a.inv_));
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rank_ == b.rank_ && a.mat_ == b.mat_;
  }
  friend std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.mat_ <=> b.mat_;
  }

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r * rank_ + c); }

  std::vector<int> mul(const std::vector<int>& m, const std::vector<int>& v) const {
    std::vector<int> out(static_cast<std::size_t>(rank_), 0);
    for (int r = 0; r < rank_; ++r) {
      int s = 0;
      for (int c = 0; c < rank_; ++c) s += m[idx(r, c)] * v[static_cast<std::size_t>(c)];
      out[static_cast<std::size_t>(r)] = s;
    }
    return out;
  }

  static std::vector<int> matmul(int n, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(static_cast<std::size_t>(n * n), 0);
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) {
        int x = a[static_cast<std::size_t>(r * n + k)];
        if (x == 0) continue;
        for (int c = 0; c < n; ++c) out[static_cast<std::size_t>(r * n + c)] += x * b[static_cast<std::size_t>(k * n + c)];
      }
    return out;
  }

  int rank_ = 0;
  std::vector<int> mat_;
  std::vector<int> inv_;
};

using Word = std::vector<int>;

inline std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (int i : w) os << 's' << i;
  return os.str();
}

/// Finite root system of simple type with Bourbaki node numbering.
/// Nodes are 1..rank in the public interface; coordinate j-1 of every
/// lattice vector belongs to node j.
class RootSystem {
 public:
  static RootSystem build(char type_label, int rank) {
    RootSystem rs;
    rs.label_ = type_label;
    rs.rank_ = rank;
    rs.init();
    return rs;
  }

  char type_label() const { return label_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, label_) + std::to_string(rank_); }

  /// <alpha_j^vee, alpha_k> for nodes j, k in 1..rank.
  int cartan(int j, int k) const { return cartan_[cidx(j, k)]; }
  /// Squared length (alpha_j, alpha_j), normalised so short roots have 2.
  int norm2(int j) const { return norm2_[static_cast<std::size_t>(j - 1)]; }

  const std::vector<RootVec>& positive_roots() const { return positive_; }
  const RootVec& highest_root() const { return positive_.back(); }
  RootVec simple_root(int j) const { return RootVec::unit(static_cast<std::size_t>(rank_), static_cast<std::size_t>(j - 1)); }
  Coweight fundamental_coweight(int j) const { return Coweight::unit(static_cast<std::size_t>(rank_), static_cast<std::size_t>(j - 1)); }

  std::vector<int> nodes() const {
    std::vector<int> v(static_cast<std::size_t>(rank_));
    for (int j = 1; j <= rank_; ++j) v[static_cast<std::size_t>(j - 1)] = j;
    return v;
  }

  bool valid_node(int j) const { return j >= 1 && j <= rank_; }

  /// Symmetric bilinear form on the root lattice.
  int inner(const RootVec& a, const RootVec& b) const {
    int s = 0;
    for (int j = 1; j <= rank_; ++j)
      for (int k = 1; k <= rank_; ++k) s += a[static_cast<std::size_t>(j - 1)] * b[static_cast<std::size_t>(k - 1)] * inner_[cidx(j, k)];
    return s;
  }

  /// Coroot of a root, in simple-coroot coordinates.
  CorootVec coroot(const RootVec& beta) const {
    int n = inner(beta, beta);
    CorootVec out(static_cast<std::size_t>(rank_));
    for (int j = 1; j <= rank_; ++j) {
      int num = beta[static_cast<std::size_t>(j - 1)] * inner_[cidx(j, j)];
      if (num % n != 0) throw VerificationError("coroot not integral");
      out[static_cast<std::size_t>(j - 1)] = num / n;
    }
    return out;
  }

  /// Change of basis Q^vee -> P^vee.
  Coweight to_coweight(const CorootVec& b) const {
    Coweight out(static_cast<std::size_t>(rank_));
    for (int k = 1; k <= rank_; ++k) {
      int s = 0;
      for (int j = 1; j <= rank_; ++j) s += b[static_cast<std::size_t>(j - 1)] * cartan(j, k);
      out[static_cast<std::size_t>(k - 1)] = s;
    }
    return out;
  }

  /// Change of basis P^vee -> Q^vee; empty when lambda is not in Q^vee.
  std::optional<CorootVec> to_coroot(const Coweight& lambda) const {
    CorootVec out(static_cast<std::size_t>(rank_));
    for (int j = 0; j < rank_; ++j) {
      Fraction s(0);
      for (int k = 0; k < rank_; ++k)
        s = s + inv_cartan_t_[static_cast<std::size_t>(j * rank_ + k)] * Fraction(lambda[static_cast<std::size_t>(k)]);
      if (s.den != 1) return std::nullopt;
      out[static_cast<std::size_t>(j)] = static_cast<int>(s.num);
    }
    return out;
  }

  bool in_coroot_lattice(const Coweight& lambda) const { return to_coroot(lambda).has_value(); }

  /// <beta^vee, alpha> for beta^vee in Q^vee and alpha in Q.
  int pairing(const CorootVec& b, const RootVec& alpha) const { return qkseidel::pairing(to_coweight(b), alpha); }

  // ---- Weyl group -------------------------------------------------------

  WeylElement identity() const { return WeylElement::identity(rank_); }

  WeylElement simple_reflection(int j) const {
    if (!valid_node(j)) throw InvalidInput("node " + std::to_string(j) + " outside 1.." + std::to_string(rank_));
    return reflections_[static_cast<std::size_t>(j - 1)];
  }

  /// Reflection in an arbitrary root.
  WeylElement reflection(const RootVec& beta) const {
    Coweight bv = to_coweight(coroot(beta));
    std::vector<int> m(static_cast<std::size_t>(rank_ * rank_), 0);
    for (int k = 0; k < rank_; ++k) {
      int c = bv[static_cast<std::size_t>(k)];
      for (int r = 0; r < rank_; ++r)
        m[static_cast<std::size_t>(r * rank_ + k)] = (r == k ? 1 : 0) - c * beta[static_cast<std::size_t>(r)];
    }
    return WeylElement(rank_, m, m);
  }

  WeylElement from_word(std::span<const int> word) const {
    WeylElement w = identity();
    for (int j : word) w = w * simple_reflection(j);
    return w;
  }
  WeylElement from_word(std::initializer_list<int> word) const { return from_word(std::span<const int>(word.begin(), word.size())); }

  std::vector<RootVec> inversions(const WeylElement& w) const {
    std::vector<RootVec> out;
    for (const auto& a : positive_)
      if (root_sign(w.apply(a)) < 0) out.push_back(a);
    return out;
  }

  int length(const WeylElement& w) const {
    int n = 0;
    for (const auto& a : positive_)
      if (root_sign(w.apply(a)) < 0) ++n;
    return n;
  }

  /// Right descents: {k : w(alpha_k) < 0}.
  std::vector<int> descent_set(const WeylElement& w) const {
    std::vector<int> out;
    for (int k = 1; k <= rank_; ++k)
      if (root_sign(w.apply(simple_root(k))) < 0) out.push_back(k);
    return out;
  }

  bool is_right_descent(const WeylElement& w, int k) const { return root_sign(w.apply(simple_root(k))) < 0; }
  bool is_left_descent(const WeylElement& w, int k) const { return root_sign(w.inverse().apply(simple_root(k))) < 0; }

  /// Lexicographically least reduced word: repeatedly strip the smallest
  /// left descent.
  Word reduced_word(WeylElement w) const {
    Word out;
    for (;;) {
      WeylElement winv = w.inverse();
      int pick = 0;
      for (int k = 1; k <= rank_; ++k)
        if (root_sign(winv.apply(simple_root(k))) < 0) {
          pick = k;
          break;
        }
      if (pick == 0) break;
      out.push_back(pick);
      w = simple_reflection(pick) * w;
    }
    return out;
  }

  /// Longest element of the parabolic subgroup generated by {s_j : j in J}.
  WeylElement longest_element(const std::vector<int>& J) const {
    WeylElement w = identity();
    for (bool grew = true; grew;) {
      grew = false;
      for (int j : J)
        if (!is_right_descent(w, j)) {
          w = w * simple_reflection(j);
          grew = true;
        }
    }
    return w;
  }
  WeylElement longest_element() const { return longest_element(nodes()); }

  /// Shortest element of the coset w W_J.
  WeylElement minimal_coset_representative(WeylElement w, const std::vector<int>& J) const {
    for (bool shrank = true; shrank;) {
      shrank = false;
      for (int j : J)
        if (is_right_descent(w, j)) {
          w = w * simple_reflection(j);
          shrank = true;
        }
    }
    return w;
  }

  std::vector<int> complement(const std::vector<int>& J) const {
    std::vector<int> out;
    for (int j = 1; j <= rank_; ++j)
      if (std::find(J.begin(), J.end(), j) == J.end()) out.push_back(j);
    return out;
  }

  /// Every element of W, sorted by length then reduced word. Computed once
  /// and shared between copies.
  const std::vector<WeylElement>& elements() const {
    std::call_once(cache_->once, [this] { cache_->elements = enumerate(); });
    return cache_->elements;
  }

  /// Signed-permutation / permutation one-line form for classical types.
  /// Type A_{n-1} acts on n letters; B, C, D on +-1..n. Empty for E, F, G.
  std::vector<int> one_line(const WeylElement& w) const {
    if (label_ == 'E' || label_ == 'F' || label_ == 'G') return {};
    int letters = label_ == 'A' ? rank_ + 1 : rank_;
    std::vector<int> img(static_cast<std::size_t>(letters));
    for (int k = 0; k < letters; ++k) img[static_cast<std::size_t>(k)] = k + 1;
    auto act = [&](int j, int k) -> int {  // s_j on signed letter k
      int sign = k < 0 ? -1 : 1;
      int a = k * sign;
      bool last = (label_ != 'A') && j == rank_;
      if (!last) {
        if (a == j) a = j + 1;
        else if (a == j + 1) a = j;
        return sign * a;
      }
      if (label_ == 'D') {
        if (a == rank_ - 1) return -sign * rank_;
        if (a == rank_) return -sign * (rank_ - 1);
        return sign * a;
      }
      return a == rank_ ? -sign * a : sign * a;
    };
    for (int j : reduced_word(w)) {
      std::vector<int> next(img.size());
      for (int k = 1; k <= letters; ++k) {
        int t = act(j, k);
        int v = img[static_cast<std::size_t>((t < 0 ? -t : t) - 1)];
        next[static_cast<std::size_t>(k - 1)] = t < 0 ? -v : v;
      }
      img = std::move(next);
    }
    return img;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<WeylElement> elements;
  };

  std::size_t cidx(int j, int k) const { return static_cast<std::size_t>((j - 1) * rank_ + (k - 1)); }

  void init() {
    struct Bond {
      int a, b;
    };
    std::vector<Bond> bonds;
    norm2_.assign(static_cast<std::size_t>(rank_), 2);
    auto chain = [&](int upto) {
      for (int j = 1; j < upto; ++j) bonds.push_back({j, j + 1});
    };
    auto bad = [&] { throw InvalidInput(std::string("invalid simple type ") + label_ + std::to_string(rank_)); };
    switch (label_) {
      case 'A':
        if (rank_ < 1) bad();
        chain(rank_);
        break;
      case 'B':
        if (rank_ < 2) bad();
        chain(rank_);
        for (int j = 1; j < rank_; ++j) norm2_[static_cast<std::size_t>(j - 1)] = 4;
        break;
      case 'C':
        if (rank_ < 2) bad();
        chain(rank_);
        norm2_[static_cast<std::size_t>(rank_ - 1)] = 4;
        break;
      case 'D':
        if (rank_ < 3) bad();
        chain(rank_ - 1);
        bonds.push_back({rank_ - 2, rank_});
        break;
      case 'E':
        if (rank_ < 6 || rank_ > 8) bad();
        bonds.push_back({1, 3});
        bonds.push_back({2, 4});
        for (int j = 3; j < rank_; ++j) bonds.push_back({j, j + 1});
        break;
      case 'F':
        if (rank_ != 4) bad();
        chain(4);
        norm2_ = {4, 4, 2, 2};
        break;
      case 'G':
        if (rank_ != 2) bad();
        chain(2);
        norm2_ = {2, 6};
        break;
      default:
        bad();
    }
    auto sz = static_cast<std::size_t>(rank_ * rank_);
    inner_.assign(sz, 0);
    cartan_.assign(sz, 0);
    for (int j = 1; j <= rank_; ++j) inner_[cidx(j, j)] = norm2(j);
    for (auto [a, b] : bonds) {
      int v = -std::max(norm2(a), norm2(b)) / 2;
      inner_[cidx(a, b)] = inner_[cidx(b, a)] = v;
    }
    for (int j = 1; j <= rank_; ++j)
      for (int k = 1; k <= rank_; ++k) cartan_[cidx(j, k)] = 2 * inner_[cidx(j, k)] / norm2(j);

    for (int j = 1; j <= rank_; ++j) {
      std::vector<int> m(sz, 0);
      for (int k = 1; k <= rank_; ++k)
        for (int r = 1; r <= rank_; ++r)
          m[static_cast<std::size_t>((r - 1) * rank_ + (k - 1))] = (r == k ? 1 : 0) - (r == j ? cartan(j, k) : 0);
      reflections_.emplace_back(rank_, m, m);
    }

    build_positive_roots();
    build_inverse_cartan();
    cache_ = std::make_shared<Cache>();
  }

  // Closure under addition of simple roots, height by height, using root
  // strings: beta + alpha_j is a root iff p - <alpha_j^vee, beta> > 0 where p
  // is the length of the downward alpha_j-string through beta.
  void build_positive_roots() {
    std::set<RootVec> known;
    std::vector<RootVec> layer;
    for (int j = 1; j <= rank_; ++j) {
      layer.push_back(simple_root(j));
      known.insert(simple_root(j));
    }
    std::vector<RootVec> all = layer;
    while (!layer.empty()) {
      std::set<RootVec> next;
      for (const auto& beta : layer) {
        for (int j = 1; j <= rank_; ++j) {
          RootVec aj = simple_root(j);
          int p = 0;
          for (RootVec down = beta - aj; known.count(down); down -= aj) ++p;
          int q = p - qkseidel::pairing(Coweight(cartan_row(j)), beta);
          if (q > 0) {
            RootVec up = beta + aj;
            if (!known.count(up)) next.insert(up);
          }
        }
      }
      layer.assign(next.begin(), next.end());
      for (const auto& r : layer) known.insert(r);
      all.insert(all.end(), layer.begin(), layer.end());
    }
    auto height = [](const RootVec& r) {
      int h = 0;
      for (int x : r) h += x;
      return h;
    };
    std::stable_sort(all.begin(), all.end(), [&](const RootVec& a, const RootVec& b) {
      int ha = height(a), hb = height(b);
      return ha != hb ? ha < hb : a < b;
    });
    positive_ = std::move(all);
  }

  std::vector<int> cartan_row(int j) const {
    std::vector<int> r(static_cast<std::size_t>(rank_));
    for (int k = 1; k <= rank_; ++k) r[static_cast<std::size_t>(k - 1)] = cartan(j, k);
    return r;
  }

  // (C^T)^{-1} by Gauss-Jordan over the rationals.
  void build_inverse_cartan() {
    int n = rank_;
    std::vector<Fraction> a(static_cast<std::size_t>(n * n)), inv(static_cast<std::size_t>(n * n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        a[static_cast<std::size_t>(r * n + c)] = Fraction(cartan(c + 1, r + 1));
        inv[static_cast<std::size_t>(r * n + c)] = Fraction(r == c ? 1 : 0);
      }
    auto at = [n](std::vector<Fraction>& m, int r, int c) -> Fraction& { return m[static_cast<std::size_t>(r * n + c)]; };
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (at(a, piv, col).num == 0) ++piv;
      for (int c = 0; c < n; ++c) {
        std::swap(at(a, piv, c), at(a, col, c));
        std::swap(at(inv, piv, c), at(inv, col, c));
      }
      Fraction p = at(a, col, col);
      for (int c = 0; c < n; ++c) {
        at(a, col, c) = at(a, col, c) / p;
        at(inv, col, c) = at(inv, col, c) / p;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || at(a, r, col).num == 0) continue;
        Fraction f = at(a, r, col);
        for (int c = 0; c < n; ++c) {
          at(a, r, c) = at(a, r, c) - f * at(a, col, c);
          at(inv, r, c) = at(inv, r, c) - f * at(inv, col, c);
        }
      }
    }
    inv_cartan_t_ = std::move(inv);
  }

  std::vector<WeylElement> enumerate() const {
    std::set<WeylElement> seen{identity()};
    std::deque<WeylElement> queue{identity()};
    while (!queue.empty()) {
      WeylElement w = queue.front();
      queue.pop_front();
      for (const auto& s : reflections_) {
        WeylElement ws = w * s;
        if (seen.insert(ws).second) queue.push_back(ws);
      }
    }
    std::vector<std::pair<std::pair<int, Word>, WeylElement>> keyed;
    keyed.reserve(seen.size());
    for (const auto& w : seen) keyed.push_back({{length(w), reduced_word(w)}, w});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<WeylElement> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(std::move(k.second));
    return out;
  }

  char label_ = 'A';
  int rank_ = 0;
  std::vector<int> norm2_;
  std::vector<int> inner_;
  std::vector<int> cartan_;
  std::vector<WeylElement> reflections_;
  std::vector<RootVec> positive_;
  std::vector<Fraction> inv_cartan_t_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace qkseidel
