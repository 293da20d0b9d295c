#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qkseidel/peterson.hpp"

namespace qkseidel {

/// Standard parabolic subgroup W_P and its minimal coset representatives W^P.
struct ParabolicData {
  std::vector<int> nodes;              ///< I_P, sorted
  std::vector<WeylElement> min_reps;   ///< W^P, in the order of RootSystem::elements()
  std::size_t parabolic_order = 1;     ///< |W_P|

  bool is_borel() const { return nodes.empty(); }
  bool contains(int j) const { return std::binary_search(nodes.begin(), nodes.end(), j); }
};

inline ParabolicData make_parabolic(const RootSystem& rs, std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (int j : nodes)
    if (!rs.valid_node(j)) throw InvalidInput("parabolic node " + std::to_string(j) + " outside 1.." + std::to_string(rs.rank()));
  ParabolicData P;
  P.nodes = nodes;
  for (const auto& w : rs.elements()) {
    bool minimal = true;
    for (int j : nodes) minimal = minimal && !rs.is_right_descent(w, j);
    if (minimal) P.min_reps.push_back(w);
  }
  P.parabolic_order = 0;
  for (const auto& w : rs.elements()) {
    bool inside = true;
    for (int j : rs.reduced_word(w)) inside = inside && std::binary_search(nodes.begin(), nodes.end(), j);
    if (inside) ++P.parabolic_order;
  }
  return P;
}

/// All 2^rank standard parabolics, including B (empty) and G (all nodes).
inline std::vector<ParabolicData> all_parabolics(const RootSystem& rs) {
  std::vector<ParabolicData> out;
  for (unsigned mask = 0; mask < (1u << rs.rank()); ++mask) {
    std::vector<int> nodes;
    for (int j = 1; j <= rs.rank(); ++j)
      if (mask & (1u << (j - 1))) nodes.push_back(j);
    out.push_back(make_parabolic(rs, nodes));
  }
  return out;
}

/// Formal element of QK_T(G/P): sum of f * Q^beta * O^w, beta >= 0, w in W^P.
class QKElement {
 public:
  using Key = std::pair<QExponent, WeylElement>;
  using Terms = std::map<Key, LaurentPoly>;

  QKElement() = default;
  explicit QKElement(std::vector<int> base) : base_(std::move(base)) {}

  const std::vector<int>& base() const { return base_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const QExponent& beta, const WeylElement& w, const LaurentPoly& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{beta, w}, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend QKElement operator+(QKElement a, const QKElement& b) {
    for (const auto& [k, f] : b.terms_) a.add(k.first, k.second, f);
    return a;
  }
  friend bool operator==(const QKElement& a, const QKElement& b) { return a.base_ == b.base_ && a.terms_ == b.terms_; }

 private:
  std::vector<int> base_;
  Terms terms_;
};

enum class SeidelPolicy {
  verify_first,  ///< answer only after (i, w) has been verified on this model
  trust_sweep,   ///< answer if an exhaustive sweep has been recorded on this model
};

struct PushforwardReport {
  std::vector<int> parabolic;
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool std_lemma_holds = true;
  bool minrep_equivalence_holds = true;
  std::string first_failure;
  bool ok() const { return failures == 0 && std_lemma_holds && minrep_equivalence_holds; }
};

/// Formal models of QK_T(G/B) and QK_T(G/P): left W-action, Seidel products,
/// and the pushforward to G/P.
class QKModel {
 public:
  explicit QKModel(const RootSystem& rs) : peterson_(rs), session_(std::make_shared<Session>()) {}

  const RootSystem& root_system() const { return peterson_.root_system(); }
  const PetersonModule& peterson() const { return peterson_; }
  int rank() const { return root_system().rank(); }

  QExponent zero_exponent() const { return QExponent(static_cast<std::size_t>(rank())); }

  // ---- parabolic data ---------------------------------------------------

  WeylElement minrep(const WeylElement& w, const ParabolicData& P) const {
    return root_system().minimal_coset_representative(w, P.nodes);
  }

  /// beta - sum_{j in I_P} beta_j alpha_j^vee: the I_P coordinates are dropped.
  QExponent minrep(const QExponent& beta, const ParabolicData& P) const {
    QExponent out = beta;
    for (int j : P.nodes) out[static_cast<std::size_t>(j - 1)] = 0;
    return out;
  }

  bool in_min_reps(const WeylElement& w, const ParabolicData& P) const {
    for (int j : P.nodes)
      if (root_system().is_right_descent(w, j)) return false;
    return true;
  }

  QKElement schubert(const WeylElement& w, const ParabolicData& P) const { return monomial(zero_exponent(), w, P); }

  QKElement monomial(const QExponent& beta, const WeylElement& w, const ParabolicData& P) const {
    if (!in_min_reps(w, P)) throw InvalidInput("Schubert index is not a minimal coset representative");
    if (!is_nonnegative(beta)) throw InvalidInput("Q-exponent must be nonnegative");
    QKElement e(P.nodes);
    e.add(beta, w, LaurentPoly::one(rank()));
    return e;
  }

  // ---- left W-action ----------------------------------------------------

  /// s_i^L O^w = e^{a_i} O^w + (1 - e^{a_i}) O^{s_i w} if s_i w < w, else O^w.
  /// Q-monomials are fixed; R(T) coefficients move by s_i.
  QKElement left_action(int i, const QKElement& xi) const {
    const RootSystem& rs = root_system();
    const WeylElement si = rs.simple_reflection(i);
    const RootVec a = rs.simple_root(i);
    QKElement out(xi.base());
    for (const auto& [key, f] : xi.terms()) {
      const auto& [beta, w] = key;
      LaurentPoly g = f.apply(si);
      WeylElement siw = xi.base().empty() ? si * w : rs.minimal_coset_representative(si * w, xi.base());
      if (rs.is_left_descent(w, i)) {
        LaurentPoly eg = g.shifted(a);
        out.add(beta, w, eg);
        out.add(beta, siw, g - eg);
      } else {
        out.add(beta, w, g);
      }
    }
    return out;
  }

  QKElement left_action_w(const WeylElement& u, QKElement xi) const {
    Word word = root_system().reduced_word(u);
    for (auto it = word.rbegin(); it != word.rend(); ++it) xi = left_action(*it, xi);
    return xi;
  }

  // ---- Seidel products --------------------------------------------------

  /// Symbolic verification of the product formula for (i, w); successes are
  /// remembered for the lifetime of the model and its copies.
  SeidelVerification verify(int i, const WeylElement& w) const {
    SeidelVerification rep = peterson_.verify_seidel_theorem(i, w);
    if (rep.verified()) {
      std::lock_guard lock(session_->mutex);
      session_->verified.emplace(i, w);
    }
    return rep;
  }

  bool is_verified(int i, const WeylElement& w) const {
    std::lock_guard lock(session_->mutex);
    return session_->swept || session_->verified.count({i, w}) > 0;
  }

  /// Records externally computed verifications. Once every special node and
  /// every w has passed, trust_sweep is allowed.
  void record(const std::vector<SeidelVerification>& reps) const {
    std::lock_guard lock(session_->mutex);
    for (const auto& rep : reps)
      if (rep.verified()) session_->verified.emplace(rep.node, rep.w);
    session_->swept = session_->verified.size() == special_nodes(root_system()).size() * root_system().elements().size();
  }

  bool sweep_recorded() const {
    std::lock_guard lock(session_->mutex);
    return session_->swept;
  }

  /// O^{v[i]} * v[i]^L O^w = Q^{varpi_i - w^{-1} varpi_i} O^{v[i] w} in QK_T(G/B).
  QKElement seidel_product(int i, const WeylElement& w, SeidelPolicy policy = SeidelPolicy::verify_first) const {
    const RootSystem& rs = root_system();
    require_special(rs, i);
    if (policy == SeidelPolicy::trust_sweep && !sweep_recorded())
      throw VerificationError("no exhaustive sweep recorded for " + rs.name());
    if (policy == SeidelPolicy::verify_first && !is_verified(i, w)) {
      auto rep = verify(i, w);
      if (!rep.verified()) throw VerificationError("Seidel product not verified: " + rep.first_failure());
    }
    return monomial(quantum_exponent(rs, i, w), seidel_element(rs, i) * w, borel());
  }

  /// Termwise O^w -> O^{minrep(w)}, Q^beta -> Q^{minrep(beta)}.
  QKElement pushforward(const QKElement& xi, const ParabolicData& P) const {
    if (!xi.base().empty()) throw InvalidInput("pushforward starts from G/B");
    QKElement out(P.nodes);
    for (const auto& [key, f] : xi.terms()) {
      if (!is_nonnegative(key.first)) throw InvalidInput("pushforward needs nonnegative Q-exponents");
      out.add(minrep(key.first, P), minrep(key.second, P), f);
    }
    return out;
  }

  /// Seidel product in QK_T(G/P) for w in W^P, by pushforward of the G/B
  /// product; cross-checked against the closed formula.
  QKElement seidel_product_parabolic(int i, const WeylElement& w, const ParabolicData& P,
                                     SeidelPolicy policy = SeidelPolicy::verify_first) const {
    if (!in_min_reps(w, P)) throw InvalidInput("w is not a minimal coset representative for P");
    QKElement pushed = pushforward(seidel_product(i, w, policy), P);
    QKElement direct = seidel_product_parabolic_direct(i, w, P);
    if (!(pushed == direct)) throw VerificationError("pushforward and closed formula disagree");
    return pushed;
  }

  QKElement seidel_product_parabolic_direct(int i, const WeylElement& w, const ParabolicData& P) const {
    const RootSystem& rs = root_system();
    QExponent beta = quantum_exponent(rs, i, w);
    QExponent pb = minrep(beta, P);
    if (!is_nonnegative(pb)) throw VerificationError("parabolic quantum exponent is negative");
    return monomial(pb, minrep(seidel_element(rs, i) * w, P), P);
  }

  /// Products are available only in the Seidel shape
  /// O^{v[i]} * v[i]^L O^w (resp. its G/P analogue).
  QKElement product(const QKElement& a, const QKElement& b) const {
    const RootSystem& rs = root_system();
    if (a.base() != b.base()) throw InvalidInput("factors live over different flag varieties");
    ParabolicData P = make_parabolic(rs, a.base());
    for (int i : special_nodes(rs)) {
      WeylElement v = seidel_element(rs, i);
      if (!(a == schubert(minrep(v, P), P))) continue;
      QKElement pulled = left_action_w(v.inverse(), b);
      if (pulled.terms().size() != 1) continue;
      const auto& [key, f] = *pulled.terms().begin();
      if (!key.first.is_zero() || f != LaurentPoly::one(rank())) continue;
      return P.is_borel() ? seidel_product(i, key.second) : seidel_product_parabolic(i, key.second, P);
    }
    throw UnsupportedOperation("only Seidel-type products are available in this model");
  }

  // ---- verification -----------------------------------------------------

  /// pi_*(s_i^L O^w_{G/B}) = s_i^L O^{minrep(w)}_{G/P} for all w and i, with
  /// the exchange lemma and the minrep criterion checked alongside.
  PushforwardReport verify_pushforward_commutes(const ParabolicData& P) const {
    const RootSystem& rs = root_system();
    PushforwardReport rep;
    rep.parabolic = P.nodes;
    const ParabolicData B = borel();
    for (const auto& w : rs.elements()) {
      const WeylElement mw = minrep(w, P);
      for (int i = 1; i <= rank(); ++i) {
        ++rep.cases;
        QKElement lhs = pushforward(left_action(i, schubert(w, B)), P);
        QKElement rhs = left_action(i, schubert(mw, P));
        if (!(lhs == rhs)) {
          if (rep.failures++ == 0)
            rep.first_failure = "w=" + word_to_string(rs.reduced_word(w)) + " i=" + std::to_string(i);
        }
        const WeylElement si = rs.simple_reflection(i);
        const WeylElement si_mw = si * mw;
        // s_i minrep(w) in W^P  <=>  s_i minrep(w) = minrep(s_i w)
        if (in_min_reps(si_mw, P) != (si_mw == minrep(si * w, P))) rep.minrep_equivalence_holds = false;
        // w in W^P, s_i w > w, s_i w not in W^P  =>  s_i w = w s_j for some j in I_P
        if (in_min_reps(w, P) && rs.length(si * w) > rs.length(w) && !in_min_reps(si * w, P)) {
          bool found = false;
          for (int j : P.nodes) found = found || (si * w == w * rs.simple_reflection(j));
          if (!found) rep.std_lemma_holds = false;
        }
      }
    }
    return rep;
  }

  /// pushforward(seidel_product) against the closed formula for all special i
  /// and all w in W^P.
  bool verify_two_routes(const ParabolicData& P) const {
    const RootSystem& rs = root_system();
    for (int i : special_nodes(rs))
      for (const auto& w : P.min_reps) {
        QKElement pushed = pushforward(seidel_product(i, w), P);
        if (!(pushed == seidel_product_parabolic_direct(i, w, P))) return false;
      }
    return true;
  }

  ParabolicData borel() const { return make_parabolic(root_system(), {}); }

 private:
  struct Session {
    std::mutex mutex;
    std::set<std::pair<int, WeylElement>> verified;
    bool swept = false;
  };

  PetersonModule peterson_;
  std::shared_ptr<Session> session_;
};

}  // namespace qkseidel
