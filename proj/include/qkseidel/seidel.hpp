#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qkseidel/affine_weyl.hpp"

namespace qkseidel {

/// Special (cominuscule) nodes: <varpi_i^vee, alpha> in {0, 1} for every
/// positive root alpha.
inline std::vector<int> special_nodes(const RootSystem& rs) {
  std::vector<int> out;
  for (int i = 1; i <= rs.rank(); ++i) {
    bool ok = true;
    for (const auto& a : rs.positive_roots()) {
      int p = pairing(rs.fundamental_coweight(i), a);
      if (p != 0 && p != 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(i);
  }
  return out;
}

inline bool is_special(const RootSystem& rs, int i) {
  auto s = special_nodes(rs);
  return std::find(s.begin(), s.end(), i) != s.end();
}

inline void require_special(const RootSystem& rs, int i) {
  if (!rs.valid_node(i)) throw InvalidInput("node " + std::to_string(i) + " outside 1.." + std::to_string(rs.rank()));
  for (const auto& a : rs.positive_roots()) {
    int p = pairing(rs.fundamental_coweight(i), a);
    if (p != 0 && p != 1) {
      std::ostringstream os;
      os << "node " << i << " of " << rs.name() << " is not special: <varpi_" << i << "^vee, " << a << "> = " << p;
      throw InvalidInput(os.str());
    }
  }
}

/// w_circ * w_{P_i}, the longest element times the longest element of the
/// maximal parabolic subgroup for I \ {i}. Defined for every node.
inline WeylElement longest_times_parabolic_longest(const RootSystem& rs, int i) {
  return rs.longest_element() * rs.longest_element(rs.complement({i}));
}

/// Seidel element v[i] = w_circ w_{P_i}; i must be special.
inline WeylElement seidel_element(const RootSystem& rs, int i) {
  require_special(rs, i);
  return longest_times_parabolic_longest(rs, i);
}

/// gamma_w = -sum_{j in Des(w)} varpi_j^vee.
inline Coweight descent_coweight(const RootSystem& rs, const WeylElement& w) {
  Coweight g(static_cast<std::size_t>(rs.rank()));
  for (int j : rs.descent_set(w)) g[static_cast<std::size_t>(j - 1)] = -1;
  return g;
}

/// varpi_i^vee - w^{-1}(varpi_i^vee), in simple-coroot coordinates. Always
/// in the nonnegative span of the simple coroots; anything else is reported
/// as a VerificationError.
inline QExponent quantum_exponent(const RootSystem& rs, int i, const WeylElement& w) {
  require_special(rs, i);
  Coweight om = rs.fundamental_coweight(i);
  Coweight diff = om - w.inverse().apply(om);
  auto beta = rs.to_coroot(diff);
  if (!beta) throw VerificationError("quantum exponent not in the coroot lattice");
  if (!is_nonnegative(*beta)) throw VerificationError("quantum exponent has a negative coordinate");
  return *beta;
}

/// Data attached to a special node on the affine side.
struct SeidelDatum {
  int node = 0;
  WeylElement v;                    ///< Seidel element v[i]
  ExtAffineWeylElement kappa;       ///< kappa_i = pi_i t_{-varpi_i^vee}
  ExtAffineWeylElement pi_inverse;  ///< pi_i^{-1}
};

inline SeidelDatum seidel_datum(const ExtAffineWeyl& W, int i) {
  const RootSystem& rs = W.root_system();
  SeidelDatum d;
  d.node = i;
  d.v = seidel_element(rs, i);
  const ExtAffineWeylElement& pi = W.pi(i).element;
  d.pi_inverse = pi.inverse();
  d.kappa = pi * W.translation(-rs.fundamental_coweight(i));
  return d;
}

/// Outcome of a named identity check: which identity, and both sides when it fails.
struct CheckResult {
  std::string name;
  bool holds = true;
  std::string detail;
};

template <class T>
inline std::string to_text(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// All four defining identities of a Seidel datum.
inline std::vector<CheckResult> check_seidel_datum(const ExtAffineWeyl& W, const SeidelDatum& d) {
  const RootSystem& rs = W.root_system();
  std::vector<CheckResult> out;
  const Coweight om = rs.fundamental_coweight(d.node);
  const ExtAffineWeylElement t_minus = W.translation(-om);
  const ExtAffineWeylElement pi = d.pi_inverse.inverse();

  out.push_back({"t_{-varpi} = pi^{-1} kappa", t_minus == d.pi_inverse * d.kappa, ""});
  out.push_back({"kappa in W_af^0",
                 W.is_grassmannian(d.kappa) && rs.in_coroot_lattice(d.kappa.translation_part()), ""});
  out.push_back({"v t_{-varpi} = pi^{-1}", W.finite(d.v) * t_minus == d.pi_inverse, ""});
  out.push_back({"pi v^{-1} pi^{-1} = kappa", pi * W.finite(d.v.inverse()) * d.pi_inverse == d.kappa, ""});

  std::set<RootVec> inv;
  for (const auto& a : rs.inversions(d.v)) inv.insert(a);
  std::set<RootVec> level_one;
  for (const auto& a : rs.positive_roots())
    if (pairing(om, a) == 1) level_one.insert(a);
  out.push_back({"Inv(v) = {alpha : <varpi, alpha> = 1}", inv == level_one, ""});
  return out;
}

/// gamma_{v[i] w} = gamma_w - w^{-1}(varpi_i^vee).
inline CheckResult verify_key_lemma(const RootSystem& rs, int i, const WeylElement& w) {
  WeylElement v = seidel_element(rs, i);
  Coweight lhs = descent_coweight(rs, v * w);
  Coweight rhs = descent_coweight(rs, w) - w.inverse().apply(rs.fundamental_coweight(i));
  CheckResult r{"gamma_{v w} = gamma_w - w^{-1} varpi", lhs == rhs, ""};
  if (!r.holds) r.detail = "lhs " + to_text(lhs) + " rhs " + to_text(rhs);
  return r;
}

/// pi_i^{-1} w t_{gamma_w} = v[i] w t_{gamma_{v[i] w}} in the extended affine Weyl group.
inline CheckResult verify_group_lemma(const ExtAffineWeyl& W, int i, const WeylElement& w) {
  const RootSystem& rs = W.root_system();
  WeylElement v = seidel_element(rs, i);
  ExtAffineWeylElement lhs = W.pi(i).element.inverse() * W.finite(w) * W.translation(descent_coweight(rs, w));
  ExtAffineWeylElement rhs = W.finite(v * w) * W.translation(descent_coweight(rs, v * w));
  CheckResult r{"pi^{-1} w t_{gamma_w} = v w t_{gamma_{vw}}", lhs == rhs, ""};
  if (!r.holds)
    r.detail = "lhs t" + to_text(lhs.translation_part()) + " rhs t" + to_text(rhs.translation_part());
  return r;
}

/// Inv(vw) = (Inv(w) \ -w^{-1}Inv(v)) disjoint-union (w^{-1}Inv(v) \ Inv(w)),
/// with the right-hand side read inside R^+.
inline bool verify_inversion_product(const RootSystem& rs, const WeylElement& v, const WeylElement& w) {
  std::set<RootVec> inv_w, lhs, first, second;
  for (const auto& a : rs.inversions(w)) inv_w.insert(a);
  for (const auto& a : rs.inversions(v * w)) lhs.insert(a);
  std::set<RootVec> winv_inv_v;
  WeylElement winv = w.inverse();
  for (const auto& a : rs.inversions(v)) winv_inv_v.insert(winv.apply(a));
  for (const auto& a : inv_w)
    if (!winv_inv_v.count(-a)) first.insert(a);
  for (const auto& a : winv_inv_v)
    if (root_sign(a) > 0 && !inv_w.count(a)) second.insert(a);
  for (const auto& a : first)
    if (second.count(a)) return false;
  std::set<RootVec> rhs = first;
  rhs.insert(second.begin(), second.end());
  return lhs == rhs;
}

/// Inv(min rep of w_circ W_{P_i}) = {alpha > 0 : <varpi_i^vee, alpha> > 0}, any node i.
inline bool verify_inv_min(const RootSystem& rs, int i) {
  WeylElement m = rs.minimal_coset_representative(rs.longest_element(), rs.complement({i}));
  std::set<RootVec> inv, expect;
  for (const auto& a : rs.inversions(m)) inv.insert(a);
  for (const auto& a : rs.positive_roots())
    if (pairing(rs.fundamental_coweight(i), a) > 0) expect.insert(a);
  return inv == expect && m == longest_times_parabolic_longest(rs, i);
}

/// Inv(v[i]) is stable under W_{P_i}: s_j Inv(v[i]) = Inv(v[i]) for j != i.
inline bool verify_inversions_levi_stable(const RootSystem& rs, int i) {
  std::set<RootVec> inv;
  for (const auto& a : rs.inversions(seidel_element(rs, i))) inv.insert(a);
  for (int j : rs.complement({i})) {
    WeylElement s = rs.simple_reflection(j);
    for (const auto& a : inv)
      if (!inv.count(s.apply(a))) return false;
  }
  return true;
}

}  // namespace qkseidel
