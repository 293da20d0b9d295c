#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qkseidel/rootsys.hpp"

namespace qkseidel {

/// Upper bound on the number of stored terms in any single polynomial.
/// Set once at start-up (the CLI exposes it as --term-budget).
inline std::atomic<std::size_t>& term_budget() {
  static std::atomic<std::size_t> budget{20000};
  return budget;
}

/// Element of Z[Q]: finite sum of c * e^beta with beta in the root lattice.
class LaurentPoly {
 public:
  using Exponent = RootVec;
  using Terms = std::map<Exponent, std::int64_t>;

  LaurentPoly() = default;

  static LaurentPoly constant(int rank, std::int64_t c) { return monomial(RootVec(static_cast<std::size_t>(rank)), c); }
  static LaurentPoly one(int rank) { return constant(rank, 1); }
  static LaurentPoly monomial(const Exponent& e, std::int64_t c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }
  /// 1 - e^beta
  static LaurentPoly one_minus(const RootVec& beta) {
    return one(static_cast<int>(beta.size())) - monomial(beta);
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    check_budget();
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    check_budget();
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, detail::checked_mul(ca, cb));
    r.check_budget();
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(std::int64_t k) const {
    if (k == 0) return {};
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = detail::checked_mul(c, k);
    return r;
  }

  /// Multiply by e^beta.
  LaurentPoly shifted(const RootVec& beta) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + beta, c);
    return r;
  }

  /// Level-zero Weyl action e^beta -> e^{w(beta)}.
  LaurentPoly apply(const WeylElement& w) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(w.apply(e), c);
    return r;
  }

  /// gcd of the coefficients (0 for the zero polynomial).
  std::int64_t content() const {
    std::int64_t g = 0;
    for (const auto& [e, c] : terms_) g = std::gcd(g, c < 0 ? -c : c);
    return g;
  }

  LaurentPoly divided_by_integer(std::int64_t k) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) {
      if (c % k != 0) throw VerificationError("inexact integer division of polynomial");
      c /= k;
    }
    return r;
  }

  /// Coefficient of the lexicographically largest exponent.
  std::int64_t leading_coefficient() const { return terms_.empty() ? 0 : terms_.rbegin()->second; }

  /// Exact quotient by (1 - e^gamma), gamma != 0. Throws if not divisible.
  /// Works line by line: along each coset beta + Z*gamma the restriction is a
  /// one-variable Laurent polynomial in t = e^gamma, divisible by (1 - t) iff
  /// its coefficients sum to zero; the quotient coefficients are prefix sums.
  LaurentPoly divided_by_one_minus(const RootVec& gamma) const {
    std::size_t pivot = 0;
    while (pivot < gamma.size() && gamma[pivot] == 0) ++pivot;
    if (pivot == gamma.size()) throw InvalidInput("division by 1 - e^0");
    const long long g = gamma[pivot];
    std::map<Exponent, std::map<long long, std::int64_t>> lines;
    for (const auto& [e, c] : terms_) {
      long long k = detail::floor_div(e[pivot], g);
      Exponent base = e - static_cast<int>(k) * gamma;
      lines[base][k] += c;
    }
    LaurentPoly q;
    for (const auto& [base, coeffs] : lines) {
      std::int64_t running = 0;
      long long k = coeffs.begin()->first;
      const long long last = coeffs.rbegin()->first;
      for (; k <= last; ++k) {
        auto it = coeffs.find(k);
        if (it != coeffs.end()) running = detail::checked_add(running, it->second);
        if (k == last) break;
        if (running != 0) q.add_term(base + static_cast<int>(k) * gamma, running);
      }
      if (running != 0) throw VerificationError("polynomial is not divisible by (1 - e^gamma)");
    }
    q.check_budget();
    return q;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend auto operator<=>(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ <=> b.terms_; }

  /// Human-readable form in the variables x_j = e^{alpha_j}.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::int64_t mag = c < 0 ? -c : c;
      if (first) os << (c < 0 ? "-" : "");
      else os << (c < 0 ? " - " : " + ");
      first = false;
      bool unit = e.is_zero();
      if (mag != 1 || unit) os << mag;
      bool need_star = mag != 1;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        if (need_star) os << '*';
        os << 'x' << (j + 1);
        if (e[j] != 1) os << '^' << e[j];
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  void add_term(const Exponent& e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  void check_budget() const {
    if (terms_.size() > term_budget().load(std::memory_order_relaxed))
      throw BudgetExceeded("polynomial exceeded term budget (" + std::to_string(terms_.size()) + " terms)");
  }

  Terms terms_;
};

/// Element of Frac Z[Q], kept as an unreduced fraction. Only the integer
/// content is cancelled; equality is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(int rank) : num_(), den_(LaurentPoly::one(rank)) {}
  RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidInput("zero denominator");
    normalize();
  }
  static RationalFunction from_poly(const LaurentPoly& p, int rank) { return {p, LaurentPoly::one(rank)}; }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  RationalFunction inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero rational function");
    return {den_, num_};
  }

  RationalFunction apply(const WeylElement& w) const { return {num_.apply(w), den_.apply(w)}; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const {
    if (den_ == LaurentPoly::one(static_cast<int>(den_.terms().begin()->first.size()))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly::one(static_cast<int>(den_.terms().begin()->first.size()));
      return;
    }
    std::int64_t g = std::gcd(num_.content(), den_.content());
    if (den_.leading_coefficient() < 0) g = -g;
    if (g != 1) {
      num_ = num_.divided_by_integer(g);
      den_ = den_.divided_by_integer(g);
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace qkseidel
