#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkseidel {

/// Malformed input: bad type/rank pair, out-of-range node, non-special node...
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit was exceeded while expanding an expression.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation exists mathematically but is not provided (e.g. a general
/// product in the Peterson algebra).
class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An identity that should hold by construction failed.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
  return r;
}

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

/// Integer coordinate vector tagged with the basis it is expressed in.
/// Tags keep root-lattice, coweight and coroot coordinates from mixing.
template <class Tag>
class LatticeVec {
 public:
  LatticeVec() = default;
  explicit LatticeVec(std::size_t n) : c_(n, 0) {}
  explicit LatticeVec(std::vector<int> c) : c_(std::move(c)) {}
  LatticeVec(std::initializer_list<int> c) : c_(c) {}

  static LatticeVec unit(std::size_t n, std::size_t idx) {
    LatticeVec v(n);
    v.c_[idx] = 1;
    return v;
  }

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& coords() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_zero() const {
    for (int x : c_)
      if (x != 0) return false;
    return true;
  }

  LatticeVec& operator+=(const LatticeVec& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticeVec& operator-=(const LatticeVec& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  LatticeVec& operator*=(int k) {
    for (int& x : c_) x *= k;
    return *this;
  }
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator*(int k, LatticeVec a) { return a *= k; }
  LatticeVec operator-() const {
    LatticeVec r = *this;
    for (int& x : r.c_) x = -x;
    return r;
  }

  friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
  friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;

  friend std::ostream& operator<<(std::ostream& os, const LatticeVec& v) {
    os << '[';
    for (std::size_t i = 0; i < v.c_.size(); ++i) os << (i ? "," : "") << v.c_[i];
    return os << ']';
  }

 private:
  std::vector<int> c_;
};

struct RootTag;
struct CoweightTag;
struct CorootTag;

/// Element of the root lattice Q, in simple-root coordinates.
using RootVec = LatticeVec<RootTag>;
/// Element of the coweight lattice P^vee, in fundamental-coweight coordinates.
/// Coordinate j equals the pairing with the simple root alpha_j.
using Coweight = LatticeVec<CoweightTag>;
/// Element of the coroot lattice Q^vee, in simple-coroot coordinates.
/// Also used as the exponent of a Q-monomial.
using CorootVec = LatticeVec<CorootTag>;
using QExponent = CorootVec;

/// <lambda, beta> for lambda in P^vee and beta in Q.
inline int pairing(const Coweight& lambda, const RootVec& beta) {
  int s = 0;
  for (std::size_t j = 0; j < lambda.size(); ++j) s += lambda[j] * beta[j];
  return s;
}

/// Sign of a root given in simple-root coordinates (roots are all-nonnegative
/// or all-nonpositive). Zero vector reports 0.
inline int root_sign(const RootVec& beta) {
  for (int x : beta) {
    if (x > 0) return 1;
    if (x < 0) return -1;
  }
  return 0;
}

inline bool is_antidominant(const Coweight& lambda) {
  for (int x : lambda)
    if (x > 0) return false;
  return true;
}

inline bool is_nonnegative(const CorootVec& beta) {
  for (int x : beta)
    if (x < 0) return false;
  return true;
}

/// Exact small rational used for the inverse Cartan matrix.
struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend Fraction operator+(Fraction a, Fraction b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Fraction operator-(Fraction a, Fraction b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Fraction operator*(Fraction a, Fraction b) { return {a.num * b.num, a.den * b.den}; }
  friend Fraction operator/(Fraction a, Fraction b) { return {a.num * b.den, a.den * b.num}; }
  friend bool operator==(Fraction a, Fraction b) { return a.num == b.num && a.den == b.den; }
};

}  // namespace qkseidel
