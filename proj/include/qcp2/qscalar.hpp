#pragma once

// Exact Laurent polynomials in t = q^(1/k) with rational coefficients.
// This is the coefficient currency of every exact computation in the library:
// all q-powers, q-numbers and structure constants live here. The root order k
// (default 12) accommodates q^(1/2), q^(1/3) and q^(1/4) simultaneously.

#include <boost/multiprecision/gmp.hpp>

#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcp2 {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

inline constexpr int kDefaultRootOrder = 12;

struct QError : std::runtime_error {
  explicit QError(const std::string& m) : std::runtime_error(m) {}
};

class QScalar {
public:
  QScalar() = default;
  explicit QScalar(const Rational& c, int root = kDefaultRootOrder) : root_(root) {
    if (c != 0) c_[0] = c;
  }
  QScalar(long n) : QScalar(Rational(n)) {}

  // monomial c * t^e where t = q^(1/root)
  static QScalar monomial(const Rational& c, long e, int root = kDefaultRootOrder) {
    QScalar r(Rational(0), root);
    if (c != 0) r.c_[e] = c;
    return r;
  }
  static QScalar one(int root = kDefaultRootOrder) { return QScalar(Rational(1), root); }
  static QScalar zero(int root = kDefaultRootOrder) { return QScalar(Rational(0), root); }

  // q^e for rational exponent e; e*root must be an integer.
  static QScalar q_power(const Rational& e, int root = kDefaultRootOrder) {
    Rational te = e * root;
    if (denominator(te) != 1)
      throw QError("q_power: exponent " + to_str(e) + " not representable at root order " +
                   std::to_string(root));
    Integer n = numerator(te);
    if (n > 1000000 || n < -1000000) throw QError("q_power: exponent too large");
    return monomial(1, static_cast<long>(n), root);
  }

  int root_order() const { return root_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }
  bool is_monomial() const { return c_.size() == 1; }
  bool is_rational() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  size_t num_terms() const { return c_.size(); }

  Rational rational_value() const {
    if (c_.empty()) return Rational(0);
    if (!is_rational()) throw QError("rational_value: not a constant");
    return c_.begin()->second;
  }

  long min_exp() const { check_nonzero("min_exp"); return c_.begin()->first; }
  long max_exp() const { check_nonzero("max_exp"); return c_.rbegin()->first; }
  Rational leading_coeff() const { check_nonzero("leading_coeff"); return c_.rbegin()->second; }
  Rational coeff(long e) const { auto it = c_.find(e); return it == c_.end() ? Rational(0) : it->second; }

  const std::map<long, Rational>& coeffs() const { return c_; }

  QScalar& operator+=(const QScalar& o) {
    merge_root(o);
    for (auto& [e, c] : o.c_) add_term(e, c);
    return *this;
  }
  QScalar& operator-=(const QScalar& o) {
    merge_root(o);
    for (auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
  }
  friend QScalar operator+(QScalar a, const QScalar& b) { a += b; return a; }
  friend QScalar operator-(QScalar a, const QScalar& b) { a -= b; return a; }
  friend QScalar operator-(const QScalar& a) {
    QScalar r(Rational(0), a.root_);
    for (auto& [e, c] : a.c_) r.c_[e] = -c;
    return r;
  }
  friend QScalar operator*(const QScalar& a, const QScalar& b) {
    int root = a.c_.empty() ? b.root_ : a.root_;
    if (!a.c_.empty() && !b.c_.empty() && a.root_ != b.root_)
      throw QError("root order mismatch in product");
    QScalar r(Rational(0), root);
    for (auto& [ea, ca] : a.c_)
      for (auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  QScalar& operator*=(const QScalar& o) { *this = *this * o; return *this; }
  QScalar& operator*=(const Rational& s) {
    if (s == 0) { c_.clear(); return *this; }
    for (auto& [e, c] : c_) c *= s;
    return *this;
  }
  friend QScalar operator*(QScalar a, const Rational& s) { a *= s; return a; }
  friend QScalar operator*(const Rational& s, QScalar a) { a *= s; return a; }

  QScalar pow(unsigned n) const {
    QScalar r = one(root_), b = *this;
    while (n) { if (n & 1) r = r * b; b = b * b; n >>= 1; }
    return r;
  }

  bool operator==(const QScalar& o) const {
    if (c_.empty() && o.c_.empty()) return true;
    return root_ == o.root_ && c_ == o.c_;
  }
  bool operator!=(const QScalar& o) const { return !(*this == o); }
  // total order usable as a map key
  bool operator<(const QScalar& o) const {
    if (root_ != o.root_) return root_ < o.root_;
    return std::lexicographical_compare(
        c_.begin(), c_.end(), o.c_.begin(), o.c_.end(), [](const auto& x, const auto& y) {
          if (x.first != y.first) return x.first < y.first;
          return x.second < y.second;
        });
  }

  // Exact Laurent division; returns nullopt when the remainder is nonzero.
  std::optional<QScalar> try_div(const QScalar& d) const {
    if (d.is_zero()) throw QError("division by zero QScalar");
    if (is_zero()) return zero(root_);
    if (root_ != d.root_) throw QError("root order mismatch in division");
    long shift = min_exp() - d.min_exp();
    std::map<long, Rational> rem = c_;
    QScalar quot(Rational(0), root_);
    long dmax = d.max_exp();
    Rational dlc = d.leading_coeff();
    while (!rem.empty()) {
      long rmax = rem.rbegin()->first;
      long e = rmax - dmax;
      if (e < shift - (dmax - d.min_exp())) return std::nullopt;  // degree dropped below range
      Rational f = rem.rbegin()->second / dlc;
      quot.add_term(e, f);
      for (auto& [ed, cd] : d.c_) {
        auto it = rem.find(e + ed);
        Rational nv = (it == rem.end() ? Rational(0) : it->second) - f * cd;
        if (nv == 0) { if (it != rem.end()) rem.erase(it); }
        else rem[e + ed] = nv;
      }
      if (!rem.empty() && rem.rbegin()->first >= rmax) return std::nullopt;  // no progress
      if (!rem.empty() && rem.rbegin()->first - dmax < shift - 64) return std::nullopt;
    }
    return quot;
  }
  QScalar div_exact(const QScalar& d) const {
    auto r = try_div(d);
    if (!r) throw QError("inexact QScalar division: (" + render() + ") / (" + d.render() + ")");
    return *r;
  }

  // multiplicative inverse of a monomial
  QScalar inv_monomial() const {
    if (!is_monomial()) throw QError("inv_monomial: not a monomial: " + render());
    auto [e, c] = *c_.begin();
    return monomial(Rational(1) / c, -e, root_);
  }

  QScalar derivative() const {  // d/dt
    QScalar r(Rational(0), root_);
    for (auto& [e, c] : c_)
      if (e != 0) r.add_term(e - 1, c * e);
    return r;
  }

  // substitute t -> 1 (the classical limit q -> 1)
  Rational at_one() const {
    Rational s = 0;
    for (auto& [e, c] : c_) s += c;
    return s;
  }

  // numeric evaluation given the value of t
  template <class F>
  F eval_t(const F& t) const {
    F s = 0;
    for (auto& [e, c] : c_) {
      F term = static_cast<F>(numerator(c)) / static_cast<F>(denominator(c));
      s += term * pow_int(t, e);
    }
    return s;
  }
  // numeric evaluation given the value of q
  template <class F>
  F eval_q(const F& q) const {
    using std::pow;
    F t = pow(q, F(1) / F(root_));
    return eval_t(t);
  }

  // canonical text rendering, terms sorted by exponent
  std::string render() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : c_) {
      Rational a = c;
      if (first) { if (a < 0) { os << "-"; a = -a; } }
      else { os << (a < 0 ? " - " : " + "); if (a < 0) a = -a; }
      first = false;
      std::string qp = render_qpow(e);
      if (qp.empty()) os << to_str(a);
      else {
        if (a != 1) os << to_str(a) << "*";
        os << qp;
      }
    }
    return os.str();
  }

  // --- polynomial utilities used by the radical canonicalization ---

  // monic gcd of the polynomial parts (t-power units stripped); gcd(x,0)=monic(x)
  static QScalar poly_gcd(QScalar a, QScalar b) {
    if (a.is_zero()) return b.is_zero() ? b : b.unit_normalized();
    if (b.is_zero()) return a.unit_normalized();
    a = a.unit_normalized();
    b = b.unit_normalized();
    while (!b.is_zero()) {
      QScalar r = a.poly_mod(b);
      a = b;
      b = r.is_zero() ? r : r.unit_normalized();
    }
    return a.unit_normalized();
  }

  // strip the t-power and leading coefficient: result has min_exp 0, leading coeff 1
  QScalar unit_normalized() const {
    if (is_zero()) return *this;
    QScalar r(Rational(0), root_);
    long m = min_exp();
    Rational lc = leading_coeff();
    for (auto& [e, c] : c_) r.c_[e - m] = c / lc;
    return r;
  }

  // split this = square^2 * squarefree * (rational square) ...; see radical.hpp
  // here: polynomial-part split assuming min_exp()==0 and nonzero
  std::pair<QScalar, QScalar> squarefree_split() const {
    // Yun's algorithm. Returns (s, f) with this ~ s^2 * f up to a rational
    // unit, f squarefree. Caller reconciles the unit by division.
    QScalar P = unit_normalized();
    QScalar s = one(root_), f = one(root_);
    QScalar g = poly_gcd(P, P.derivative());
    if (g.is_one() || g.num_terms() == 0 || g.max_exp() == 0) return {s, P};
    QScalar b = P.div_exact(g);
    QScalar c = P.derivative().div_exact(g);
    QScalar d = c - b.derivative();
    int i = 1;
    while (!(b.num_terms() == 1 && b.max_exp() == 0)) {
      QScalar ai = poly_gcd(b, d);
      for (int k = 0; k < i / 2; ++k) s = s * ai;
      if (i % 2 == 1) f = f * ai;
      b = b.div_exact(ai);
      c = d.div_exact(ai);
      d = c - b.derivative();
      ++i;
      if (i > 512) throw QError("squarefree_split: runaway");
    }
    return {s.unit_normalized(), f.unit_normalized()};
  }

  static std::string to_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
  }

private:
  int root_ = kDefaultRootOrder;
  std::map<long, Rational> c_;

  void check_nonzero(const char* who) const { if (c_.empty()) throw QError(std::string(who) + " on zero"); }
  void merge_root(const QScalar& o) {
    if (c_.empty()) root_ = o.c_.empty() ? root_ : o.root_;
    else if (!o.c_.empty() && root_ != o.root_) throw QError("root order mismatch");
  }
  void add_term(long e, const Rational& c) {
    if (c == 0) return;
    auto it = c_.find(e);
    if (it == c_.end()) c_[e] = c;
    else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  QScalar poly_mod(const QScalar& d) const {
    // remainder of polynomial division (both unit-normalized, min_exp 0)
    QScalar rem = *this;
    long dmax = d.max_exp();
    while (!rem.is_zero() && rem.max_exp() >= dmax) {
      long e = rem.max_exp() - dmax;
      Rational f = rem.leading_coeff() / d.leading_coeff();
      for (auto& [ed, cd] : d.c_) rem.add_term(e + ed, -f * cd);
    }
    return rem;
  }
  template <class F>
  static F pow_int(const F& t, long e) {
    if (e == 0) return F(1);
    long n = e < 0 ? -e : e;
    F b = t, r = F(1);
    while (n) { if (n & 1) r *= b; b *= b; n >>= 1; }
    if (e < 0) return F(1) / r;
    return r;
  }
  std::string render_qpow(long e) const {
    if (e == 0) return "";
    long g = std::abs(std::__gcd(e, (long)root_));
    long num = e / g, den = root_ / g;
    std::ostringstream os;
    os << "q";
    if (den == 1) { if (num != 1) os << "^" << num; }
    else os << "^(" << num << "/" << den << ")";
    return os.str();
  }
};

// [x] = (q^x - q^(-x)) / (q - q^(-1)) for rational x (denominator must divide the root order)
inline QScalar q_number(const Rational& x, int root = kDefaultRootOrder) {
  if (x == 0) return QScalar::zero(root);
  QScalar num = QScalar::q_power(x, root) - QScalar::q_power(-x, root);
  QScalar den = QScalar::q_power(1, root) - QScalar::q_power(-1, root);
  return num.div_exact(den);
}
inline QScalar q_number(long n, int root = kDefaultRootOrder) { return q_number(Rational(n), root); }

inline QScalar q_factorial(long n, int root = kDefaultRootOrder) {
  if (n < 0) throw QError("q_factorial of negative");
  QScalar r = QScalar::one(root);
  for (long k = 2; k <= n; ++k) r = r * q_number(k, root);
  return r;
}

inline QScalar q_binomial(long n, long m, int root = kDefaultRootOrder) {
  if (m < 0 || m > n) throw QError("q_binomial out of range");
  return q_factorial(n, root).div_exact(q_factorial(m, root) * q_factorial(n - m, root));
}

// [j,k,l]! = q^{-(jk+kl+lj)} [j+k+l]! / ([j]! [k]! [l]!)
inline QScalar q_trinomial(long j, long k, long l, int root = kDefaultRootOrder) {
  if (j < 0 || k < 0 || l < 0) throw QError("q_trinomial: negative argument");
  QScalar r = q_factorial(j + k + l, root).div_exact(q_factorial(j, root) * q_factorial(k, root) *
                                                     q_factorial(l, root));
  return QScalar::q_power(Rational(-(j * k + k * l + l * j)), root) * r;
}

}  // namespace qcp2
