#pragma once

// Scalars extended by formal square roots: finite sums  sum_i n_i * sqrt(r_i)
// over a common QScalar denominator. Radicands are kept in a canonical
// squarefree form, so that sqrt(x)*sqrt(x) = x collapses automatically and
// equality of radical expressions is decidable exactly. Square roots of
// q-factorial products (the Psi_N entries) and of [2], [3] (wedge structure
// constants) all flow through this one type.

#include <algorithm>
#include <vector>

#include "qcp2/bigfloat.hpp"
#include "qcp2/qscalar.hpp"

namespace qcp2 {

struct RadTerm {
  QScalar num;  // nonzero
  QScalar rad;  // canonical: squarefree poly part, square-extracted content; rad==1 for rational terms
};

class RScalar {
public:
  RScalar() : den_(QScalar::one()) {}
  RScalar(const QScalar& s) : den_(QScalar::one()) {
    if (!s.is_zero()) terms_.push_back({s, QScalar::one(s.root_order())});
  }
  RScalar(const Rational& r) : RScalar(QScalar(r)) {}
  RScalar(long n) : RScalar(QScalar(Rational(n))) {}

  static RScalar zero() { return RScalar(); }
  static RScalar one() { return RScalar(QScalar::one()); }

  // sqrt of an exact scalar, canonicalized:  sqrt(R) = outside * sqrt(rad)
  static RScalar sqrt_of(const QScalar& R) {
    if (R.is_zero()) return zero();
    auto [outside, rad] = canonical_sqrt_split(R);
    RScalar r;
    r.terms_.push_back({outside, rad});
    r.normalize();
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational_free() const {  // no radicals present
    for (auto& t : terms_)
      if (!t.rad.is_one()) return false;
    return true;
  }
  size_t num_terms() const { return terms_.size(); }
  const std::vector<RadTerm>& terms() const { return terms_; }
  const QScalar& den() const { return den_; }

  // exact QScalar value; requires all radicands trivial and exact division by den
  QScalar as_qscalar() const {
    QScalar s = QScalar::zero();
    for (auto& t : terms_) {
      if (!t.rad.is_one()) throw QError("as_qscalar: radical present: " + render());
      s += t.num;
    }
    return s.div_exact(den_);
  }

  RScalar& operator+=(const RScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    if (den_ == o.den_) {
      for (auto& t : o.terms_) terms_.push_back(t);
    } else {
      for (auto& t : terms_) t.num = t.num * o.den_;
      for (auto& t : o.terms_) terms_.push_back({t.num * den_, t.rad});
      den_ = den_ * o.den_;
    }
    normalize();
    return *this;
  }
  RScalar& operator-=(const RScalar& o) { return *this += -o; }
  friend RScalar operator+(RScalar a, const RScalar& b) { a += b; return a; }
  friend RScalar operator-(RScalar a, const RScalar& b) { a -= b; return a; }
  friend RScalar operator-(const RScalar& a) {
    RScalar r = a;
    for (auto& t : r.terms_) t.num = -t.num;
    return r;
  }
  friend RScalar operator*(const RScalar& a, const RScalar& b) {
    RScalar r;
    r.den_ = a.den_ * b.den_;
    for (auto& ta : a.terms_)
      for (auto& tb : b.terms_) {
        if (ta.rad == tb.rad) {
          r.terms_.push_back({ta.num * tb.num * ta.rad, QScalar::one()});
        } else {
          auto& [outside, rad] = product_split(ta.rad, tb.rad);
          r.terms_.push_back({ta.num * tb.num * outside, rad});
        }
      }
    r.normalize();
    return r;
  }
  RScalar& operator*=(const RScalar& o) { *this = *this * o; return *this; }
  friend RScalar operator*(const QScalar& s, RScalar a) {
    for (auto& t : a.terms_) t.num = t.num * s;
    a.normalize();
    return a;
  }
  friend RScalar operator*(RScalar a, const QScalar& s) { return s * std::move(a); }

  bool operator==(const RScalar& o) const { return (*this - o).is_zero(); }
  bool operator!=(const RScalar& o) const { return !(*this == o); }

  // inverse of a single radical term:  (n sqrt(r) / d)^-1 = d sqrt(r) / (n r)
  RScalar inverse() const {
    if (terms_.size() != 1) throw QError("RScalar inverse: not a single term: " + render());
    RScalar r;
    r.terms_.push_back({den_, terms_[0].rad});
    r.den_ = terms_[0].num * terms_[0].rad;
    r.normalize();
    return r;
  }
  friend RScalar operator/(const RScalar& a, const RScalar& b) { return a * b.inverse(); }

  template <class F>
  F eval_q(const F& q) const {
    using std::sqrt;
    F s = 0;
    for (auto& t : terms_) {
      F r = t.rad.eval_q(q);
      if (r < 0) {
        if (r > F(-1e-40)) r = 0;
        else throw QError("negative radicand in numeric evaluation: " + t.rad.render());
      }
      s += t.num.eval_q(q) * sqrt(r);
    }
    return s / den_.eval_q(q);
  }

  // exact substitution t -> 1 (radicands become squarefree integers)
  RScalar at_one() const {
    RScalar r;
    Rational d = den_.at_one();
    if (d == 0) throw QError("at_one: denominator vanishes at q=1");
    for (auto& t : terms_) {
      RScalar piece = sqrt_of(QScalar(t.rad.at_one()));
      for (auto& p : piece.terms_) r.terms_.push_back({p.num * t.num.at_one(), p.rad});
    }
    r.den_ = QScalar(d);
    r.normalize();
    return r;
  }

  std::string render() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : terms_) {
      std::string piece;
      if (t.rad.is_one()) piece = t.num.render();
      else if (t.num.is_one()) piece = "sqrt(" + t.rad.render() + ")";
      else piece = "(" + t.num.render() + ")*sqrt(" + t.rad.render() + ")";
      if (!first) s += " + ";
      s += piece;
      first = false;
    }
    if (!den_.is_one()) s = "(" + s + ") / (" + den_.render() + ")";
    return s;
  }

  // memoized product split for a pair of canonical radicands (the hot path
  // of radical multiplication: the set of distinct radicands is tiny)
  static const std::pair<QScalar, QScalar>& product_split(const QScalar& ra, const QScalar& rb) {
    thread_local std::map<std::pair<QScalar, QScalar>, std::pair<QScalar, QScalar>> cache;
    auto key = ra < rb ? std::make_pair(ra, rb) : std::make_pair(rb, ra);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, canonical_sqrt_split(key.first * key.second)).first;
    return it->second;
  }

  // R = outside^2 * rad with rad canonical squarefree
  static std::pair<QScalar, QScalar> canonical_sqrt_split(const QScalar& R) {
    if (R.is_zero()) throw QError("sqrt split of zero");
    int root = R.root_order();
    long m = R.min_exp();
    long mhalf = (m >= 0 ? m / 2 : -((-m + 1) / 2));  // floor(m/2)
    long mpar = m - 2 * mhalf;                        // 0 or 1
    QScalar outside = QScalar::monomial(1, mhalf, root);
    // polynomial part with min_exp 0
    QScalar P = QScalar::monomial(1, -m, root) * R;
    auto [s, f] = P.squarefree_split();
    outside = outside * s;
    // reconcile the rational unit: P = u * s^2 * f
    QScalar rest = P.div_exact(s * s * f);
    if (!rest.is_rational()) throw QError("sqrt split: non-constant unit");
    Rational u = rest.rational_value();
    // rational square extraction: u = v^2 * w, with w a (signed) squarefree integer
    Rational v;
    Integer w;
    rational_square_split(u, v, w);
    outside = outside * QScalar(v);
    QScalar rad = QScalar(Rational(w)) * QScalar::monomial(1, mpar, root) * f;
    if (rad.is_one()) return {outside, QScalar::one(root)};
    return {outside, rad};
  }

private:
  std::vector<RadTerm> terms_;
  QScalar den_;

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const RadTerm& a, const RadTerm& b) { return a.rad < b.rad; });
    std::vector<RadTerm> out;
    for (auto& t : terms_) {
      if (t.num.is_zero()) continue;
      if (!out.empty() && out.back().rad == t.rad) {
        out.back().num += t.num;
        if (out.back().num.is_zero()) out.pop_back();
      } else out.push_back(t);
    }
    terms_ = std::move(out);
    if (terms_.empty()) { den_ = QScalar::one(); return; }
    // denominator reduction
    if (den_.is_one()) return;
    if (den_.is_monomial()) {
      QScalar inv = den_.inv_monomial();
      for (auto& t : terms_) t.num = t.num * inv;
      den_ = QScalar::one();
      return;
    }
    // full cancellation if possible
    bool all = true;
    std::vector<QScalar> divided;
    divided.reserve(terms_.size());
    for (auto& t : terms_) {
      auto d = t.num.try_div(den_);
      if (!d) { all = false; break; }
      divided.push_back(*d);
    }
    if (all) {
      for (size_t i = 0; i < terms_.size(); ++i) terms_[i].num = divided[i];
      den_ = QScalar::one();
      return;
    }
    // common polynomial factor
    QScalar g = den_;
    for (auto& t : terms_) {
      g = QScalar::poly_gcd(g, t.num);
      if (g.is_one()) break;
    }
    if (!g.is_one() && !(g.num_terms() == 1 && g.max_exp() == 0)) {
      den_ = den_.div_exact(g);
      for (auto& t : terms_) t.num = t.num.div_exact(g);
    }
    // make the denominator unit-normalized
    QScalar dn = den_.unit_normalized();
    if (!(den_ == dn)) {
      QScalar u = den_.div_exact(dn);  // a monomial
      QScalar ui = u.inv_monomial();
      for (auto& t : terms_) t.num = t.num * ui;
      den_ = dn;
    }
  }

  static void rational_square_split(const Rational& u, Rational& v, Integer& w) {
    Integer a = numerator(u), b = denominator(u);
    bool neg = a < 0;
    if (neg) a = -a;
    // u = a/b = a*b / b^2
    Integer n = a * b;
    Integer sq, fr;
    int_square_split(n, sq, fr);
    v = Rational(sq) / Rational(b);
    w = neg ? -fr : fr;
  }

  static void int_square_split(Integer n, Integer& sq, Integer& fr) {
    sq = 1;
    fr = 1;
    if (n == 0) { fr = 0; return; }
    for (Integer p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
      unsigned e = 0;
      while (n % p == 0) { n /= p; ++e; }
      for (unsigned k = 0; k < e / 2; ++k) sq *= p;
      if (e % 2) fr *= p;
    }
    if (n > 1) {
      if (mpz_perfect_square_p(n.backend().data())) {
        Integer r = sqrt(n);
        sq *= r;
      } else fr *= n;
    }
  }
};

// [x] for rational x as an exact fraction of Laurent polynomials. For integer
// x this collapses to the Laurent polynomial q_number(x); for genuinely
// fractional x (e.g. [1/2] = 1/(q^(1/2)+q^(-1/2))) the denominator survives.
inline RScalar q_number_frac(const Rational& x, int root = kDefaultRootOrder) {
  if (x == 0) return RScalar::zero();
  QScalar num = QScalar::q_power(x, root) - QScalar::q_power(-x, root);
  QScalar den = QScalar::q_power(1, root) - QScalar::q_power(-1, root);
  return RScalar(num) / RScalar(den);
}

}  // namespace qcp2
