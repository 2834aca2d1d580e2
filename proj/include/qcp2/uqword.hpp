#pragma once

// Formal elements of the symmetry Hopf algebra: noncommutative polynomials in
// the generators {K1^±, K2^±, E1, E2, F1, F2} with exact scalar coefficients,
// together with counit, antipode (both directions), star and coproduct.

#include <cstdint>
#include <map>
#include <vector>

#include "qcp2/radical.hpp"

namespace qcp2 {

enum class UqGen : uint8_t { K1, K1i, K2, K2i, E1, E2, F1, F2 };

using UqMono = std::vector<UqGen>;

inline bool is_k(UqGen g) {
  return g == UqGen::K1 || g == UqGen::K1i || g == UqGen::K2 || g == UqGen::K2i;
}
inline bool is_e(UqGen g) { return g == UqGen::E1 || g == UqGen::E2; }
inline bool is_f(UqGen g) { return g == UqGen::F1 || g == UqGen::F2; }

inline UqGen star_gen(UqGen g) {
  switch (g) {
    case UqGen::E1: return UqGen::F1;
    case UqGen::E2: return UqGen::F2;
    case UqGen::F1: return UqGen::E1;
    case UqGen::F2: return UqGen::E2;
    default: return g;  // K generators are self-adjoint
  }
}
inline UqGen inv_k(UqGen g) {
  switch (g) {
    case UqGen::K1: return UqGen::K1i;
    case UqGen::K1i: return UqGen::K1;
    case UqGen::K2: return UqGen::K2i;
    case UqGen::K2i: return UqGen::K2;
    default: throw QError("inv_k on non-K generator");
  }
}

class UqWord {
public:
  UqWord() = default;
  explicit UqWord(const RScalar& c) {
    if (!c.is_zero()) t_[UqMono{}] = c;
  }
  static UqWord one() { return UqWord(RScalar::one()); }
  static UqWord gen(UqGen g) {
    UqWord w;
    w.t_[UqMono{g}] = RScalar::one();
    return w;
  }
  static UqWord word(std::initializer_list<UqGen> gs) {
    UqWord w;
    w.t_[UqMono(gs)] = RScalar::one();
    return w;
  }

  const std::map<UqMono, RScalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const UqWord& o) const {
    UqWord d = *this - o;
    return d.t_.empty();
  }

  UqWord& operator+=(const UqWord& o) {
    for (auto& [m, c] : o.t_) add(m, c);
    return *this;
  }
  friend UqWord operator+(UqWord a, const UqWord& b) { a += b; return a; }
  friend UqWord operator-(UqWord a, const UqWord& b) {
    for (auto& [m, c] : b.t_) a.add(m, -c);
    return a;
  }
  friend UqWord operator*(const UqWord& a, const UqWord& b) {
    UqWord r;
    for (auto& [ma, ca] : a.t_)
      for (auto& [mb, cb] : b.t_) {
        UqMono m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        r.add(m, ca * cb);
      }
    return r;
  }
  friend UqWord operator*(const RScalar& s, UqWord a) {
    for (auto& [m, c] : a.t_) c = s * c;
    a.prune();
    return a;
  }
  friend UqWord operator-(const UqWord& a) { return RScalar(Rational(-1)) * a; }

  // q-commutator [a,b]_q = ab - q^(-1) ba
  static UqWord q_comm(const UqWord& a, const UqWord& b) {
    return a * b - RScalar(QScalar::q_power(-1)) * (b * a);
  }

  RScalar counit() const {
    RScalar s;
    for (auto& [m, c] : t_) {
      bool pure_k = true;
      for (auto g : m)
        if (!is_k(g)) { pure_k = false; break; }
      if (pure_k) s += c;
    }
    return s;
  }

  // S(K)=K^-1, S(E)=-qE, S(F)=-q^-1 F; anti-homomorphism
  UqWord antipode() const { return antipode_impl(1); }
  // S^-1(K)=K^-1, S^-1(E)=-q^-1 E, S^-1(F)=-qF
  UqWord antipode_inv() const { return antipode_impl(-1); }

  // *-structure: K* = K, E* = F, F* = E; antilinear anti-homomorphism
  // (coefficients are real functions of q, so conjugation is the identity)
  UqWord star() const {
    UqWord r;
    for (auto& [m, c] : t_) {
      UqMono rm(m.rbegin(), m.rend());
      for (auto& g : rm) g = star_gen(g);
      r.add(rm, c);
    }
    return r;
  }

  // Sweedler expansion of a monomial: Delta(m) = sum_i left_i (x) right_i,
  // every term with coefficient 1.
  static std::vector<std::pair<UqMono, UqMono>> coproduct_mono(const UqMono& m) {
    std::vector<std::pair<UqMono, UqMono>> acc{{UqMono{}, UqMono{}}};
    for (auto g : m) {
      std::vector<std::pair<UqMono, UqMono>> next;
      next.reserve(acc.size() * 2);
      for (auto& [l, r] : acc) {
        if (is_k(g)) {
          auto l2 = l; l2.push_back(g);
          auto r2 = r; r2.push_back(g);
          next.emplace_back(std::move(l2), std::move(r2));
        } else {
          UqGen k = (g == UqGen::E1 || g == UqGen::F1) ? UqGen::K1 : UqGen::K2;
          auto l2 = l; l2.push_back(g);
          auto r2 = r; r2.push_back(k);
          next.emplace_back(std::move(l2), std::move(r2));
          auto l3 = l; l3.push_back(inv_k(k));
          auto r3 = r; r3.push_back(g);
          next.emplace_back(std::move(l3), std::move(r3));
        }
      }
      acc = std::move(next);
    }
    return acc;
  }

private:
  std::map<UqMono, RScalar> t_;

  void add(const UqMono& m, const RScalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) t_[m] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  void prune() {
    for (auto it = t_.begin(); it != t_.end();)
      it = it->second.is_zero() ? t_.erase(it) : std::next(it);
  }
  UqWord antipode_impl(int dir) const {
    UqWord r;
    QScalar q = QScalar::q_power(1), qi = QScalar::q_power(-1);
    for (auto& [m, c] : t_) {
      UqMono rm(m.rbegin(), m.rend());
      QScalar f = QScalar::one();
      for (auto& g : rm) {
        if (is_k(g)) g = inv_k(g);
        else if (is_e(g)) f = f * (dir > 0 ? -q : -qi);
        else f = f * (dir > 0 ? -qi : -q);
      }
      r.add(rm, f * c);
    }
    return r;
  }
};

// L = K1 K2^2 generates the charge circle inside the u(2) parabolic
inline UqWord u2_charge() { return UqWord::word({UqGen::K1, UqGen::K2, UqGen::K2}); }

}  // namespace qcp2
