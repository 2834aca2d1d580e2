#pragma once

// The 5-sphere coordinate algebra in its own normal form: ordered monomials
// z1^a z2^b z3^c (z3*)^d (z2*)^e (z1*)^f with c and d never both positive
// (the spherical relation eliminates z3 z3*). This engine exists because the
// faithful lattice representation used for Haar-state evaluation is defined
// on the z generators, while the exterior calculus produces elements of the
// same subalgebra as PBW polynomials in the u generators; `ZConvert` bridges
// the two exactly.

#include <array>
#include <optional>

#include "qcp2/actions.hpp"
#include "qcp2/normalform.hpp"

namespace qcp2 {

// letters: 0..2 = z1,z2,z3; 3..5 = z3*, z2*, z1*
using ZWord = std::string;
using ZForm = std::map<ZWord, RScalar>;

inline int z_index(char l) { return l <= 2 ? l + 1 : 6 - l; }
inline bool z_is_star(char l) { return l >= 3; }
inline char z_letter(int i, bool star) { return star ? char(6 - i) : char(i - 1); }

namespace zdetail {

inline void add_term(ZForm& m, const ZWord& w, const RScalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(w);
  if (it == m.end()) m.emplace(w, c);
  else {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

inline void normalize(const ZWord& w0, const RScalar& c0, ZForm& out, long budget = 400000) {
  const QScalar q = QScalar::q_power(1);
  const QScalar qi = QScalar::q_power(-1);
  const QScalar om = QScalar::one() - q * q;  // 1 - q^2
  ZForm pending;
  add_term(pending, w0, c0);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    ZWord w = std::move(node.key());
    RScalar c = std::move(node.mapped());
    if (c.is_zero()) continue;
    size_t p = 0;
    int kind = 0;  // 0 sorted, 1 descent, 2 z3 z3* pair
    for (; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) { kind = 1; break; }
      if (w[p] == 2 && w[p + 1] == 3) { kind = 2; break; }
    }
    if (kind == 0) { add_term(out, w, c); continue; }
    if (--budget < 0) throw QError("z-engine rewrite budget exceeded");
    if (kind == 2) {  // z3 z3* = 1 - z1 z1* - z2 z2*
      ZWord base = w.substr(0, p) + w.substr(p + 2);
      add_term(pending, base, c);
      ZWord w1 = w.substr(0, p); w1 += char(0); w1 += char(5); w1 += w.substr(p + 2);
      ZWord w2 = w.substr(0, p); w2 += char(1); w2 += char(4); w2 += w.substr(p + 2);
      add_term(pending, w1, -c);
      add_term(pending, w2, -c);
      continue;
    }
    char a = w[p], b = w[p + 1];
    ZWord sw = w;
    std::swap(sw[p], sw[p + 1]);
    bool sa = z_is_star(a), sb = z_is_star(b);
    int ia = z_index(a), ib = z_index(b);
    if (sa == sb) {  // both plain or both starred: q-exchange
      add_term(pending, sw, c * RScalar(qi));
    } else {
      // a starred, b plain (plain letters sort first)
      if (ia != ib) {
        add_term(pending, sw, c * RScalar(q));
      } else if (ia == 1) {
        add_term(pending, sw, c);
      } else {
        // z_i* z_i = z_i z_i* - (1-q^2) * (z1 z1* + ... + z_{i-1} z_{i-1}*)
        add_term(pending, sw, c);
        for (int l = 1; l < ia; ++l) {
          ZWord ww = w.substr(0, p);
          ww += z_letter(l, false);
          ww += z_letter(l, true);
          ww += w.substr(p + 2);
          add_term(pending, ww, RScalar(-om) * c);
        }
      }
    }
  }
}

}  // namespace zdetail

inline ZForm z_mul(const ZForm& a, const ZForm& b) {
  ZForm r;
  for (auto& [wa, ca] : a)
    for (auto& [wb, cb] : b) zdetail::normalize(wa + wb, ca * cb, r);
  return r;
}
inline ZForm z_scalar(const RScalar& c) {
  ZForm r;
  if (!c.is_zero()) r[ZWord{}] = c;
  return r;
}
inline ZForm z_monomial_form(const ZWord& w, const RScalar& c = RScalar::one()) {
  ZForm r;
  zdetail::normalize(w, c, r);
  return r;
}
inline ZForm& z_add(ZForm& a, const ZForm& b) {
  for (auto& [w, c] : b) zdetail::add_term(a, w, c);
  return a;
}

// u-algebra image of a z-word
inline NormalForm z_word_to_u(const ZWord& w) {
  NormalForm f = NormalForm::one();
  for (char l : w)
    f = f * (z_is_star(l) ? NormalForm::z_star(z_index(l)) : NormalForm::z(z_index(l)));
  return f;
}
inline NormalForm z_form_to_u(const ZForm& z) {
  NormalForm f;
  for (auto& [w, c] : z) f += c * z_word_to_u(w);
  return f;
}

// ---------------------------------------------------------------------------
// Conversion of a PBW u-polynomial (promised to lie in the sphere subalgebra)
// into the z normal form: candidates are enumerated by the row/column
// multigrading, echelonized on their u-images and the target is reduced.

class ZConvert {
public:
  // returns the z-form of `target`, or nullopt if it is not reached within
  // the given z-degree bound
  static std::optional<ZForm> convert(const NormalForm& target, int zdeg_bound) {
    if (target.is_zero()) return ZForm{};
    // split into multigraded components
    std::map<std::array<int, 4>, NormalForm> comps;
    for (auto& [w, c] : target.terms()) {
      NormalForm piece;
      piece += c * NormalForm::monomial(w, RScalar::one());
      auto g = grading(w);
      auto it = comps.find(g);
      if (it == comps.end()) comps.emplace(g, piece);
      else it->second += piece;
    }
    ZForm out;
    for (auto& [g, piece] : comps) {
      auto zp = convert_graded(piece, g, zdeg_bound);
      if (!zp) return std::nullopt;
      z_add(out, *zp);
    }
    // self check
    if (!(z_form_to_u(out) == target)) throw QError("z-conversion reconstruction failed");
    return out;
  }

  static std::array<int, 4> grading(const Word& w) {
    int r[3] = {0, 0, 0}, c[3] = {0, 0, 0};
    for (char l : w) { r[l / 3]++; c[l % 3]++; }
    return {r[0] - r[2], r[1] - r[2], c[0] - c[2], c[1] - c[2]};
  }

private:
  struct Cand {
    ZWord zw;
    NormalForm image;
  };

  static std::optional<ZForm> convert_graded(const NormalForm& target,
                                             const std::array<int, 4>& g, int zdeg_bound) {
    // enumerate z-monomials matching the grading
    std::vector<Cand> cands;
    for (int S = 0; S <= zdeg_bound; ++S)
      for (int Z = 0; Z + S <= zdeg_bound; ++Z) {
        if (S - Z != g[0] || S - Z != g[1]) continue;
        for (int a = 0; a <= Z; ++a)
          for (int b = 0; a + b <= Z; ++b) {
            int c = Z - a - b;
            for (int d = 0; d <= S; ++d)
              for (int e = 0; d + e <= S; ++e) {
                int f = S - d - e;
                if (c > 0 && d > 0) continue;
                if ((a + d + e) - (c + e + f) != g[2]) continue;
                if ((b + d + f) - (c + e + f) != g[3]) continue;
                ZWord w;
                w.append(a, char(0));
                w.append(b, char(1));
                w.append(c, char(2));
                w.append(d, char(3));
                w.append(e, char(4));
                w.append(f, char(5));
                cands.push_back({w, z_word_to_u(w)});
              }
          }
      }
    // echelonize on the u-image leading monomials (largest key of the map)
    struct Row { ZForm zcomb; NormalForm image; };
    std::map<Word, Row, std::greater<Word>> rows;
    for (auto& cand : cands) {
      Row r{z_monomial_form(cand.zw), cand.image};
      reduce_row(r, rows);
      if (r.image.is_zero()) continue;  // dependent candidate
      normalize_row(r);
      Word lead = r.image.terms().rbegin()->first;
      rows.emplace(lead, std::move(r));
    }
    // reduce the target
    Row t{ZForm{}, target};
    // target enters with a minus sign convention: target - sum  ->  0
    reduce_row(t, rows);
    if (!t.image.is_zero()) return std::nullopt;
    ZForm result;
    for (auto& [w, c] : t.zcomb) zdetail::add_term(result, w, -c);
    return result;
  }

  struct RowRef;
  template <class Rows>
  static void reduce_row(auto& r, Rows& rows) {
    while (!r.image.is_zero()) {
      Word lead = r.image.terms().rbegin()->first;
      auto it = rows.find(lead);
      if (it == rows.end()) return;
      RScalar c = r.image.terms().rbegin()->second;
      // r -= c * row
      r.image -= c * it->second.image;
      for (auto& [w, rc] : it->second.zcomb) zdetail::add_term(r.zcomb, w, -(c * rc));
    }
  }
  template <class RowT>
  static void normalize_row(RowT& r) {
    RScalar piv = r.image.terms().rbegin()->second;
    RScalar inv = piv.inverse();
    r.image = inv * r.image;
    ZForm nz;
    for (auto& [w, c] : r.zcomb) zdetail::add_term(nz, w, inv * c);
    r.zcomb = std::move(nz);
  }
};

}  // namespace qcp2
