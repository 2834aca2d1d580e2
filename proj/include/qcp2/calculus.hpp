#pragma once

// The differential calculus over the projective plane: forms are V^{i,j}-
// indexed tuples of coordinate-algebra elements that are invariant under the
// twisted u(2) action, the Dolbeault operators are left wedge multiplication
// by the invariant derivation vectors X and Y, and the integral picks the
// scalar coefficient of the top component.

#include "qcp2/actions.hpp"
#include "qcp2/exterior.hpp"
#include "qcp2/normalform.hpp"

namespace qcp2 {

struct Form {
  Bidegree deg;
  std::vector<NormalForm> c;
  Form() = default;
  explicit Form(Bidegree b) : deg(b), c(vdim(b)) {}
  static Form scalar(const NormalForm& a) {
    Form f({0, 0});
    f.c[0] = a;
    return f;
  }
  bool is_zero() const {
    for (auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  Form& operator+=(const Form& o) {
    if (c.empty()) { *this = o; return *this; }
    if (o.c.empty()) return *this;
    if (!(deg == o.deg)) throw QError("bidegree mismatch in Form sum");
    for (size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
    return *this;
  }
  friend Form operator-(const Form& f) {
    Form r = f;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend Form operator*(const RScalar& s, Form f) {
    for (auto& x : f.c) x = s * x;
    return f;
  }
  bool operator==(const Form& o) const {
    if (c.empty()) return o.is_zero();
    if (o.c.empty()) return is_zero();
    if (!(deg == o.deg)) return is_zero() && o.is_zero();
    for (size_t k = 0; k < c.size(); ++k)
      if (!(c[k] == o.c[k])) return false;
    return true;
  }
  std::string render() const {
    std::string s = deg.str() + "{";
    for (size_t k = 0; k < c.size(); ++k) s += (k ? " ; " : "") + c[k].render();
    return s + "}";
  }
};

// total (inhomogeneous) forms, componentwise by bidegree
using FormSum = std::map<Bidegree, Form>;

inline FormSum form_sum(const Form& f) {
  FormSum s;
  if (!f.c.empty() && !f.is_zero()) s[f.deg] = f;
  return s;
}
inline void add_into(FormSum& s, const Form& f) {
  if (f.c.empty() || f.is_zero()) return;
  auto it = s.find(f.deg);
  if (it == s.end()) s[f.deg] = f;
  else {
    it->second += f;
    if (it->second.is_zero()) s.erase(it);
  }
}
inline FormSum operator+(FormSum a, const FormSum& b) {
  for (auto& [d, f] : b) add_into(a, f);
  return a;
}
inline FormSum operator-(const FormSum& a, const FormSum& b) {
  FormSum r = a;
  for (auto& [d, f] : b) add_into(r, -f);
  return r;
}
inline bool is_zero(const FormSum& s) {
  for (auto& [d, f] : s)
    if (!f.is_zero()) return false;
  return true;
}

// wedge of algebra-valued forms: (a (x) v) ^ (b (x) w) = ab (x) (v ^ w)
inline Form wedge_forms(const WedgeCoeffs& W, const Form& a, const Form& b) {
  if (a.c.empty() || b.c.empty()) return Form();
  Bidegree T = a.deg + b.deg;
  if (!T.in_diamond()) return Form();
  Form r(T);
  for (int i = 0; i < vdim(a.deg); ++i) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; j < vdim(b.deg); ++j) {
      if (b.c[j].is_zero()) continue;
      VForm s = wedge(W, VForm::basis(a.deg, i), VForm::basis(b.deg, j));
      NormalForm ab = a.c[i] * b.c[j];
      for (int t = 0; t < vdim(T); ++t)
        if (!s.c[t].is_zero()) r.c[t] += s.c[t] * ab;
    }
  }
  return r;
}
inline FormSum wedge_sums(const WedgeCoeffs& W, const FormSum& a, const FormSum& b) {
  FormSum r;
  for (auto& [da, fa] : a)
    for (auto& [db, fb] : b) add_into(r, wedge_forms(W, fa, fb));
  return r;
}

// --- the derivation vectors ---------------------------------------------------

inline const UqWord& x_component(int k) {
  static const std::array<UqWord, 2> X = [] {
    UqWord k2e2 = RScalar(QScalar::q_power(-1)) * UqWord::word({UqGen::K2, UqGen::E2});
    UqWord e12 = UqWord::q_comm(UqWord::gen(UqGen::E1), UqWord::gen(UqGen::E2));
    UqWord x2 = -(UqWord::word({UqGen::K1, UqGen::K2}) * e12);
    return std::array<UqWord, 2>{k2e2, x2};
  }();
  return X.at(k);
}
inline const UqWord& y_component(int k) {
  static const std::array<UqWord, 2> Y = [] {
    UqWord f21 = UqWord::q_comm(UqWord::gen(UqGen::F2), UqWord::gen(UqGen::F1));
    UqWord y1 = UqWord::word({UqGen::K1, UqGen::K2}) * f21;
    UqWord y2 = UqWord::word({UqGen::K2, UqGen::F2});
    return std::array<UqWord, 2>{y1, y2};
  }();
  return Y.at(k);
}

// The holomorphic derivation: left wedge by X. The q^(-1/2) prefactor pins
// the operator on functions to da = -q^{-3/2}(a <| E2, a <| E2 E1); setting
// `normalized` to false drops the prefactor (the raw wedge convention).
inline Form partial(const WedgeCoeffs& W, const Form& w, bool normalized = true) {
  if (w.c.empty()) return Form();
  Bidegree T = w.deg + Bidegree{1, 0};
  if (!T.in_diamond()) return Form();
  Form r(T);
  for (int k = 0; k < 2; ++k)
    for (int v = 0; v < vdim(w.deg); ++v) {
      if (w.c[v].is_zero()) continue;
      NormalForm lx = twisted_left(x_component(k), w.c[v]);
      if (lx.is_zero()) continue;
      VForm s = wedge(W, VForm::basis({1, 0}, k), VForm::basis(w.deg, v));
      for (int t = 0; t < vdim(T); ++t)
        if (!s.c[t].is_zero()) r.c[t] += s.c[t] * lx;
    }
  if (normalized) return RScalar(QScalar::q_power(Rational(-1, 2))) * r;
  return r;
}

// left wedge multiplication by Y (the raw antiholomorphic companion of
// partial); needed on functions, where it is the displayed operator
// (a <| F2 F1, a <| F2) up to sign
inline Form dbar_lwedge(const WedgeCoeffs& W, const Form& w) {
  if (w.c.empty()) return Form();
  Bidegree T = w.deg + Bidegree{0, 1};
  if (!T.in_diamond()) return Form();
  Form r(T);
  for (int k = 0; k < 2; ++k)
    for (int v = 0; v < vdim(w.deg); ++v) {
      if (w.c[v].is_zero()) continue;
      NormalForm ly = twisted_left(y_component(k), w.c[v]);
      if (ly.is_zero()) continue;
      VForm s = wedge(W, VForm::basis({0, 1}, k), VForm::basis(w.deg, v));
      for (int t = 0; t < vdim(T); ++t)
        if (!s.c[t].is_zero()) r.c[t] += s.c[t] * ly;
    }
  return r;
}

inline Form form_star(const Form& f);

// The antiholomorphic derivation. On functions this is left wedge by Y; on
// higher forms it is the reality conjugate of the holomorphic derivation,
//   dbar omega = -(partial(omega*))*,
// which is the extension the reality axiom d a* = -(d a)* dictates. (Left
// wedge by Y itself agrees with this on functions but fails the mixed
// anticommutation relation against partial on higher forms: the two
// compositions differ by q-power twists on the two spin slots of V^{1,1}.)
inline Form dbar(const WedgeCoeffs& W, const Form& w) {
  if (w.c.empty()) return Form();
  if (w.deg.total() == 0) return dbar_lwedge(W, w);
  return -form_star(partial(W, form_star(w)));
}

inline FormSum d_sum(const WedgeCoeffs& W, const FormSum& s) {
  FormSum r;
  for (auto& [deg, f] : s) {
    add_into(r, partial(W, f));
    add_into(r, dbar(W, f));
  }
  return r;
}
inline FormSum d_scalar(const WedgeCoeffs& W, const NormalForm& a) {
  return d_sum(W, form_sum(Form::scalar(a)));
}

// star of an algebra-valued form: (omega*)_{i,j} = (-1)^i (* (x) J) omega_{j,i}
inline Form form_star(const Form& f) {
  if (f.c.empty()) return Form();
  Form r(Bidegree{f.deg.j, f.deg.i});
  std::vector<NormalForm> st(f.c.size());
  for (size_t k = 0; k < f.c.size(); ++k) st[k] = f.c[k].star();
  auto qs = [](const Rational& e) { return RScalar(QScalar::q_power(e)); };
  std::vector<NormalForm> jc;
  if (f.c.size() == 1) jc = {st[0]};
  else if (f.c.size() == 2) {
    jc.resize(2);
    jc[0] = -(qs(Rational(-1, 2)) * st[1]);
    jc[1] = qs(Rational(1, 2)) * st[0];
  } else {  // (1,1): spin-1 on the first three slots, scalar on the last
    jc.resize(4);
    jc[0] = -(qs(-1) * st[2]);
    jc[1] = st[1];
    jc[2] = -(qs(1) * st[0]);
    jc[3] = st[3];
  }
  int sign = (f.deg.j % 2 == 0) ? 1 : -1;
  for (size_t k = 0; k < jc.size(); ++k)
    r.c[k] = sign == 1 ? jc[k] : -jc[k];
  return r;
}

// --- invariance predicate -----------------------------------------------------

// checks that (L_{h(1)} (x) sigma^{i,j}(h(2))) omega = eps(h) omega for the
// u(2) generators K1, L, E1, F1
inline bool form_invariant(const Form& f) {
  if (f.c.empty() || f.is_zero()) return true;
  int n = vdim(f.deg);
  auto sK1 = sigma_matrix(f.deg, U2Gen::K1);
  auto sE1 = sigma_matrix(f.deg, U2Gen::E1);
  auto sF1 = sigma_matrix(f.deg, U2Gen::F1);
  auto sL = sigma_matrix(f.deg, U2Gen::L);
  auto sK1i = sK1;  // diagonal inverse
  for (int i = 0; i < n; ++i) sK1i(i, i) = sK1(i, i).inverse();
  auto sLi = sL;
  for (int i = 0; i < n; ++i) sLi(i, i) = sL(i, i).inverse();

  UqWord K1 = UqWord::gen(UqGen::K1), E1 = UqWord::gen(UqGen::E1), F1 = UqWord::gen(UqGen::F1);
  UqWord L = u2_charge();
  auto lact = [&](const UqWord& h, const NormalForm& a) { return twisted_left(h, a); };

  // grouplike h: out_w = sum_v sigma(h)_{wv} L_h(c_v) must equal c_w
  for (auto& [h, sigma] : {std::pair<UqWord, Mat<RScalar>&>{K1, sK1}, {L, sL}}) {
    for (int w = 0; w < n; ++w) {
      NormalForm out;
      for (int v = 0; v < n; ++v)
        if (!sigma(w, v).is_zero()) out += sigma(w, v) * lact(h, f.c[v]);
      if (!(out == f.c[w])) return false;
    }
  }
  // E1: Delta = E1 (x) K1 + K1^-1 (x) E1: out_w = sum_v [ sigma(K1)_{wv} L_{E1} c_v
  //  + sigma(E1)_{wv} L_{K1^-1} c_v ] must vanish; similarly F1
  UqWord K1i = UqWord::gen(UqGen::K1i);
  for (int w = 0; w < n; ++w) {
    NormalForm outE, outF;
    for (int v = 0; v < n; ++v) {
      if (!sK1(w, v).is_zero()) {
        outE += sK1(w, v) * lact(E1, f.c[v]);
        outF += sK1(w, v) * lact(F1, f.c[v]);
      }
      if (!sE1(w, v).is_zero()) outE += sE1(w, v) * lact(K1i, f.c[v]);
      if (!sF1(w, v).is_zero()) outF += sF1(w, v) * lact(K1i, f.c[v]);
    }
    if (!outE.is_zero() || !outF.is_zero()) return false;
  }
  return true;
}

// --- named forms ----------------------------------------------------------------

inline Form d_p_holo(const WedgeCoeffs& W, int i, int j) {
  return partial(W, Form::scalar(NormalForm::p(i, j)));
}
inline Form d_p_anti(const WedgeCoeffs& W, int i, int j) {
  return dbar(W, Form::scalar(NormalForm::p(i, j)));
}

// the closed forms of the generators:  partial p_ij = -q^-1 (u3_i)* (u2_j, u1_j)^t
inline Form expected_d_p_holo(int i, int j) {
  Form f({1, 0});
  QScalar mqi = -QScalar::q_power(-1);
  f.c[0] = mqi * (NormalForm::z_star(i) * NormalForm::generator(2, j));
  f.c[1] = mqi * (NormalForm::z_star(i) * NormalForm::generator(1, j));
  return f;
}
//  dbar p_ij = q^-1 (-q^-1/2 (u1_i)*, q^1/2 (u2_i)*)^t u3_j
inline Form expected_d_p_anti(int i, int j) {
  Form f({0, 1});
  f.c[0] = (-QScalar::q_power(Rational(-3, 2))) *
           (NormalForm::star_of_generator(1, i) * NormalForm::generator(3, j));
  f.c[1] = QScalar::q_power(Rational(-1, 2)) *
           (NormalForm::star_of_generator(2, i) * NormalForm::generator(3, j));
  return f;
}

// --- dp-expansion of one-forms -------------------------------------------------

struct DpExpansion {
  NormalForm a[4][4];  // a_ij, 1-based
  NormalForm b[4][4];
};

// coefficients reconstructing (v1,v2) + (w1,w2) from the generator differentials
inline DpExpansion expand_in_dp(const Form& holo, const Form& anti) {
  if (!(holo.c.empty() || holo.deg == Bidegree{1, 0}) ||
      !(anti.c.empty() || anti.deg == Bidegree{0, 1}))
    throw QError("expand_in_dp expects a ((1,0), (0,1)) pair");
  DpExpansion e;
  NormalForm v1 = holo.c.empty() ? NormalForm() : holo.c[0];
  NormalForm v2 = holo.c.empty() ? NormalForm() : holo.c[1];
  NormalForm w1 = anti.c.empty() ? NormalForm() : anti.c[0];
  NormalForm w2 = anti.c.empty() ? NormalForm() : anti.c[1];
  // The prefactors follow from the two unitarity identities; note they are
  // q^2 times the displayed ones (a systematic misprint there: with q^{1-2j}
  // and q^{5-2j} the reconstruction comes out q^{-2}-scaled).
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      QScalar f1 = -QScalar::q_power(Rational(3 - 2 * j));
      e.a[i][j] = f1 * ((QScalar::q_power(2) * (v1 * NormalForm::generator(2, j).star()) +
                         v2 * NormalForm::generator(1, j).star()) *
                        NormalForm::z(i));
      QScalar f2 = QScalar::q_power(Rational(7 - 2 * j));
      e.b[i][j] =
          f2 * ((-QScalar::q_power(Rational(1, 2))) *
                    (w1 * (NormalForm::z_star(j) * NormalForm::generator(1, i))) +
                QScalar::q_power(Rational(-1, 2)) *
                    (w2 * (NormalForm::z_star(j) * NormalForm::generator(2, i))));
    }
  return e;
}

// --- integral -------------------------------------------------------------------

// the integral of a form whose top component is an invariant constant
inline RScalar integrate_constant_top(const FormSum& s) {
  auto it = s.find(Bidegree{2, 2});
  if (it == s.end()) return RScalar::zero();
  const NormalForm& top = it->second.c[0];
  if (!top.is_scalar())
    throw QError("integral: top component is not a constant multiple of 1: " + top.render());
  return top.scalar_part();
}

inline const Form& vol_form() {
  static const Form v = [] {
    Form f({2, 2});
    f.c[0] = NormalForm::one();
    return f;
  }();
  return v;
}

}  // namespace qcp2
