#pragma once

// Arbitrary-precision floating point (MPFR-backed). Precision is configured
// once per thread; the default of 200 bits is what every numeric tolerance in
// the verification suites is calibrated against.

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>

#include "qcp2/qscalar.hpp"

namespace qcp2 {

using BigFloat = boost::multiprecision::mpfr_float;

inline unsigned bits_to_digits(unsigned bits) {
  return static_cast<unsigned>(bits * 0.3010299956639812) + 4;
}

inline void set_precision_bits(unsigned bits) {
  BigFloat::default_precision(bits_to_digits(bits));
}

inline BigFloat bf(const Rational& r) {
  return BigFloat(numerator(r)) / BigFloat(denominator(r));
}

// q^e for rational exponent e
inline BigFloat q_pow(const BigFloat& q, const Rational& e) {
  return pow(q, bf(e));
}

// numeric value of [x]
inline BigFloat q_number_num(const BigFloat& q, const Rational& x) {
  if (x == 0) return BigFloat(0);
  return (q_pow(q, x) - q_pow(q, -x)) / (q - 1 / q);
}

inline BigFloat eval(const QScalar& s, const BigFloat& q) { return s.eval_q(q); }

// Minimal complex pair over BigFloat; only used by the unitary-equivalence
// spot check where a phase enters.
struct CFloat {
  BigFloat re = 0, im = 0;
  CFloat() = default;
  CFloat(BigFloat r) : re(std::move(r)) {}
  CFloat(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  friend CFloat operator+(const CFloat& a, const CFloat& b) { return {a.re + b.re, a.im + b.im}; }
  friend CFloat operator-(const CFloat& a, const CFloat& b) { return {a.re - b.re, a.im - b.im}; }
  friend CFloat operator*(const CFloat& a, const CFloat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  CFloat conj() const { return {re, -im}; }
  BigFloat abs2() const { return re * re + im * im; }
};

}  // namespace qcp2
