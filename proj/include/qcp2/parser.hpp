#pragma once

// Expression parser for the CLI `normal-form` command.
// Grammar: atoms u[i,j], z[i], zs[i], p[i,j], rational literals, q^(a/b);
// operators + - * ^ with the usual precedence; parentheses.
// Stars are eliminated at parse time via the quantum minors, so the result
// is always a star-free normal form.

#include <cctype>
#include <string>

#include "qcp2/normalform.hpp"

namespace qcp2 {

class ExprParser {
public:
  explicit ExprParser(std::string text) : s_(std::move(text)) {}

  NormalForm parse() {
    NormalForm r = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

private:
  std::string s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw QError("parse error at position " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  long parse_int() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_])) fail("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }
  int parse_index() {
    long v = parse_int();
    if (v < 1 || v > 3) fail("index out of range 1..3");
    return (int)v;
  }

  NormalForm parse_sum() {
    NormalForm r = parse_product();
    for (;;) {
      if (eat('+')) r += parse_product();
      else if (eat('-')) r -= parse_product();
      else return r;
    }
  }
  NormalForm parse_product() {
    NormalForm r = parse_power();
    for (;;) {
      if (eat('*')) r = r * parse_power();
      else return r;
    }
  }
  NormalForm parse_power() {
    NormalForm base = parse_atom();
    if (eat('^')) {
      bool paren = eat('(');
      long e = parse_int();
      if (paren) {
        if (eat('/')) {  // only q admits fractional exponents; handled in atom
          fail("fractional exponent outside q^(a/b)");
        }
        expect(')');
      }
      if (e < 0) fail("negative exponents only supported on q");
      return base.pow((unsigned)e);
    }
    return base;
  }
  NormalForm parse_atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NormalForm r = parse_sum();
      expect(')');
      return r;
    }
    if (c == '-') { ++pos_; return -parse_atom(); }
    if (std::isdigit((unsigned char)c)) {
      long num = parse_int();
      if (eat('/')) {
        long den = parse_int();
        if (den == 0) fail("zero denominator");
        return NormalForm(QScalar(Rational(num, den)));
      }
      return NormalForm(QScalar(Rational(num)));
    }
    if (c == 'q') {
      ++pos_;
      Rational e = 1;
      if (eat('^')) {
        if (eat('(')) {
          long a = parse_int();
          long b = 1;
          if (eat('/')) b = parse_int();
          expect(')');
          if (b == 0) fail("zero denominator in exponent");
          e = Rational(a, b);
        } else {
          e = Rational(parse_int());
        }
      }
      return NormalForm(QScalar::q_power(e));
    }
    if (c == 'u') {
      ++pos_;
      expect('[');
      int i = parse_index();
      expect(',');
      int j = parse_index();
      expect(']');
      return NormalForm::generator(i, j);
    }
    if (c == 'z') {
      ++pos_;
      bool starred = pos_ < s_.size() && s_[pos_] == 's';
      if (starred) ++pos_;
      expect('[');
      int i = parse_index();
      expect(']');
      return starred ? NormalForm::z_star(i) : NormalForm::z(i);
    }
    if (c == 'p') {
      ++pos_;
      expect('[');
      int i = parse_index();
      expect(',');
      int j = parse_index();
      expect(']');
      return NormalForm::p(i, j);
    }
    fail("unexpected character");
  }
};

inline NormalForm parse_expr(const std::string& text) { return ExprParser(text).parse(); }

}  // namespace qcp2
