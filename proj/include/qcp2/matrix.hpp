#pragma once

// Minimal dense matrix over an arbitrary ring element type. Sizes here are
// tiny (irrep dimensions, projection sizes), so nothing clever is needed.

#include <cstddef>
#include <vector>

#include "qcp2/bigfloat.hpp"

namespace qcp2 {

template <class T>
class Mat {
public:
  Mat() = default;
  Mat(size_t r, size_t c) : r_(r), c_(c), v_(r * c) {}
  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  T& operator()(size_t i, size_t j) { return v_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return v_[i * c_ + j]; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat m(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        const T& aik = a(i, k);
        for (size_t j = 0; j < b.c_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }
  friend Mat operator+(Mat a, const Mat& b) {
    for (size_t i = 0; i < a.v_.size(); ++i) a.v_[i] += b.v_[i];
    return a;
  }
  friend Mat operator-(Mat a, const Mat& b) {
    for (size_t i = 0; i < a.v_.size(); ++i) a.v_[i] -= b.v_[i];
    return a;
  }
  friend Mat operator*(const T& s, Mat a) {
    for (auto& x : a.v_) x = s * x;
    return a;
  }
  Mat transpose() const {
    Mat m(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

private:
  size_t r_ = 0, c_ = 0;
  std::vector<T> v_;
};

inline BigFloat max_abs(const Mat<BigFloat>& m) {
  BigFloat r = 0;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      BigFloat a = abs(m(i, j));
      if (a > r) r = a;
    }
  return r;
}

inline Mat<BigFloat> commutator(const Mat<BigFloat>& a, const Mat<BigFloat>& b) {
  return a * b - b * a;
}

}  // namespace qcp2
