#include "num/exact_matrix.hpp"

namespace anomlab::num {

ExactMat ExactMat::identity(int n) {
  ExactMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ExactScalar(1);
  return m;
}

bool ExactMat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMat ExactMat::adjoint() const {
  ExactMat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

ExactScalar ExactMat::trace() const {
  ExactScalar t;
  for (int i = 0; i < std::min(r_, c_); ++i) t += at(i, i);
  return t;
}

ExactMat& ExactMat::operator+=(const ExactMat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("ExactMat shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ExactMat& ExactMat::operator-=(const ExactMat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("ExactMat shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ExactMat operator+(const ExactMat& a, const ExactMat& b) {
  ExactMat r = a;
  r += b;
  return r;
}

ExactMat operator-(const ExactMat& a, const ExactMat& b) {
  ExactMat r = a;
  r -= b;
  return r;
}

ExactMat operator-(const ExactMat& a) {
  ExactMat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = -a.at(i, j);
  return r;
}

ExactMat operator*(const ExactMat& a, const ExactMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("ExactMat product shape mismatch");
  ExactMat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const ExactScalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  return r;
}

ExactMat operator*(const ExactScalar& s, const ExactMat& a) {
  ExactMat r(a.rows(), a.cols());
  if (s.is_zero()) return r;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = s * a.at(i, j);
  return r;
}

bool operator==(const ExactMat& a, const ExactMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

std::vector<std::complex<double>> ExactMat::to_complex() const {
  std::vector<std::complex<double>> v(a_.size());
  for (size_t i = 0; i < a_.size(); ++i) v[i] = a_[i].to_complex();
  return v;
}

}  // namespace anomlab::num
