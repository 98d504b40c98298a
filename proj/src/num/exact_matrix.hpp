#pragma once

#include <complex>
#include <span>
#include <vector>

#include "num/exact.hpp"

namespace anomlab::num {

/// Small dense matrix over ExactScalar. Value-semantic; sizes are tiny
/// (representation matrices and field coefficients, n <= 4).
class ExactMat {
 public:
  ExactMat() = default;
  ExactMat(int rows, int cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static ExactMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }

  ExactScalar& at(int i, int j) { return a_[i * c_ + j]; }
  const ExactScalar& at(int i, int j) const { return a_[i * c_ + j]; }

  bool is_zero() const;
  ExactMat adjoint() const;
  ExactScalar trace() const;

  ExactMat& operator+=(const ExactMat& o);
  ExactMat& operator-=(const ExactMat& o);

  std::vector<std::complex<double>> to_complex() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<ExactScalar> a_;
};

ExactMat operator+(const ExactMat& a, const ExactMat& b);
ExactMat operator-(const ExactMat& a, const ExactMat& b);
ExactMat operator-(const ExactMat& a);
ExactMat operator*(const ExactMat& a, const ExactMat& b);
ExactMat operator*(const ExactScalar& s, const ExactMat& a);
bool operator==(const ExactMat& a, const ExactMat& b);

inline ExactMat commutator(const ExactMat& a, const ExactMat& b) { return a * b - b * a; }

}  // namespace anomlab::num
