#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

namespace anomlab::num {

/// Canonicalized rational from machine integers.
mpq_class rat(long num, long den = 1);

/// Parse "a", "a/b", "-a/b". Throws std::invalid_argument on bad input.
mpq_class rat_parse(const std::string& s);

std::string rat_str(const mpq_class& q);

/// Complex number with rational real and imaginary parts.
struct GaussianRational {
  mpq_class re{0}, im{0};

  GaussianRational() = default;
  GaussianRational(long n) : re(n) {}
  GaussianRational(mpq_class r) : re(std::move(r)) {}
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational unit_im() { return {mpq_class(0), mpq_class(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, mpq_class(-im)}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string str() const;
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
bool operator==(const GaussianRational& a, const GaussianRational& b);

/// Finite sum  sum_k q_k pi^k  with Gaussian-rational q_k and integer k
/// (negative powers allowed).  Equality is coefficient-wise; the zero
/// element has no terms.  Products add pi-powers; division is supported
/// by monomials only, which is all the cocycle normalizations need.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long n);
  explicit ExactScalar(GaussianRational q, int pi_power = 0);

  static ExactScalar unit_im() { return ExactScalar(GaussianRational::unit_im()); }
  static ExactScalar pi(int k = 1) { return ExactScalar(GaussianRational(1), k); }

  bool is_zero() const { return c_.empty(); }
  bool is_monomial() const { return c_.size() == 1; }

  /// Coefficient of pi^k (zero if absent).
  GaussianRational coefficient(int k) const;
  const std::map<int, GaussianRational>& terms() const { return c_; }

  ExactScalar conj() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);

  std::complex<double> to_complex() const;
  std::string str() const;

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  /// Division by a monomial q·pi^k; throws std::domain_error otherwise.
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
  friend bool operator==(const ExactScalar& a, const ExactScalar& b);

 private:
  std::map<int, GaussianRational> c_;
  void prune();
};

}  // namespace anomlab::num
