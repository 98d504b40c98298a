#include "num/exact.hpp"

#include <numbers>
#include <sstream>

namespace anomlab::num {

mpq_class rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianRational operator-(const GaussianRational& a) { return {mpq_class(-a.re), mpq_class(-a.im)}; }

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  mpq_class n = b.re * b.re + b.im * b.im;
  if (n == 0) throw std::domain_error("division by zero GaussianRational");
  GaussianRational p = a * b.conj();
  return {p.re / n, p.im / n};
}

bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (im == 0) {
    os << re.get_str();
  } else if (re == 0) {
    os << im.get_str() << "i";
  } else {
    os << re.get_str();
    if (im > 0) os << "+";
    os << im.get_str() << "i";
  }
  return os.str();
}

ExactScalar::ExactScalar(long n) {
  if (n != 0) c_[0] = GaussianRational(n);
}

ExactScalar::ExactScalar(GaussianRational q, int pi_power) {
  if (!q.is_zero()) c_[pi_power] = std::move(q);
}

void ExactScalar::prune() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.is_zero())
      it = c_.erase(it);
    else
      ++it;
  }
}

GaussianRational ExactScalar::coefficient(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? GaussianRational() : it->second;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar r;
  for (const auto& [k, q] : c_) r.c_[k] = q.conj();
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  for (const auto& [k, q] : o.c_) c_[k] += q;
  prune();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  for (const auto& [k, q] : o.c_) c_[k] -= q;
  prune();
  return *this;
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r = a;
  r += b;
  return r;
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r = a;
  r -= b;
  return r;
}

ExactScalar operator-(const ExactScalar& a) {
  ExactScalar r;
  for (const auto& [k, q] : a.c_) r.c_[k] = -q;
  return r;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r;
  for (const auto& [ka, qa] : a.c_)
    for (const auto& [kb, qb] : b.c_) r.c_[ka + kb] += qa * qb;
  r.prune();
  return r;
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero ExactScalar");
  if (!b.is_monomial())
    throw std::domain_error("ExactScalar division only by monomials q*pi^k");
  auto [k, q] = *b.c_.begin();
  ExactScalar r;
  for (const auto& [ka, qa] : a.c_) r.c_[ka - k] = qa / q;
  r.prune();
  return r;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.c_ == b.c_; }

std::complex<double> ExactScalar::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (const auto& [k, q] : c_) {
    double p = std::pow(std::numbers::pi_v<double>, k);
    z += q.to_complex() * p;
  }
  return z;
}

std::string ExactScalar::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, q] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << q.str() << ")";
    if (k == 1)
      os << "*pi";
    else if (k != 0)
      os << "*pi^" << k;
  }
  return os.str();
}

}  // namespace anomlab::num
