#include "fieldalg/field.hpp"

#include <bit>
#include <stdexcept>

namespace anomlab::fieldalg {

namespace {

int popcount(unsigned m) { return std::popcount(m); }

// Koszul sign for dx_A ∧ dx_B with disjoint sorted index sets given as
// bitmasks: (-1)^{#inversions between A and B}.
int shuffle_sign(unsigned a, unsigned b) {
  int inv = 0;
  for (unsigned j = 0; j < 32; ++j) {
    if (!(b & (1u << j))) continue;
    unsigned higher = a >> (j + 1);
    inv += popcount(higher);
  }
  return (inv % 2 == 0) ? 1 : -1;
}

ExactScalar pow_monomial(const ExactScalar& base, int e) {
  ExactScalar r(1);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

}  // namespace

FourierField::FourierField(Domain dom, int rep_size, int form_degree)
    : dom_(std::move(dom)), rep_size_(rep_size), degree_(form_degree) {
  if (rep_size_ <= 0) throw std::invalid_argument("field rep_size must be positive");
  if (degree_ < 0 || degree_ > dom_.dim())
    throw std::invalid_argument("form degree out of range for domain " + dom_.str());
}

void FourierField::check_compatible(const FourierField& o) const {
  if (!(dom_ == o.dom_) || rep_size_ != o.rep_size_ || degree_ != o.degree_)
    throw std::invalid_argument("field domain/shape mismatch");
}

void FourierField::add_term(const TermKey& key, const ExactMat& coeff) {
  if (coeff.rows() != rep_size_ || coeff.cols() != rep_size_)
    throw std::invalid_argument("term coefficient shape mismatch");
  if (popcount(key.mask) != degree_ || key.mask >= (1u << dom_.dim()))
    throw std::invalid_argument("term form mask incompatible with degree/domain");
  for (int j = dom_.torus_dims(); j < 3; ++j)
    if (key.k[j] != 0) throw std::invalid_argument("wavevector outside torus directions");
  if (key.m != 0 && !dom_.has_interval())
    throw std::invalid_argument("polynomial degree on a purely periodic domain");
  if (key.m < 0) throw std::invalid_argument("negative polynomial degree");
  if (coeff.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FourierField FourierField::d() const {
  if (degree_ >= dom_.dim())
    throw std::invalid_argument("exterior derivative of a top-degree form");
  FourierField out(dom_, rep_size_, degree_ + 1);
  const unsigned dt_bit = dom_.has_interval() ? (1u << (dom_.dim() - 1)) : 0;
  for (const auto& [key, coeff] : terms_) {
    for (int j = 0; j < dom_.torus_dims(); ++j) {
      unsigned bit = 1u << j;
      if (key.mask & bit) continue;
      if (key.k[j] == 0) continue;
      int sign = (popcount(key.mask & (bit - 1)) % 2 == 0) ? 1 : -1;
      // d/dθ_j e^{i k·θ} = i k_j e^{i k·θ}
      GaussianRational ikj(num::rat(0), num::rat(sign * key.k[j]));
      TermKey nk = key;
      nk.mask |= bit;
      out.add_term(nk, ExactScalar(ikj) * coeff);
    }
    if (dt_bit && !(key.mask & dt_bit) && key.m >= 1) {
      int sign = (popcount(key.mask & (dt_bit - 1)) % 2 == 0) ? 1 : -1;
      TermKey nk = key;
      nk.mask |= dt_bit;
      nk.m = key.m - 1;
      out.add_term(nk, ExactScalar(GaussianRational(num::rat(sign * key.m))) * coeff);
    }
  }
  return out;
}

FourierField FourierField::trace() const {
  FourierField out(dom_, 1, degree_);
  for (const auto& [key, coeff] : terms_) {
    ExactMat t(1, 1);
    t.at(0, 0) = coeff.trace();
    out.add_term(key, t);
  }
  return out;
}

ExactScalar FourierField::integrate() const {
  if (degree_ != dom_.dim())
    throw std::invalid_argument("integrate requires a top-degree form on " + dom_.str());
  if (rep_size_ != 1)
    throw std::invalid_argument("integrate requires a scalar (traced) integrand");
  const int td = dom_.torus_dims();
  // (2π)^td from the periodic directions
  ExactScalar torus_factor(GaussianRational(num::rat(1L << td)), td);
  ExactScalar total;
  for (const auto& [key, coeff] : terms_) {
    if (key.k[0] != 0 || key.k[1] != 0 || key.k[2] != 0) continue;  // no zero mode
    ExactScalar v = coeff.at(0, 0) * torus_factor;
    if (dom_.has_interval()) {
      // ∫_0^L t^m dt = L^{m+1}/(m+1)
      ExactScalar lm = pow_monomial(dom_.interval_length, key.m + 1);
      v = v * (lm / ExactScalar(key.m + 1));
    }
    total += v;
  }
  return total;
}

FourierField FourierField::boundary_restrict(int end) const {
  if (dom_.kind != DomainKind::T2xInterval)
    throw std::invalid_argument("boundary_restrict requires the T2x[0,L] domain");
  if (end != 0 && end != 1) throw std::invalid_argument("end must be 0 or 1");
  if (degree_ > 2) throw std::invalid_argument("restriction exceeds boundary dimension");
  const unsigned dt_bit = 1u << (dom_.dim() - 1);
  FourierField out(Domain::t2(), rep_size_, degree_);
  for (const auto& [key, coeff] : terms_) {
    if (key.mask & dt_bit) continue;  // dt dies on the boundary
    ExactMat c = coeff;
    if (end == 0) {
      if (key.m != 0) continue;
    } else if (key.m > 0) {
      c = pow_monomial(dom_.interval_length, key.m) * c;
    }
    TermKey nk = key;
    nk.m = 0;
    out.add_term(nk, c);
  }
  return out;
}

ExactMat FourierField::interval_endpoint_value(int end) const {
  if (dom_.kind != DomainKind::Interval)
    throw std::invalid_argument("endpoint value requires an interval-domain field");
  if (degree_ != 0) throw std::invalid_argument("endpoint value requires a 0-form");
  if (end != 0 && end != 1) throw std::invalid_argument("end must be 0 or 1");
  ExactMat v(rep_size_, rep_size_);
  for (const auto& [key, coeff] : terms_) {
    if (end == 0) {
      if (key.m == 0) v += coeff;
    } else {
      v += pow_monomial(dom_.interval_length, key.m) * coeff;
    }
  }
  return v;
}

bool FourierField::satisfies_reality() const {
  for (const auto& [key, coeff] : terms_) {
    TermKey mirror = key;
    for (int j = 0; j < 3; ++j) mirror.k[j] = -key.k[j];
    auto it = terms_.find(mirror);
    ExactMat other = (it == terms_.end()) ? ExactMat(rep_size_, rep_size_) : it->second;
    if (!(other == -coeff.adjoint())) return false;
  }
  return true;
}

FourierField& FourierField::operator+=(const FourierField& o) {
  check_compatible(o);
  for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
  return *this;
}

FourierField& FourierField::operator-=(const FourierField& o) {
  check_compatible(o);
  for (const auto& [key, coeff] : o.terms_) add_term(key, -coeff);
  return *this;
}

FourierField operator+(const FourierField& a, const FourierField& b) {
  FourierField r = a;
  r += b;
  return r;
}

FourierField operator-(const FourierField& a, const FourierField& b) {
  FourierField r = a;
  r -= b;
  return r;
}

FourierField operator-(const FourierField& a) {
  FourierField r(a.dom_, a.rep_size_, a.degree_);
  for (const auto& [key, coeff] : a.terms_) r.terms_.emplace(key, -coeff);
  return r;
}

FourierField operator*(const ExactScalar& s, const FourierField& a) {
  FourierField r(a.dom_, a.rep_size_, a.degree_);
  if (s.is_zero()) return r;
  for (const auto& [key, coeff] : a.terms_) r.add_term(key, s * coeff);
  return r;
}

bool operator==(const FourierField& a, const FourierField& b) {
  return a.dom_ == b.dom_ && a.rep_size_ == b.rep_size_ && a.degree_ == b.degree_ &&
         a.terms_ == b.terms_;
}

FourierField wedge(const FourierField& a, const FourierField& b) {
  if (!(a.dom_ == b.dom_) || a.rep_size_ != b.rep_size_)
    throw std::invalid_argument("wedge of incompatible fields");
  if (a.degree_ + b.degree_ > a.dom_.dim())
    throw std::invalid_argument("wedge degree overflow on " + a.dom_.str());
  FourierField out(a.dom_, a.rep_size_, a.degree_ + b.degree_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      if (ka.mask & kb.mask) continue;
      TermKey nk;
      for (int j = 0; j < 3; ++j) nk.k[j] = ka.k[j] + kb.k[j];
      nk.m = ka.m + kb.m;
      nk.mask = ka.mask | kb.mask;
      int sign = shuffle_sign(ka.mask, kb.mask);
      ExactMat prod = ca * cb;
      out.add_term(nk, sign > 0 ? prod : -prod);
    }
  return out;
}

FourierField wedge_bracket(const FourierField& a, const FourierField& b) {
  return wedge(a, b) - wedge(b, a);
}

FourierField promote(const FourierField& zero_form, unsigned mask) {
  if (zero_form.form_degree() != 0)
    throw std::invalid_argument("promote expects a 0-form");
  FourierField out(zero_form.domain(), zero_form.rep_size(), popcount(mask));
  for (const auto& [key, coeff] : zero_form.terms()) {
    TermKey nk = key;
    nk.mask = mask;
    out.add_term(nk, coeff);
  }
  return out;
}

std::map<unsigned, std::vector<std::complex<double>>> FourierField::evaluate(
    std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dom_.dim())
    throw std::invalid_argument("evaluation point dimension mismatch");
  std::map<unsigned, std::vector<std::complex<double>>> out;
  const int td = dom_.torus_dims();
  for (const auto& [key, coeff] : terms_) {
    double phase = 0;
    for (int j = 0; j < td; ++j) phase += key.k[j] * x[j];
    std::complex<double> w = std::polar(1.0, phase);
    if (dom_.has_interval()) w *= std::pow(x[td], key.m);
    auto [it, fresh] = out.try_emplace(
        key.mask, std::vector<std::complex<double>>(rep_size_ * rep_size_));
    auto cm = coeff.to_complex();
    for (size_t i = 0; i < cm.size(); ++i) it->second[i] += w * cm[i];
  }
  return out;
}

std::complex<double> FourierField::evaluate_scalar_top(std::span<const double> x) const {
  if (degree_ != dom_.dim() || rep_size_ != 1)
    throw std::invalid_argument("evaluate_scalar_top requires a scalar top-degree form");
  auto vals = evaluate(x);
  unsigned full = (1u << dom_.dim()) - 1;
  auto it = vals.find(full);
  return it == vals.end() ? std::complex<double>{0, 0} : it->second[0];
}

}  // namespace anomlab::fieldalg
