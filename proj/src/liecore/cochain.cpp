#include "liecore/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace anomlab::liecore {

namespace {

// Sorts idx in place, returns the permutation sign, or 0 on a repeat.
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

}  // namespace

ConstantCochain::ConstantCochain(int degree, int dim) : degree_(degree), dim_(dim) {
  if (degree < 0 || dim <= 0) throw std::invalid_argument("bad cochain shape");
}

void ConstantCochain::set(std::vector<int> idx, ExactScalar value) {
  if (static_cast<int>(idx.size()) != degree_)
    throw std::invalid_argument("cochain index arity mismatch");
  for (int i : idx)
    if (i < 0 || i >= dim_) throw std::invalid_argument("cochain index out of range");
  int sign = sort_sign(idx);
  if (sign == 0) {
    if (!value.is_zero())
      throw std::invalid_argument("nonzero value on repeated indices in antisymmetric cochain");
    return;
  }
  if (sign < 0) value = -value;
  if (value.is_zero())
    v_.erase(idx);
  else
    v_[std::move(idx)] = std::move(value);
}

ExactScalar ConstantCochain::operator()(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw std::invalid_argument("cochain index arity mismatch");
  std::vector<int> s(idx.begin(), idx.end());
  int sign = sort_sign(s);
  if (sign == 0) return {};
  auto it = v_.find(s);
  if (it == v_.end()) return {};
  return sign > 0 ? it->second : -it->second;
}

bool ConstantCochain::is_zero() const {
  for (const auto& [k, val] : v_)
    if (!val.is_zero()) return false;
  return true;
}

ConstantCochain ce_coboundary(const LieAlgebraSpec& g, const ConstantCochain& c) {
  if (c.dim() != g.dim()) throw std::invalid_argument("cochain dimension mismatch with algebra");
  const int p = c.degree();
  ConstantCochain out(p + 1, c.dim());
  if (p + 1 > c.dim()) return out;  // no increasing tuples of that length

  std::vector<int> tuple(p + 1);
  // iterate over strictly increasing tuples
  for (int i = 0; i <= p; ++i) tuple[i] = i;
  auto advance = [&]() -> bool {
    int pos = p;
    while (pos >= 0 && tuple[pos] == c.dim() - 1 - (p - pos)) --pos;
    if (pos < 0) return false;
    ++tuple[pos];
    for (int i = pos + 1; i <= p; ++i) tuple[i] = tuple[i - 1] + 1;
    return true;
  };

  do {
    ExactScalar val;
    for (int i = 0; i <= p; ++i)
      for (int j = i + 1; j <= p; ++j) {
        std::vector<int> rest;
        rest.reserve(p);
        rest.push_back(-1);  // slot for the bracket index
        for (int t = 0; t <= p; ++t)
          if (t != i && t != j) rest.push_back(tuple[t]);
        int sign = ((i + j) % 2 == 0) ? 1 : -1;
        for (int cc = 0; cc < g.dim(); ++cc) {
          const GaussianRational& f = g.structure_constant(cc, tuple[i], tuple[j]);
          if (f.is_zero()) continue;
          rest[0] = cc;
          ExactScalar term = c(rest);
          if (term.is_zero()) continue;
          term = term * ExactScalar(f);
          val += (sign > 0) ? term : -term;
        }
      }
    if (!val.is_zero()) out.set(tuple, std::move(val));
  } while (advance());
  return out;
}

}  // namespace anomlab::liecore
