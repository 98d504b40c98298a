#pragma once

#include <map>
#include <span>
#include <vector>

#include "liecore/lie_algebra.hpp"

namespace anomlab::liecore {

/// Fully antisymmetric constant p-cochain on a Lie algebra basis, with
/// ExactScalar values. Stored on strictly increasing index tuples.
class ConstantCochain {
 public:
  ConstantCochain(int degree, int dim);

  int degree() const { return degree_; }
  int dim() const { return dim_; }

  /// Set the value on an index tuple (any order); antisymmetrized into
  /// canonical form. A repeated index with a nonzero value is rejected.
  void set(std::vector<int> idx, ExactScalar value);

  /// Value on an arbitrary tuple, with the permutation sign applied.
  ExactScalar operator()(std::span<const int> idx) const;

  bool is_zero() const;
  const std::map<std::vector<int>, ExactScalar>& values() const { return v_; }

 private:
  int degree_;
  int dim_;
  std::map<std::vector<int>, ExactScalar> v_;
};

/// Chevalley-Eilenberg coboundary for trivial coefficients,
///   (δc)(X_0..X_p) = Σ_{i<j} (-1)^{i+j} c([X_i,X_j], X_0..X̂_i..X̂_j..X_p),
/// which at degree 2 is the cyclic form c(X,[Y,Z]) + c(Y,[Z,X]) + c(Z,[X,Y]).
ConstantCochain ce_coboundary(const LieAlgebraSpec& g, const ConstantCochain& c);

}  // namespace anomlab::liecore
