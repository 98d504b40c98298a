#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "num/exact.hpp"
#include "num/exact_matrix.hpp"

namespace anomlab::liecore {

using num::ExactMat;
using num::ExactScalar;
using num::GaussianRational;

/// Finite-dimensional Lie algebra given by exact representation matrices.
///
/// Construction derives the structure constants f^c_{ab} from the matrix
/// commutators and then checks closure, the Jacobi identity and the
/// symmetry/invariance of the trace form tr(T_a T_b). Instances are
/// immutable after construction.
class LieAlgebraSpec {
 public:
  static LieAlgebraSpec from_matrices(std::string name, std::vector<ExactMat> basis);

  /// Built-in algebras: u1, su2, su2_spin1, su3, u2, u3, u4.
  static const LieAlgebraSpec& builtin(const std::string& name);
  static std::vector<std::string> builtin_names();

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int rep_size() const { return rep_size_; }
  const ExactMat& generator(int a) const { return basis_[a]; }

  /// f^c_{ab}, the coefficient of T_c in [T_a, T_b].
  const GaussianRational& structure_constant(int c, int a, int b) const { return f_[a][b][c]; }

  const ExactScalar& trace_form(int a, int b) const { return trace_form_[a][b]; }

  /// Coefficients of [X, Y] for X, Y given in the basis.
  std::vector<ExactScalar> bracket_coefficients(std::span<const ExactScalar> x,
                                                std::span<const ExactScalar> y) const;

  /// sum_a coeffs[a] T_a as a representation matrix.
  ExactMat realize(std::span<const ExactScalar> coeffs) const;

  /// tr(X Y) from coefficient vectors via the trace form.
  ExactScalar trace_pair(std::span<const ExactScalar> x, std::span<const ExactScalar> y) const;

  bool same_algebra(const LieAlgebraSpec& o) const {
    return name_ == o.name_ && dim() == o.dim() && rep_size_ == o.rep_size_;
  }

 private:
  LieAlgebraSpec() = default;
  void derive_structure_constants();
  void validate() const;

  std::string name_;
  int rep_size_ = 0;
  std::vector<ExactMat> basis_;
  // f_[a][b] = coefficient vector of [T_a, T_b] over the basis
  std::vector<std::vector<std::vector<GaussianRational>>> f_;
  std::vector<std::vector<ExactScalar>> trace_form_;
};

/// Algebra element as an exact coefficient vector over a spec's basis.
struct AlgebraElement {
  const LieAlgebraSpec* algebra = nullptr;
  std::vector<ExactScalar> coeffs;

  ExactMat realize() const { return algebra->realize(coeffs); }
  bool is_zero() const;
};

/// [X, Y]; rejects elements of mismatched algebras.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

}  // namespace anomlab::liecore
