#pragma once

#include <array>
#include <compare>
#include <complex>
#include <map>
#include <span>
#include <vector>

#include "fieldalg/domain.hpp"
#include "num/exact_matrix.hpp"

namespace anomlab::fieldalg {

using num::ExactMat;

/// One monomial slot of a field: Fourier mode k, polynomial degree m in
/// the interval coordinate, and the wedge-basis bitmask (bit j = dθ_{j+1},
/// highest bit = dt when the domain has an interval factor).
struct TermKey {
  std::array<int, 3> k{0, 0, 0};
  int m = 0;
  unsigned mask = 0;

  auto operator<=>(const TermKey&) const = default;
};

/// Lie-algebra/matrix-valued trigonometric-polynomial differential form
/// with exact coefficients (finite support). Value-semantic and immutable
/// in practice: operations return new fields.
class FourierField {
 public:
  FourierField(Domain dom, int rep_size, int form_degree);

  const Domain& domain() const { return dom_; }
  int rep_size() const { return rep_size_; }
  int form_degree() const { return degree_; }
  const std::map<TermKey, ExactMat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulate a term; validates mode support, degree and coefficient shape.
  void add_term(const TermKey& key, const ExactMat& coeff);

  /// Exterior derivative; rejects top-degree input.
  FourierField d() const;

  /// Entrywise matrix trace: rep_size -> 1.
  FourierField trace() const;

  /// Exact integral of a scalar (1x1) top-degree form over the domain.
  ExactScalar integrate() const;

  /// Restriction of a form on T2x[0,L] to the boundary torus at s=end (0|1).
  FourierField boundary_restrict(int end) const;

  /// Value of an interval-domain 0-form at an endpoint.
  ExactMat interval_endpoint_value(int end) const;

  /// c(-k) == -c(k)^dagger for every mode (compact-real-form constraint).
  bool satisfies_reality() const;

  /// Numeric value at a point (coordinates ordered θ_1..θ_d, then t):
  /// per-mask complex coefficient matrices (row-major, rep_size^2 each).
  std::map<unsigned, std::vector<std::complex<double>>> evaluate(
      std::span<const double> x) const;

  /// Coefficient function of the top-degree form at a point (scalar fields).
  std::complex<double> evaluate_scalar_top(std::span<const double> x) const;

  FourierField& operator+=(const FourierField& o);
  FourierField& operator-=(const FourierField& o);

  friend FourierField operator+(const FourierField& a, const FourierField& b);
  friend FourierField operator-(const FourierField& a, const FourierField& b);
  friend FourierField operator-(const FourierField& a);
  friend FourierField operator*(const ExactScalar& s, const FourierField& a);
  friend bool operator==(const FourierField& a, const FourierField& b);

  friend FourierField wedge(const FourierField& a, const FourierField& b);

 private:
  void check_compatible(const FourierField& o) const;

  Domain dom_;
  int rep_size_ = 1;
  int degree_ = 0;
  std::map<TermKey, ExactMat> terms_;
};

/// Wedge with matrix product on coefficients; rejects degree overflow.
FourierField wedge(const FourierField& a, const FourierField& b);

/// Wedge with the matrix commutator on coefficients: a∧b - b∧a.
/// Satisfies [a,b] = -[b,a] in all degrees.
FourierField wedge_bracket(const FourierField& a, const FourierField& b);

/// Attach a constant form factor dx_mask to a 0-form (e.g. build A_j dθ_j).
FourierField promote(const FourierField& zero_form, unsigned mask);

}  // namespace anomlab::fieldalg
