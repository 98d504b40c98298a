#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "fieldalg/field.hpp"

namespace anomlab::anomalycocycles {

using fieldalg::FourierField;
using num::ExactScalar;

/// Result record for one cocycle evaluation, carrying the value, its
/// provenance and any identity defects computed alongside it. Exact
/// defects are stored as exact strings; quadrature ones as floats.
struct CocycleReport {
  std::string formula_id;
  std::string inputs;
  bool exact = true;
  std::string value;
  std::complex<double> value_numeric{0, 0};
  std::vector<std::pair<std::string, std::string>> identity_defects;

  bool defects_clear() const;
};

CocycleReport make_exact_report(std::string formula_id, std::string inputs,
                                const ExactScalar& value);

/// Affine (Kac-Moody) cocycle on T1 0-forms: c(X,Y) = (1/2π) ∫_{S1} tr X dY.
ExactScalar affine_cocycle(const FourierField& x, const FourierField& y);

/// c([X,Y],Z) + c([Y,Z],X) + c([Z,X],Y); identically 0 for the affine cocycle.
ExactScalar affine_jacobi_defect(const FourierField& x, const FourierField& y,
                                 const FourierField& z);

/// Path-algebra cocycle on [0,2π] with X(0)=Y(0)=0:
///   c(X,Y) = (1/4πi) ∫ tr(X dY - Y dX).
ExactScalar path_cocycle(const FourierField& x, const FourierField& y);

/// δc(X,Y,Z) - (1/4πi) tr X[Y,Z]|_{2π}, where δc is the cyclic sum
/// c(X,[Y,Z]) + c(Y,[Z,X]) + c(Z,[X,Y]).  The boundary term enters with
/// the sign that the cyclic sum actually produces for paths from 0, so
/// the defect is identically zero; it is evaluated exactly.
ExactScalar path_coboundary_defect(const FourierField& x, const FourierField& y,
                                   const FourierField& z);

/// The two sides of the path coboundary relation (cyclic sum, boundary term).
std::pair<ExactScalar, ExactScalar> path_coboundary_sides(const FourierField& x,
                                                          const FourierField& y,
                                                          const FourierField& z);

/// Mickelsson-Faddeev cocycle on T3: c(A;X,Y) = (1/24π²) ∫ tr A [dX, dY]
/// with A a 1-form and X, Y 0-forms.
ExactScalar mf_cocycle(const FourierField& a, const FourierField& x, const FourierField& y);

/// Cyclic consistency sum Σ_cyc { c(A;X,[Y,Z]) + c([A,X]+dX; Y,Z) };
/// identically 0 on the closed T3.
ExactScalar mf_cocycle_identity_defect(const FourierField& a, const FourierField& x,
                                       const FourierField& y, const FourierField& z);

/// Boundary 3-cocycle on T2: dα(X,Y,Z) = (1/8π²) ∫ tr X [dY, dZ], with the
/// sign fixed by the orientation conventions dθ1∧dθ2 > 0 and
/// ∂(T2×[0,1]) = T2|₁ - T2|₀ (so that the coboundary relation below holds
/// exactly).
ExactScalar boundary_three_cocycle(const FourierField& x, const FourierField& y,
                                   const FourierField& z);

/// Defect of the coboundary relation on N = T2×[0,1]:
///   Σ_cyc { c_N(A;X,[Y,Z]) + c_N([A,X]+dX; Y,Z) }
///     - [ dα(X,Y,Z)|_{s=1} - dα(X,Y,Z)|_{s=0} ];
/// identically 0, evaluated exactly.
ExactScalar boundary_coboundary_defect(const FourierField& a, const FourierField& x,
                                       const FourierField& y, const FourierField& z);

}  // namespace anomlab::anomalycocycles
