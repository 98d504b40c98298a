#pragma once

#include <random>

#include "fieldalg/field.hpp"
#include "liecore/lie_algebra.hpp"

namespace anomlab::fieldalg {

struct RandomFieldOptions {
  int max_mode = 1;          // |k_j| <= max_mode in every torus direction
  int max_poly_degree = 0;   // interval-coordinate polynomial degree
  bool antihermitian = true; // enforce c(-k) = -c(k)^dagger
  bool zero_at_start = false;// drop the constant polynomial term (paths from e)
  int sparsity = 2;          // roughly 1-in-sparsity modes populated
};

/// Seeded random algebra-valued 0-form. Randomness flows from the caller's
/// generator only; coefficients are small Gaussian rationals.
FourierField random_field(const Domain& dom, const liecore::LieAlgebraSpec& g,
                          const RandomFieldOptions& opt, std::mt19937_64& rng);

}  // namespace anomlab::fieldalg
