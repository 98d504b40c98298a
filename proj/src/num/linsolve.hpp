#pragma once

#include <vector>

#include "num/exact.hpp"

namespace anomlab::num {

using GRMatrix = std::vector<std::vector<GaussianRational>>;

/// Exact solve of A X = B over the Gaussian rationals.
/// A is r x c with full column rank (r >= c), B is r x k.
/// Throws std::domain_error if A is rank-deficient or the system is
/// inconsistent.
GRMatrix solve_exact(GRMatrix a, GRMatrix b);

}  // namespace anomlab::num
