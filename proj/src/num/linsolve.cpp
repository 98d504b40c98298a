#include "num/linsolve.hpp"

#include <stdexcept>

namespace anomlab::num {

GRMatrix solve_exact(GRMatrix a, GRMatrix b) {
  const size_t rows = a.size();
  if (rows == 0) throw std::domain_error("solve_exact: empty system");
  const size_t cols = a[0].size();
  const size_t k = b[0].size();
  if (b.size() != rows) throw std::domain_error("solve_exact: rhs row mismatch");

  std::vector<size_t> pivot_row(cols);
  size_t lead = 0;
  for (size_t col = 0; col < cols; ++col) {
    size_t piv = lead;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) throw std::domain_error("solve_exact: rank-deficient matrix");
    std::swap(a[piv], a[lead]);
    std::swap(b[piv], b[lead]);
    GaussianRational inv = GaussianRational(1) / a[lead][col];
    for (size_t j = col; j < cols; ++j) a[lead][j] = a[lead][j] * inv;
    for (size_t j = 0; j < k; ++j) b[lead][j] = b[lead][j] * inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == lead || a[r][col].is_zero()) continue;
      GaussianRational f = a[r][col];
      for (size_t j = col; j < cols; ++j) a[r][j] -= f * a[lead][j];
      for (size_t j = 0; j < k; ++j) b[r][j] -= f * b[lead][j];
    }
    pivot_row[col] = lead;
    ++lead;
  }
  // consistency: rows beyond the pivots must have zero rhs
  for (size_t r = lead; r < rows; ++r)
    for (size_t j = 0; j < k; ++j)
      if (!b[r][j].is_zero()) throw std::domain_error("solve_exact: inconsistent system");

  GRMatrix x(cols, std::vector<GaussianRational>(k));
  for (size_t col = 0; col < cols; ++col) x[col] = b[pivot_row[col]];
  return x;
}

}  // namespace anomlab::num
