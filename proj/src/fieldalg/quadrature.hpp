#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace anomlab::fieldalg {

/// One coordinate direction of a product quadrature rule.
/// Periodic axes use the equal-weight midpoint-offset trapezoid rule
/// (exact for trigonometric polynomials below the Nyquist degree and
/// never evaluating on a seam); non-periodic axes use Gauss-Legendre.
struct QuadAxis {
  bool periodic = false;
  double lo = 0.0;
  double hi = 1.0;
};

struct QuadResult {
  std::complex<double> value{0, 0};
  double error_estimate = 0.0;  // |I_n - I_{n/2}|, Richardson-style proxy
  int resolution = 0;
};

using Integrand = std::function<std::complex<double>(std::span<const double>)>;

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Composite product quadrature at `resolution` nodes per direction,
/// with an error estimate from the run at half resolution.
/// Requires resolution >= 4; throws std::domain_error on a non-finite
/// integrand value, naming the node.
QuadResult quad_integrate(const Integrand& f, std::span<const QuadAxis> axes, int resolution);

/// Single-resolution evaluation (no error estimate).
std::complex<double> quad_value(const Integrand& f, std::span<const QuadAxis> axes, int n);

}  // namespace anomlab::fieldalg
