#include "fieldalg/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace anomlab::fieldalg {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) {
      nodes = it->second.first;
      weights = it->second.second;
      return;
    }
  }
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  std::scoped_lock lock(mu);
  cache.emplace(n, std::make_pair(nodes, weights));
}

std::complex<double> quad_value(const Integrand& f, std::span<const QuadAxis> axes, int n) {
  const int d = static_cast<int>(axes.size());
  if (d < 1 || d > 3) throw std::invalid_argument("quad_integrate supports 1..3 dimensions");

  std::vector<std::vector<double>> xs(d), ws(d);
  for (int a = 0; a < d; ++a) {
    const double len = axes[a].hi - axes[a].lo;
    if (axes[a].periodic) {
      double h = len / n;
      for (int j = 0; j < n; ++j) {
        xs[a].push_back(axes[a].lo + (j + 0.5) * h);
        ws[a].push_back(h);
      }
    } else {
      std::vector<double> gn, gw;
      gauss_legendre(n, gn, gw);
      for (int j = 0; j < n; ++j) {
        xs[a].push_back(axes[a].lo + 0.5 * len * (gn[j] + 1.0));
        ws[a].push_back(0.5 * len * gw[j]);
      }
    }
  }

  std::complex<double> total{0, 0};
  std::vector<double> pt(d);
  std::vector<int> idx(d, 0);
  while (true) {
    double w = 1.0;
    for (int a = 0; a < d; ++a) {
      pt[a] = xs[a][idx[a]];
      w *= ws[a][idx[a]];
    }
    std::complex<double> v = f(pt);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream os;
      os << "non-finite integrand at node (";
      for (int a = 0; a < d; ++a) os << (a ? ", " : "") << pt[a];
      os << ")";
      throw std::domain_error(os.str());
    }
    total += w * v;
    int a = d - 1;
    while (a >= 0 && ++idx[a] == n) idx[a--] = 0;
    if (a < 0) break;
  }
  return total;
}

QuadResult quad_integrate(const Integrand& f, std::span<const QuadAxis> axes, int resolution) {
  if (resolution < 4) throw std::invalid_argument("quadrature resolution must be >= 4");
  std::complex<double> fine = quad_value(f, axes, resolution);
  std::complex<double> coarse = quad_value(f, axes, resolution / 2);
  return {fine, std::abs(fine - coarse), resolution};
}

}  // namespace anomlab::fieldalg
