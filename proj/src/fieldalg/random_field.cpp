#include "fieldalg/random_field.hpp"

namespace anomlab::fieldalg {

namespace {

using liecore::LieAlgebraSpec;
using num::rat;

GaussianRational small_rational(std::mt19937_64& rng, bool with_imag) {
  auto draw = [&]() {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 3);
    return rat(num, den);
  };
  return with_imag ? GaussianRational(draw(), draw()) : GaussianRational(draw());
}

ExactMat random_coeff(const LieAlgebraSpec& g, std::mt19937_64& rng, bool real_coeffs) {
  ExactMat c(g.rep_size(), g.rep_size());
  for (int a = 0; a < g.dim(); ++a) {
    if (rng() % 2) continue;
    GaussianRational q = small_rational(rng, !real_coeffs);
    if (q.is_zero()) continue;
    c += ExactScalar(q) * g.generator(a);
  }
  return c;
}

}  // namespace

FourierField random_field(const Domain& dom, const LieAlgebraSpec& g,
                          const RandomFieldOptions& opt, std::mt19937_64& rng) {
  FourierField f(dom, g.rep_size(), 0);
  const int td = dom.torus_dims();
  const int m_lo = (opt.zero_at_start && dom.has_interval()) ? 1 : 0;
  const int m_hi = dom.has_interval() ? std::max(opt.max_poly_degree, m_lo) : 0;

  std::vector<std::array<int, 3>> modes;
  std::array<int, 3> k{0, 0, 0};
  std::array<int, 3> lim{td > 0 ? opt.max_mode : 0, td > 1 ? opt.max_mode : 0,
                         td > 2 ? opt.max_mode : 0};
  for (k[0] = -lim[0]; k[0] <= lim[0]; ++k[0])
    for (k[1] = -lim[1]; k[1] <= lim[1]; ++k[1])
      for (k[2] = -lim[2]; k[2] <= lim[2]; ++k[2]) modes.push_back(k);

  auto is_positive = [](const std::array<int, 3>& kk) {
    for (int j = 0; j < 3; ++j) {
      if (kk[j] > 0) return true;
      if (kk[j] < 0) return false;
    }
    return false;  // zero mode
  };
  auto is_zero_mode = [](const std::array<int, 3>& kk) {
    return kk[0] == 0 && kk[1] == 0 && kk[2] == 0;
  };

  for (const auto& mode : modes) {
    if (opt.antihermitian && !is_positive(mode) && !is_zero_mode(mode)) continue;
    for (int m = m_lo; m <= m_hi; ++m) {
      if (opt.sparsity > 1 && rng() % opt.sparsity) continue;
      if (opt.antihermitian && is_zero_mode(mode)) {
        // antihermitian coefficient: real combination of the generators
        ExactMat c = random_coeff(g, rng, /*real_coeffs=*/true);
        f.add_term({mode, m, 0}, c);
      } else if (opt.antihermitian) {
        ExactMat c = random_coeff(g, rng, /*real_coeffs=*/false);
        f.add_term({mode, m, 0}, c);
        std::array<int, 3> neg{-mode[0], -mode[1], -mode[2]};
        f.add_term({neg, m, 0}, -c.adjoint());
      } else {
        ExactMat c = random_coeff(g, rng, /*real_coeffs=*/false);
        f.add_term({mode, m, 0}, c);
      }
    }
  }

  if (f.is_zero()) {
    // keep suites nondegenerate: deposit one safe term
    int m = m_hi > 0 ? m_lo : 0;
    if (td > 0) {
      std::array<int, 3> one{1, 0, 0};
      ExactMat c = ExactScalar(1) * g.generator(0);
      f.add_term({one, m, 0}, c);
      if (opt.antihermitian) {
        std::array<int, 3> neg{-1, 0, 0};
        f.add_term({neg, m, 0}, -c.adjoint());
      }
    } else {
      f.add_term({{0, 0, 0}, std::max(m, 1), 0}, ExactScalar(1) * g.generator(0));
    }
  }
  return f;
}

}  // namespace anomlab::fieldalg
