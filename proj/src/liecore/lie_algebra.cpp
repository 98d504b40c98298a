#include "liecore/lie_algebra.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "num/linsolve.hpp"

namespace anomlab::liecore {

namespace {

using num::rat;

ExactScalar es(long num, long den = 1) { return ExactScalar(GaussianRational(rat(num, den))); }
ExactScalar esi(long num, long den = 1) {
  return ExactScalar(GaussianRational(rat(0), rat(num, den)));
}

ExactMat u1_generator() {
  ExactMat m(1, 1);
  m.at(0, 0) = esi(1);
  return m;
}

// T_a = i sigma_a / 2
std::vector<ExactMat> su2_basis() {
  ExactMat t1(2, 2), t2(2, 2), t3(2, 2);
  t1.at(0, 1) = esi(1, 2);
  t1.at(1, 0) = esi(1, 2);
  t2.at(0, 1) = es(1, 2);
  t2.at(1, 0) = es(-1, 2);
  t3.at(0, 0) = esi(1, 2);
  t3.at(1, 1) = esi(-1, 2);
  return {t1, t2, t3};
}

// Antihermitian basis of u(n) with entries in {0, ±1, ±i}:
// E_jk - E_kj and i(E_jk + E_kj) for j<k, plus i E_jj.
// Dropping the diagonal generators in favor of differences i(E_jj - E_(j+1)(j+1))
// gives the su(n) variant.
std::vector<ExactMat> un_basis(int n, bool traceless) {
  std::vector<ExactMat> basis;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      ExactMat x(n, n), y(n, n);
      x.at(j, k) = es(1);
      x.at(k, j) = es(-1);
      y.at(j, k) = esi(1);
      y.at(k, j) = esi(1);
      basis.push_back(x);
      basis.push_back(y);
    }
  if (traceless) {
    for (int j = 0; j + 1 < n; ++j) {
      ExactMat h(n, n);
      h.at(j, j) = esi(1);
      h.at(j + 1, j + 1) = esi(-1);
      basis.push_back(h);
    }
  } else {
    for (int j = 0; j < n; ++j) {
      ExactMat h(n, n);
      h.at(j, j) = esi(1);
      basis.push_back(h);
    }
  }
  return basis;
}

// Adjoint (spin-1) representation of su2 built from its structure constants.
std::vector<ExactMat> su2_adjoint_basis(const LieAlgebraSpec& su2) {
  std::vector<ExactMat> basis;
  for (int a = 0; a < 3; ++a) {
    ExactMat m(3, 3);
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        m.at(c, b) = ExactScalar(su2.structure_constant(c, a, b));
    basis.push_back(m);
  }
  return basis;
}

}  // namespace

LieAlgebraSpec LieAlgebraSpec::from_matrices(std::string name, std::vector<ExactMat> basis) {
  if (basis.empty()) throw std::invalid_argument("algebra needs at least one generator");
  LieAlgebraSpec g;
  g.name_ = std::move(name);
  g.rep_size_ = basis[0].rows();
  for (const auto& m : basis)
    if (m.rows() != g.rep_size_ || m.cols() != g.rep_size_)
      throw std::invalid_argument("generator size mismatch in algebra " + g.name_);
  g.basis_ = std::move(basis);
  g.derive_structure_constants();
  g.validate();
  return g;
}

void LieAlgebraSpec::derive_structure_constants() {
  const int d = dim();
  const int n = rep_size_;
  // vectorize: unknown coefficients are plain complex rationals, so each
  // basis matrix contributes one column of n^2 Gaussian-rational entries.
  num::GRMatrix a(n * n, std::vector<GaussianRational>(d));
  for (int c = 0; c < d; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const ExactScalar& e = basis_[c].at(i, j);
        for (const auto& [k, q] : e.terms())
          if (k != 0)
            throw std::invalid_argument("generators must have pi-free rational entries");
        a[i * n + j][c] = e.coefficient(0);
      }

  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) pairs.emplace_back(p, q);
  num::GRMatrix b(n * n, std::vector<GaussianRational>(pairs.size()));
  for (size_t col = 0; col < pairs.size(); ++col) {
    ExactMat comm = commutator(basis_[pairs[col].first], basis_[pairs[col].second]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b[i * n + j][col] = comm.at(i, j).coefficient(0);
  }

  num::GRMatrix x;
  try {
    x = num::solve_exact(std::move(a), std::move(b));
  } catch (const std::domain_error& e) {
    throw std::invalid_argument("algebra " + name_ +
                                ": generators not independent or not closed under bracket (" +
                                e.what() + ")");
  }

  f_.assign(d, std::vector<std::vector<GaussianRational>>(d, std::vector<GaussianRational>(d)));
  for (size_t col = 0; col < pairs.size(); ++col)
    for (int c = 0; c < d; ++c) f_[pairs[col].first][pairs[col].second][c] = x[c][col];

  trace_form_.assign(d, std::vector<ExactScalar>(d));
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) trace_form_[p][q] = (basis_[p] * basis_[q]).trace();
}

void LieAlgebraSpec::validate() const {
  const int d = dim();
  // closure: [T_a, T_b] equals sum_c f^c_{ab} T_c exactly
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      ExactMat lhs = commutator(basis_[a], basis_[b]);
      ExactMat rhs(rep_size_, rep_size_);
      for (int c = 0; c < d; ++c) rhs += ExactScalar(f_[a][b][c]) * basis_[c];
      if (!(lhs == rhs)) throw std::logic_error("algebra " + name_ + ": closure check failed");
    }
  // Jacobi on the structure constants, accumulated sparsely
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int c = b + 1; c < d; ++c) {
        std::vector<GaussianRational> s(d);
        int cyc[3][2] = {{b, c}, {c, a}, {a, b}};
        int other[3] = {a, b, c};
        for (int t = 0; t < 3; ++t)
          for (int e = 0; e < d; ++e) {
            const GaussianRational& inner = f_[cyc[t][0]][cyc[t][1]][e];
            if (inner.is_zero()) continue;
            for (int dd = 0; dd < d; ++dd) {
              const GaussianRational& outer = f_[other[t]][e][dd];
              if (outer.is_zero()) continue;
              s[dd] += inner * outer;
            }
          }
        for (int dd = 0; dd < d; ++dd)
          if (!s[dd].is_zero())
            throw std::logic_error("algebra " + name_ + ": Jacobi check failed");
      }
  // trace form symmetric and invariant
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (!(trace_form_[a][b] == trace_form_[b][a]))
        throw std::logic_error("algebra " + name_ + ": trace form not symmetric");
      for (int c = 0; c < d; ++c) {
        ExactScalar s = (commutator(basis_[a], basis_[b]) * basis_[c]).trace() +
                        (basis_[b] * commutator(basis_[a], basis_[c])).trace();
        if (!s.is_zero())
          throw std::logic_error("algebra " + name_ + ": trace form not invariant");
      }
    }
}

std::vector<ExactScalar> LieAlgebraSpec::bracket_coefficients(
    std::span<const ExactScalar> x, std::span<const ExactScalar> y) const {
  const int d = dim();
  std::vector<ExactScalar> out(d);
  for (int a = 0; a < d; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < d; ++b) {
      if (y[b].is_zero()) continue;
      ExactScalar xy = x[a] * y[b];
      for (int c = 0; c < d; ++c) {
        if (f_[a][b][c].is_zero()) continue;
        out[c] += xy * ExactScalar(f_[a][b][c]);
      }
    }
  }
  return out;
}

ExactMat LieAlgebraSpec::realize(std::span<const ExactScalar> coeffs) const {
  ExactMat m(rep_size_, rep_size_);
  for (int a = 0; a < dim(); ++a)
    if (!coeffs[a].is_zero()) m += coeffs[a] * basis_[a];
  return m;
}

ExactScalar LieAlgebraSpec::trace_pair(std::span<const ExactScalar> x,
                                       std::span<const ExactScalar> y) const {
  ExactScalar t;
  for (int a = 0; a < dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dim(); ++b) {
      if (y[b].is_zero()) continue;
      t += x[a] * y[b] * trace_form_[a][b];
    }
  }
  return t;
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.algebra == nullptr || y.algebra == nullptr)
    throw std::invalid_argument("bracket of unbound algebra elements");
  if (!x.algebra->same_algebra(*y.algebra))
    throw std::invalid_argument("bracket of elements from different algebras");
  return {x.algebra, x.algebra->bracket_coefficients(x.coeffs, y.coeffs)};
}

const LieAlgebraSpec& LieAlgebraSpec::builtin(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<LieAlgebraSpec>> cache;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return *it->second;
  }

  // construct outside the lock: su2_spin1 recurses into builtin("su2")
  LieAlgebraSpec g;
  if (name == "u1") {
    g = from_matrices("u1", {u1_generator()});
  } else if (name == "su2") {
    g = from_matrices("su2", su2_basis());
  } else if (name == "su2_spin1") {
    const LieAlgebraSpec& su2 = builtin("su2");
    g = from_matrices("su2_spin1", su2_adjoint_basis(su2));
  } else if (name == "su3") {
    g = from_matrices("su3", un_basis(3, true));
  } else if (name == "u2") {
    g = from_matrices("u2", un_basis(2, false));
  } else if (name == "u3") {
    g = from_matrices("u3", un_basis(3, false));
  } else if (name == "u4") {
    g = from_matrices("u4", un_basis(4, false));
  } else {
    throw std::invalid_argument("unknown builtin algebra: " + name);
  }
  std::scoped_lock lock(mu);
  auto [it, inserted] = cache.emplace(name, nullptr);
  if (inserted) it->second = std::make_unique<LieAlgebraSpec>(std::move(g));
  return *it->second;
}

std::vector<std::string> LieAlgebraSpec::builtin_names() {
  return {"u1", "su2", "su2_spin1", "su3", "u2", "u3", "u4"};
}

}  // namespace anomlab::liecore
