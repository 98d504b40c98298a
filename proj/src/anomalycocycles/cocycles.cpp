#include "anomalycocycles/cocycles.hpp"

#include <stdexcept>

namespace anomlab::anomalycocycles {

namespace {

using fieldalg::Domain;
using fieldalg::DomainKind;
using fieldalg::wedge;
using fieldalg::wedge_bracket;
using num::ExactMat;
using num::GaussianRational;
using num::rat;

const ExactScalar kHalfInvPi(GaussianRational(rat(1, 2)), -1);       // 1/(2π)
const ExactScalar kQuarterInvPiI(GaussianRational(rat(0), rat(-1, 4)), -1);  // 1/(4πi)
const ExactScalar kMF(GaussianRational(rat(1, 24)), -2);             // 1/(24π²)
const ExactScalar kBoundary(GaussianRational(rat(1, 8)), -2);        // 1/(8π²)

void require_zero_forms(std::initializer_list<const FourierField*> fs, DomainKind kind,
                        const char* what) {
  const FourierField* first = *fs.begin();
  for (const FourierField* f : fs) {
    if (f->domain().kind != kind)
      throw std::invalid_argument(std::string(what) + ": wrong domain " + f->domain().str());
    if (f->form_degree() != 0)
      throw std::invalid_argument(std::string(what) + ": expected 0-form arguments");
    if (f->rep_size() != first->rep_size() || !(f->domain() == first->domain()))
      throw std::invalid_argument(std::string(what) + ": arguments from different algebras");
  }
}

// c_N(A;X,Y) = (1/24π²) ∫_N tr A [dX, dY] on any 3-dimensional domain
ExactScalar cn_cocycle(const FourierField& a, const FourierField& x, const FourierField& y,
                       const char* what) {
  if (a.form_degree() != 1) throw std::invalid_argument(std::string(what) + ": A must be a 1-form");
  if (x.form_degree() != 0 || y.form_degree() != 0)
    throw std::invalid_argument(std::string(what) + ": X, Y must be 0-forms");
  if (!(a.domain() == x.domain()) || !(a.domain() == y.domain()) ||
      a.rep_size() != x.rep_size() || a.rep_size() != y.rep_size())
    throw std::invalid_argument(std::string(what) + ": mismatched domains or algebras");
  if (a.domain().dim() != 3)
    throw std::invalid_argument(std::string(what) + ": domain must be 3-dimensional");
  FourierField integrand = wedge(a, wedge_bracket(x.d(), y.d())).trace();
  return kMF * integrand.integrate();
}

// [A,X] + dX, the infinitesimal gauge transformation of the argument A
FourierField gauge_variation(const FourierField& a, const FourierField& x) {
  return wedge_bracket(a, x) + x.d();
}

ExactScalar consistency_sum(const FourierField& a, const FourierField& x, const FourierField& y,
                            const FourierField& z, const char* what) {
  const FourierField* cyc[3][3] = {{&x, &y, &z}, {&y, &z, &x}, {&z, &x, &y}};
  ExactScalar total;
  for (auto& t : cyc) {
    const FourierField& u = *t[0];
    const FourierField& v = *t[1];
    const FourierField& w = *t[2];
    total += cn_cocycle(a, u, wedge_bracket(v, w), what);
    total += cn_cocycle(gauge_variation(a, u), v, w, what);
  }
  return total;
}

}  // namespace

bool CocycleReport::defects_clear() const {
  for (const auto& [name, defect] : identity_defects)
    if (defect != "0" && defect != "0.000000e+00") return false;
  return true;
}

CocycleReport make_exact_report(std::string formula_id, std::string inputs,
                                const ExactScalar& value) {
  CocycleReport r;
  r.formula_id = std::move(formula_id);
  r.inputs = std::move(inputs);
  r.exact = true;
  r.value = value.str();
  r.value_numeric = value.to_complex();
  return r;
}

ExactScalar affine_cocycle(const FourierField& x, const FourierField& y) {
  require_zero_forms({&x, &y}, DomainKind::T1, "affine_cocycle");
  return kHalfInvPi * wedge(x, y.d()).trace().integrate();
}

ExactScalar affine_jacobi_defect(const FourierField& x, const FourierField& y,
                                 const FourierField& z) {
  require_zero_forms({&x, &y, &z}, DomainKind::T1, "affine_jacobi_defect");
  return affine_cocycle(wedge_bracket(x, y), z) + affine_cocycle(wedge_bracket(y, z), x) +
         affine_cocycle(wedge_bracket(z, x), y);
}

ExactScalar path_cocycle(const FourierField& x, const FourierField& y) {
  require_zero_forms({&x, &y}, DomainKind::Interval, "path_cocycle");
  for (const FourierField* f : {&x, &y})
    if (!f->interval_endpoint_value(0).is_zero())
      throw std::invalid_argument("path_cocycle: paths must vanish at t=0");
  FourierField integrand = (wedge(x, y.d()) - wedge(y, x.d())).trace();
  return kQuarterInvPiI * integrand.integrate();
}

std::pair<ExactScalar, ExactScalar> path_coboundary_sides(const FourierField& x,
                                                          const FourierField& y,
                                                          const FourierField& z) {
  ExactScalar cyclic = path_cocycle(x, wedge_bracket(y, z)) +
                       path_cocycle(y, wedge_bracket(z, x)) +
                       path_cocycle(z, wedge_bracket(x, y));
  ExactMat endx = x.interval_endpoint_value(1);
  ExactMat endy = y.interval_endpoint_value(1);
  ExactMat endz = z.interval_endpoint_value(1);
  ExactScalar boundary = kQuarterInvPiI * (endx * commutator(endy, endz)).trace();
  return {cyclic, boundary};
}

ExactScalar path_coboundary_defect(const FourierField& x, const FourierField& y,
                                   const FourierField& z) {
  auto [cyclic, boundary] = path_coboundary_sides(x, y, z);
  return cyclic - boundary;
}

ExactScalar mf_cocycle(const FourierField& a, const FourierField& x, const FourierField& y) {
  if (a.domain().kind != DomainKind::T3)
    throw std::invalid_argument("mf_cocycle: domain must be T3");
  return cn_cocycle(a, x, y, "mf_cocycle");
}

ExactScalar mf_cocycle_identity_defect(const FourierField& a, const FourierField& x,
                                       const FourierField& y, const FourierField& z) {
  if (a.domain().kind != DomainKind::T3)
    throw std::invalid_argument("mf_cocycle_identity_defect: domain must be T3");
  return consistency_sum(a, x, y, z, "mf_cocycle_identity_defect");
}

ExactScalar boundary_three_cocycle(const FourierField& x, const FourierField& y,
                                   const FourierField& z) {
  require_zero_forms({&x, &y, &z}, DomainKind::T2, "boundary_three_cocycle");
  FourierField integrand = wedge(x, wedge_bracket(y.d(), z.d())).trace();
  return kBoundary * integrand.integrate();
}

ExactScalar boundary_coboundary_defect(const FourierField& a, const FourierField& x,
                                       const FourierField& y, const FourierField& z) {
  if (a.domain().kind != DomainKind::T2xInterval)
    throw std::invalid_argument("boundary_coboundary_defect: domain must be T2x[0,1]");
  ExactScalar bulk = consistency_sum(a, x, y, z, "boundary_coboundary_defect");
  ExactScalar bdry;
  for (int end : {1, 0}) {
    ExactScalar v = boundary_three_cocycle(x.boundary_restrict(end), y.boundary_restrict(end),
                                           z.boundary_restrict(end));
    bdry += (end == 1) ? v : -v;
  }
  return bulk - bdry;
}

}  // namespace anomlab::anomalycocycles
