#include "dkglab/dirac.hpp"

namespace dkglab {

Mat2 alpha_matrix() {
  return Mat2{{{cplx{0, 0}, cplx{1, 0}}, {cplx{1, 0}, cplx{0, 0}}}};
}

Mat2 beta_matrix() {
  return Mat2{{{cplx{1, 0}, cplx{0, 0}}, {cplx{0, 0}, cplx{-1, 0}}}};
}

Mat2 projector_matrix(Sign s) {
  double h = 0.5, o = 0.5 * sgn(s);
  return Mat2{{{cplx{h, 0}, cplx{o, 0}}, {cplx{o, 0}, cplx{h, 0}}}};
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

Mat2 mat_add(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][j] + b[i][j];
  return c;
}

Mat2 mat_sub(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][j] - b[i][j];
  return c;
}

std::array<cplx, 2> mat_apply(const Mat2& m, const std::array<cplx, 2>& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

SpinorField apply_beta(const SpinorField& psi) {
  return {psi.up, scale(psi.lo, cplx{-1.0, 0.0})};
}

SpinorField apply_alpha(const SpinorField& psi) { return {psi.lo, psi.up}; }

SpinorField project(const SpinorField& psi, Sign s) {
  // P_pm psi = (1/2)(up pm lo, pm up + lo), componentwise over the grid.
  const double o = 0.5 * sgn(s);
  SpinorField out = psi;
  for (int i = 0; i < psi.grid().N; ++i) {
    cplx u = psi.up.values[i], l = psi.lo.values[i];
    out.up.values[i] = 0.5 * u + o * l;
    out.lo.values[i] = o * u + 0.5 * l;
  }
  return out;
}

ComplexScalarField beta_form(const SpinorField& psi, const SpinorField& psi_prime) {
  require_same_grid(psi.grid(), psi_prime.grid(), "beta_form");
  require_rep(psi.up, Rep::physical, "beta_form");
  require_rep(psi_prime.up, Rep::physical, "beta_form");
  ComplexScalarField out = make_field(psi.grid(), Rep::physical);
  for (int i = 0; i < psi.grid().N; ++i) {
    out.values[i] = std::conj(psi_prime.up.values[i]) * psi.up.values[i] -
                    std::conj(psi_prime.lo.values[i]) * psi.lo.values[i];
  }
  return out;
}

ComplexScalarField beta_form_projected(const SpinorField& psi, Sign a,
                                       const SpinorField& psi_prime, Sign b) {
  return beta_form(project(psi, a), project(psi_prime, b));
}

NullComponents null_components(const SpinorField& psi, const SpinorField& psi_prime) {
  SpinorField pp = project(psi, Sign::plus);
  SpinorField pm = project(psi, Sign::minus);
  SpinorField qp = project(psi_prime, Sign::plus);
  SpinorField qm = project(psi_prime, Sign::minus);
  return NullComponents{beta_form(pp, qp), beta_form(pp, qm), beta_form(pm, qp),
                        beta_form(pm, qm)};
}

}  // namespace dkglab
