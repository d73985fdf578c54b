#include "dkglab/halfwave.hpp"

#include <cmath>
#include <stdexcept>

#include "dkglab/norms.hpp"

namespace dkglab {

void validate(const DkgParams& params) {
  if (!(params.m > 0.0)) throw std::invalid_argument("DkgParams: m must be positive");
  if (!std::isfinite(params.M) || !std::isfinite(params.g)) {
    throw std::invalid_argument("DkgParams: non-finite constant");
  }
}

std::vector<cplx> sqrt_a_symbol(const GridSpec& g) {
  std::vector<cplx> sym(g.N);
  for (int i = 0; i < g.N; ++i) sym[i] = angle_bracket(g.xi_slot(i));
  return sym;
}

std::vector<cplx> inv_sqrt_a_symbol(const GridSpec& g) {
  std::vector<cplx> sym(g.N);
  for (int i = 0; i < g.N; ++i) sym[i] = 1.0 / angle_bracket(g.xi_slot(i));
  return sym;
}

HalfWaveState diagonalize(const SpinorField& psi0, const ComplexScalarField& phi0,
                          const ComplexScalarField& phi1) {
  require_same_grid(psi0.grid(), phi0.grid, "diagonalize");
  require_same_grid(psi0.grid(), phi1.grid, "diagonalize");
  SpinorField psi = to_spectral(psi0);
  ComplexScalarField p0 = to_spectral(phi0);
  ComplexScalarField p1 = to_spectral(phi1);

  ComplexScalarField half_wave = apply_multiplier(p1, inv_sqrt_a_symbol(p1.grid));
  half_wave = scale(half_wave, cplx{0.0, 1.0});  // i A^{-1/2} phi1

  HalfWaveState state;
  state.t = 0.0;
  state.psi_plus = project(psi, Sign::plus);
  state.psi_minus = project(psi, Sign::minus);
  state.phi_plus = add(p0, half_wave);
  state.phi_minus = sub(p0, half_wave);
  return state;
}

CauchyData reconstruct(const HalfWaveState& state) {
  CauchyData out;
  out.psi = add(state.psi_plus, state.psi_minus);
  out.phi = scale(add(state.phi_plus, state.phi_minus), cplx{0.5, 0.0});
  ComplexScalarField diff = sub(state.phi_plus, state.phi_minus);
  diff = apply_multiplier(diff, sqrt_a_symbol(diff.grid));
  out.phi_t = scale(diff, cplx{0.0, -0.5});  // 1/(2i) = -i/2
  return out;
}

double projection_residual(const HalfWaveState& state) {
  double denom = std::max({max_abs(state.psi_plus), max_abs(state.psi_minus), 1e-300});
  SpinorField dp = sub(project(state.psi_plus, Sign::plus), state.psi_plus);
  SpinorField dm = sub(project(state.psi_minus, Sign::minus), state.psi_minus);
  return std::max(max_abs(dp), max_abs(dm)) / denom;
}

double reality_residual(const HalfWaveState& state) {
  double denom = std::max(l2_norm(state.phi_plus), 1e-300);
  return l2_distance(state.phi_minus, conj_field(state.phi_plus)) / denom;
}

double state_l2_distance(const HalfWaveState& a, const HalfWaveState& b) {
  double dpp = l2_distance(a.psi_plus, b.psi_plus);
  double dpm = l2_distance(a.psi_minus, b.psi_minus);
  double dfp = l2_distance(a.phi_plus, b.phi_plus);
  double dfm = l2_distance(a.phi_minus, b.phi_minus);
  return std::sqrt(dpp * dpp + dpm * dpm + dfp * dfp + dfm * dfm);
}

}  // namespace dkglab
