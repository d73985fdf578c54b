#pragma once
#include "dkglab/dirac.hpp"

namespace dkglab {

/// System constants. The wave operator is always built with unit mass,
/// A = -d^2/dx^2 + 1; a Klein-Gordon mass m != 1 is carried through the
/// residual linear term c0 * phi = (1 - m^2) * phi on the right-hand side.
struct DkgParams {
  double M = 1.0;  // Dirac mass
  double m = 1.0;  // Klein-Gordon mass, > 0
  double g = 1.0;  // coupling

  double c0() const { return 1.0 - m * m; }
};

void validate(const DkgParams& params);

/// The diagonalized unknowns at one time: psi_pm = P_pm psi and the half
/// waves phi_pm = phi pm i A^{-1/2} phi_t. All fields spectral.
struct HalfWaveState {
  double t = 0.0;
  SpinorField psi_plus, psi_minus;
  ComplexScalarField phi_plus, phi_minus;

  const GridSpec& grid() const { return psi_plus.grid(); }
};

/// Symbols of A^{1/2} and A^{-1/2} on the grid: <xi> and <xi>^{-1}.
std::vector<cplx> sqrt_a_symbol(const GridSpec& g);
std::vector<cplx> inv_sqrt_a_symbol(const GridSpec& g);

/// Transforms Cauchy data (psi0, phi0, phi1) into the diagonal unknowns:
///   psi_pm(0) = P_pm psi0,  phi_pm(0) = phi0 pm i A^{-1/2} phi1.
/// Inputs may be in either representation; the state is stored spectrally.
HalfWaveState diagonalize(const SpinorField& psi0, const ComplexScalarField& phi0,
                          const ComplexScalarField& phi1);

struct CauchyData {
  SpinorField psi;
  ComplexScalarField phi, phi_t;
};

/// Inverse of diagonalize:
///   psi   = psi_+ + psi_-
///   phi   = (phi_+ + phi_-) / 2
///   phi_t = A^{1/2} (phi_+ - phi_-) / (2i)
CauchyData reconstruct(const HalfWaveState& state);

/// max_pm |P_pm psi_pm - psi_pm| / max(|psi|, tiny): the projection
/// invariance residual that any consistent state keeps near roundoff.
double projection_residual(const HalfWaveState& state);

/// L2 residual of phi_- == conj(phi_+), relative; zero for states that came
/// from real (phi0, phi1).
double reality_residual(const HalfWaveState& state);

double state_l2_distance(const HalfWaveState& a, const HalfWaveState& b);

}  // namespace dkglab
