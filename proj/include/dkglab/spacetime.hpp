#pragma once
#include "dkglab/evolution.hpp"

namespace dkglab {

enum class Taper { none, bump };

/// Discrete transform over space and time of samples on [0,L) x [0,Tw),
/// N x nt points, with the 2D unitary-density convention
///   coeffs(xi_k, tau_j) = dx*dt/(2 pi) * sum f(x,t) e^{-i(xi x + tau t)},
/// tau_j = 2 pi j / Tw for j = -nt/2 .. nt/2-1. Stored row-major
/// [xi slot][tau slot], both axes in monotone frequency order.
struct SpaceTimeSpectrum {
  GridSpec grid;
  int nt = 0;
  double Tw = 0.0;
  Taper taper = Taper::none;
  std::vector<cplx> coeffs;

  double dt() const { return Tw / nt; }
  double dtau() const { return 2.0 * M_PI / Tw; }
  double tau_slot(int jslot) const { return dtau() * (jslot - nt / 2); }
  cplx& at(int kslot, int jslot) { return coeffs[static_cast<std::size_t>(kslot) * nt + jslot]; }
  const cplx& at(int kslot, int jslot) const {
    return coeffs[static_cast<std::size_t>(kslot) * nt + jslot];
  }
};

/// Smooth compactly supported bump on (0, Tw), == exp(1 - 1/(1-u^2)) with
/// u = 2t/Tw - 1; value 1 at the center, 0 at the window edges.
double bump_taper(double t, double Tw);

/// Builds the spectrum from physical samples, row-major [x index][t index].
/// Requires nt >= 8 even.
SpaceTimeSpectrum spacetime_spectrum(const GridSpec& g, const std::vector<cplx>& samples,
                                     int nt, double Tw, Taper taper);

/// Inverse of the transform (taper not undone); physical samples row-major.
std::vector<cplx> spacetime_samples(const SpaceTimeSpectrum& spec);

enum class Component {
  psi_plus_up,
  psi_plus_lo,
  psi_minus_up,
  psi_minus_lo,
  phi_plus,
  phi_minus
};

const char* component_name(Component c);

/// Windowed transform of one trajectory component; the final state (t = T)
/// is dropped so the samples tile the periodic window exactly once, and an
/// odd remainder loses one more sample to keep the tau lattice even.
SpaceTimeSpectrum spacetime_spectrum(const Trajectory& traj, Component c, Taper taper);

enum class PhaseKind { line, cone };

/// Weight parameters of the modulation norms: <xi>^l <tau + phase(xi)>^b with
/// phase(xi) = sign*xi (line) or sign*|xi| (cone), Lebesgue index p (weights
/// act through the conjugate exponent p'; p > 2 appears in dualized sweeps).
struct PhaseSpec {
  PhaseKind kind = PhaseKind::line;
  Sign sign = Sign::plus;
  double l = 0.0;
  double b = 0.0;
  double p = 2.0;

  double phase(double xi) const {
    double v = kind == PhaseKind::line ? xi : std::abs(xi);
    return sgn(sign) * v;
  }
};

void validate(const PhaseSpec& spec);

/// ( sum_{k,j} <xi_k>^{l p'} <tau_j + phase(xi_k)>^{b p'} |coeffs|^{p'}
///   dxi dtau )^{1/p'}
double xsb_norm(const SpaceTimeSpectrum& spec, const PhaseSpec& phase);

/// The same sum before the final 1/p' root (single accumulation pass);
/// lets spinor norms combine two components under one root.
double xsb_accum(const SpaceTimeSpectrum& spec, const PhaseSpec& phase);

/// Mixed transform-side norm || |ftilde|_{l^{qt'}_tau} ||_{l^{px'}_xi} with
/// quadrature weights; exponents are passed already conjugated so that
/// infinite Lebesgue indices map to exponent 1.
double mixed_hat_norm(const SpaceTimeSpectrum& spec, double px_conj, double qt_conj);

/// Modulation coordinates of a convolution pair: sigma1p = tau1 + xi1,
/// sigma2m = tau2 - xi2, sigma_pm = tau pm |xi| at (xi, tau) = (xi1+xi2,
/// tau1+tau2).
struct ModulationTriple {
  double sigma1_plus, sigma2_minus, sigma_plus, sigma_minus, xi, tau;
};

ModulationTriple modulation_triple(double xi1, double tau1, double xi2, double tau2);

}  // namespace dkglab
