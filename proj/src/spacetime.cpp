#include "dkglab/spacetime.hpp"

#include <cmath>
#include <stdexcept>

#include "dkglab/fft.hpp"
#include "dkglab/norms.hpp"

namespace dkglab {

double bump_taper(double t, double Tw) {
  double u = 2.0 * t / Tw - 1.0;
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

namespace {

// monotone <-> natural reorder along both axes of a row-major matrix.
std::vector<cplx> shift_half_2d(const std::vector<cplx>& a, int n0, int n1) {
  std::vector<cplx> out(a.size());
  for (int i = 0; i < n0; ++i) {
    int si = (i + n0 / 2) % n0;
    for (int j = 0; j < n1; ++j) {
      int sj = (j + n1 / 2) % n1;
      out[static_cast<std::size_t>(i) * n1 + j] = a[static_cast<std::size_t>(si) * n1 + sj];
    }
  }
  return out;
}

}  // namespace

SpaceTimeSpectrum spacetime_spectrum(const GridSpec& g, const std::vector<cplx>& samples,
                                     int nt, double Tw, Taper taper) {
  if (nt < 8 || nt % 2 != 0) {
    throw std::invalid_argument("spacetime_spectrum: need at least 8 (even) time samples");
  }
  if (!(Tw > 0.0)) throw std::invalid_argument("spacetime_spectrum: window length must be > 0");
  if (samples.size() != static_cast<std::size_t>(g.N) * nt) {
    throw std::invalid_argument("spacetime_spectrum: sample matrix shape mismatch");
  }

  SpaceTimeSpectrum spec;
  spec.grid = g;
  spec.nt = nt;
  spec.Tw = Tw;
  spec.taper = taper;
  spec.coeffs = samples;

  if (taper == Taper::bump) {
    const double dt = Tw / nt;
    for (int l = 0; l < nt; ++l) {
      double w = bump_taper(l * dt, Tw);
      for (int j = 0; j < g.N; ++j) spec.coeffs[static_cast<std::size_t>(j) * nt + l] *= w;
    }
  }

  fft::dft2(spec.coeffs, g.N, nt, /*inverse=*/false);
  const double scale = g.dx() * (Tw / nt) / (2.0 * M_PI);
  for (auto& c : spec.coeffs) c *= scale;
  spec.coeffs = shift_half_2d(spec.coeffs, g.N, nt);
  return spec;
}

std::vector<cplx> spacetime_samples(const SpaceTimeSpectrum& spec) {
  std::vector<cplx> out = shift_half_2d(spec.coeffs, spec.grid.N, spec.nt);
  fft::dft2(out, spec.grid.N, spec.nt, /*inverse=*/true);
  const double scale = spec.grid.dxi() * spec.dtau() / (2.0 * M_PI);
  for (auto& c : out) c *= scale;
  return out;
}

const char* component_name(Component c) {
  switch (c) {
    case Component::psi_plus_up: return "psi_plus_up";
    case Component::psi_plus_lo: return "psi_plus_lo";
    case Component::psi_minus_up: return "psi_minus_up";
    case Component::psi_minus_lo: return "psi_minus_lo";
    case Component::phi_plus: return "phi_plus";
    case Component::phi_minus: return "phi_minus";
  }
  return "?";
}

namespace {
const ComplexScalarField& component_of(const HalfWaveState& s, Component c) {
  switch (c) {
    case Component::psi_plus_up: return s.psi_plus.up;
    case Component::psi_plus_lo: return s.psi_plus.lo;
    case Component::psi_minus_up: return s.psi_minus.up;
    case Component::psi_minus_lo: return s.psi_minus.lo;
    case Component::phi_plus: return s.phi_plus;
    case Component::phi_minus: return s.phi_minus;
  }
  throw std::logic_error("component_of: bad component");
}
}  // namespace

SpaceTimeSpectrum spacetime_spectrum(const Trajectory& traj, Component c, Taper taper) {
  // drop the final state (periodic wrap) and, if the remaining count is odd,
  // one more, so the tau lattice keeps its symmetric even layout
  int nt = static_cast<int>(traj.states.size()) - 1;
  nt -= nt % 2;
  if (nt < 8) throw std::invalid_argument("spacetime_spectrum: fewer than 8 time samples");
  const GridSpec& g = traj.states.front().grid();
  const double Tw = nt * traj.config.dt;
  for (int l = 0; l < nt; ++l) {
    if (std::abs(traj.states[l].t - l * traj.config.dt) > 1e-9 * std::max(1.0, Tw)) {
      throw std::invalid_argument("spacetime_spectrum: trajectory not uniform in time");
    }
  }

  std::vector<cplx> samples(static_cast<std::size_t>(g.N) * nt);
  for (int l = 0; l < nt; ++l) {
    ComplexScalarField phys = to_physical(component_of(traj.states[l], c));
    for (int j = 0; j < g.N; ++j) samples[static_cast<std::size_t>(j) * nt + l] = phys.values[j];
  }
  return spacetime_spectrum(g, samples, nt, Tw, taper);
}

void validate(const PhaseSpec& spec) {
  if (!(spec.p > 1.0) || !std::isfinite(spec.p)) {
    throw std::invalid_argument("PhaseSpec: p must lie in (1, inf)");
  }
  if (!std::isfinite(spec.l) || !std::isfinite(spec.b)) {
    throw std::invalid_argument("PhaseSpec: non-finite exponent");
  }
}

double xsb_accum(const SpaceTimeSpectrum& spec, const PhaseSpec& phase) {
  validate(phase);
  const double q = conjugate_exponent(phase.p);
  const double cell = spec.grid.dxi() * spec.dtau();
  double accum = 0.0;
  for (int i = 0; i < spec.grid.N; ++i) {
    const double xi = spec.grid.xi_slot(i);
    const double wxi = std::pow(angle_bracket(xi), phase.l * q);
    const double ph = phase.phase(xi);
    for (int j = 0; j < spec.nt; ++j) {
      double wtau = std::pow(angle_bracket(spec.tau_slot(j) + ph), phase.b * q);
      accum += wxi * wtau * std::pow(std::abs(spec.at(i, j)), q) * cell;
    }
  }
  return accum;
}

double xsb_norm(const SpaceTimeSpectrum& spec, const PhaseSpec& phase) {
  return std::pow(xsb_accum(spec, phase), (phase.p - 1.0) / phase.p);
}

double mixed_hat_norm(const SpaceTimeSpectrum& spec, double px_conj, double qt_conj) {
  if (!(px_conj >= 1.0) || !(qt_conj >= 1.0)) {
    throw std::invalid_argument("mixed_hat_norm: conjugate exponents must be >= 1");
  }
  const double dtau = spec.dtau();
  const double dxi = spec.grid.dxi();
  double outer = 0.0;
  for (int i = 0; i < spec.grid.N; ++i) {
    double inner = 0.0;
    for (int j = 0; j < spec.nt; ++j) {
      inner += std::pow(std::abs(spec.at(i, j)), qt_conj) * dtau;
    }
    outer += std::pow(std::pow(inner, 1.0 / qt_conj), px_conj) * dxi;
  }
  return std::pow(outer, 1.0 / px_conj);
}

ModulationTriple modulation_triple(double xi1, double tau1, double xi2, double tau2) {
  ModulationTriple m;
  m.xi = xi1 + xi2;
  m.tau = tau1 + tau2;
  m.sigma1_plus = tau1 + xi1;
  m.sigma2_minus = tau2 - xi2;
  m.sigma_plus = m.tau + std::abs(m.xi);
  m.sigma_minus = m.tau - std::abs(m.xi);
  return m;
}

}  // namespace dkglab
