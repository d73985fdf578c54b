#pragma once
#include "dkglab/halfwave.hpp"

namespace dkglab {

enum class Scheme { exponential_rk4, strang };

struct SolveConfig {
  double T = 1.0;
  double dt = 1e-2;
  Scheme scheme = Scheme::exponential_rk4;
  bool dealias = true;

  /// Number of steps T/dt; validated to be integral within 1e-9 (relative).
  int steps() const;
};

void validate(const SolveConfig& config);

/// Evolution operator of (d/dt pm d/dx) u = 0: spectral multiplier
/// e^{mp i xi t}; equals translation u0(x mp t).
SpinorField free_dirac(const SpinorField& psi, double t, Sign s);

/// Half-wave flow e^{mp i t A^{1/2}}: spectral multiplier e^{mp i <xi> t}.
ComplexScalarField free_kg(const ComplexScalarField& phi, double t, Sign s);

/// Applies the free flow to every block of the state (advances state.t).
HalfWaveState free_flow(const HalfWaveState& state, double t);

/// Full time derivative of the diagonal system, derived from the projected
/// first-order equations:
///   d/dt psi_pm = mp d/dx psi_pm - i M beta psi_mp + i g P_pm(phi beta psi)
///   d/dt phi_pm = mp i A^{1/2} phi_pm pm i A^{-1/2}(<beta psi, psi> + c0 phi)
/// with psi = psi_+ + psi_- and phi = (phi_+ + phi_-)/2. Quadratic products
/// are formed in physical space, with 2/3-rule dealias masking when enabled.
HalfWaveState rhs(const HalfWaveState& state, const DkgParams& params, bool dealias);

/// The interaction part only (rhs minus the exactly-integrated linear flow).
HalfWaveState nonlinear_rhs(const HalfWaveState& state, const DkgParams& params,
                            bool dealias);

struct Diagnostics {
  double t = 0.0;
  double charge = 0.0;      // ||psi||_{L2}^2
  double phi_energy = 0.0;  // (1/2) sum ((xi^2+m^2)|phi|^2 + |phi_t|^2) dxi
  double max_coeff = 0.0;
};

Diagnostics diagnostics_of(const HalfWaveState& state, const DkgParams& params);

struct Trajectory {
  std::vector<HalfWaveState> states;  // uniform dt, states[j].t = j*dt
  SolveConfig config;
  DkgParams params;
  std::vector<Diagnostics> diagnostics;
  bool blew_up = false;
  double last_valid_time = 0.0;
};

/// Integrates the diagonal system. The linear flow is applied exactly through
/// the free propagators; the interaction term is advanced at 4th order
/// (exponential-rk4, interaction-picture RK4) or 2nd order (strang).
/// A non-finite coefficient aborts the run at the last valid time.
Trajectory solve(const HalfWaveState& initial, const DkgParams& params,
                 const SolveConfig& config);

struct PicardResult {
  Trajectory trajectory;       // final iterate
  std::vector<double> residuals;  // max-over-time L2 distance between iterates
  bool diverged = false;
};

/// Fixed-point iteration on the integral form of the system: iterate 0 is the
/// free solution, and each sweep re-evaluates the Duhamel integrals with
/// 4th-order composite quadrature (Simpson with 3/8-rule / one-sided cubic
/// closings) on the config grid. Residual growth over three consecutive
/// sweeps is reported as divergence, not an error.
PicardResult picard(const HalfWaveState& initial, const DkgParams& params,
                    const SolveConfig& config, int n_iter);

}  // namespace dkglab
