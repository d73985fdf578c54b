#include "dkglab/evolution.hpp"

#include <cmath>
#include <stdexcept>

#include "dkglab/norms.hpp"

namespace dkglab {

int SolveConfig::steps() const {
  double ratio = T / dt;
  int n = static_cast<int>(std::llround(ratio));
  if (n < 1 || std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio)) {
    throw std::invalid_argument("SolveConfig: T/dt must be a positive integer");
  }
  return n;
}

void validate(const SolveConfig& config) {
  if (!(config.dt > 0.0) || !(config.T >= config.dt)) {
    throw std::invalid_argument("SolveConfig: need 0 < dt <= T");
  }
  (void)config.steps();
}

namespace {

std::vector<cplx> dirac_symbol(const GridSpec& g, double t, Sign s) {
  std::vector<cplx> sym(g.N);
  for (int i = 0; i < g.N; ++i) {
    sym[i] = std::polar(1.0, -sgn(s) * t * g.xi_slot(i));
  }
  return sym;
}

std::vector<cplx> kg_symbol(const GridSpec& g, double t, Sign s) {
  std::vector<cplx> sym(g.N);
  for (int i = 0; i < g.N; ++i) {
    sym[i] = std::polar(1.0, -sgn(s) * t * angle_bracket(g.xi_slot(i)));
  }
  return sym;
}

// 2/3-rule mask: keep |k| <= N/3, zero the rest. Masking both the factors
// and the product removes every aliased image of a quadratic term.
std::vector<cplx> dealias_mask(const GridSpec& g) {
  std::vector<cplx> mask(g.N);
  int keep = g.N / 3;
  for (int i = 0; i < g.N; ++i) {
    mask[i] = std::abs(g.k_of_slot(i)) <= keep ? 1.0 : 0.0;
  }
  return mask;
}

struct StateOps {
  static HalfWaveState add(const HalfWaveState& a, const HalfWaveState& b) {
    HalfWaveState out = a;
    out.psi_plus = dkglab::add(a.psi_plus, b.psi_plus);
    out.psi_minus = dkglab::add(a.psi_minus, b.psi_minus);
    out.phi_plus = dkglab::add(a.phi_plus, b.phi_plus);
    out.phi_minus = dkglab::add(a.phi_minus, b.phi_minus);
    return out;
  }
  static HalfWaveState scale(const HalfWaveState& a, cplx c) {
    HalfWaveState out = a;
    out.psi_plus = dkglab::scale(a.psi_plus, c);
    out.psi_minus = dkglab::scale(a.psi_minus, c);
    out.phi_plus = dkglab::scale(a.phi_plus, c);
    out.phi_minus = dkglab::scale(a.phi_minus, c);
    return out;
  }
  static HalfWaveState axpy(const HalfWaveState& a, cplx c, const HalfWaveState& b) {
    return add(a, scale(b, c));
  }
};

// Cached per-(grid, dt) propagator symbols for one substep size.
struct PropagatorSet {
  std::vector<cplx> psi_p, psi_m, phi_p, phi_m;

  PropagatorSet(const GridSpec& g, double t)
      : psi_p(dirac_symbol(g, t, Sign::plus)),
        psi_m(dirac_symbol(g, t, Sign::minus)),
        phi_p(kg_symbol(g, t, Sign::plus)),
        phi_m(kg_symbol(g, t, Sign::minus)) {}

  HalfWaveState apply(const HalfWaveState& s) const {
    HalfWaveState out = s;
    out.psi_plus = apply_multiplier(s.psi_plus, psi_p);
    out.psi_minus = apply_multiplier(s.psi_minus, psi_m);
    out.phi_plus = apply_multiplier(s.phi_plus, phi_p);
    out.phi_minus = apply_multiplier(s.phi_minus, phi_m);
    return out;
  }
};

bool all_finite(const HalfWaveState& s) {
  auto ok = [](const ComplexScalarField& f) {
    for (const auto& c : f.values) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
  };
  return ok(s.psi_plus.up) && ok(s.psi_plus.lo) && ok(s.psi_minus.up) &&
         ok(s.psi_minus.lo) && ok(s.phi_plus) && ok(s.phi_minus);
}

}  // namespace

SpinorField free_dirac(const SpinorField& psi, double t, Sign s) {
  return apply_multiplier(psi, dirac_symbol(psi.grid(), t, s));
}

ComplexScalarField free_kg(const ComplexScalarField& phi, double t, Sign s) {
  require_rep(phi, Rep::spectral, "free_kg");
  return apply_multiplier(phi, kg_symbol(phi.grid, t, s));
}

HalfWaveState free_flow(const HalfWaveState& state, double t) {
  HalfWaveState out = state;
  out.t = state.t + t;
  out.psi_plus = free_dirac(state.psi_plus, t, Sign::plus);
  out.psi_minus = free_dirac(state.psi_minus, t, Sign::minus);
  out.phi_plus = free_kg(state.phi_plus, t, Sign::plus);
  out.phi_minus = free_kg(state.phi_minus, t, Sign::minus);
  return out;
}

HalfWaveState nonlinear_rhs(const HalfWaveState& state, const DkgParams& params,
                            bool dealias) {
  const GridSpec& g = state.grid();
  std::vector<cplx> mask;
  if (dealias) mask = dealias_mask(g);
  auto masked = [&](const ComplexScalarField& f) {
    return dealias ? apply_multiplier(f, mask) : f;
  };

  // Assemble psi = psi_+ + psi_- and phi = (phi_+ + phi_-)/2 in physical
  // space (masked copies feed the quadratic products).
  SpinorField psi_hat = add(state.psi_plus, state.psi_minus);
  SpinorField psi_phys{to_physical(masked(psi_hat.up)), to_physical(masked(psi_hat.lo))};
  ComplexScalarField phi_hat = scale(add(state.phi_plus, state.phi_minus), 0.5);
  ComplexScalarField phi_phys = to_physical(masked(phi_hat));

  // g P_pm(phi beta psi): product in physical space, projection afterwards.
  SpinorField beta_psi{psi_phys.up, scale(psi_phys.lo, -1.0)};
  SpinorField coupling{masked(to_spectral(pointwise(phi_phys, beta_psi.up))),
                       masked(to_spectral(pointwise(phi_phys, beta_psi.lo)))};

  // <beta psi, psi> + c0 phi  (the c0 term stays spectral: it is linear).
  ComplexScalarField source = masked(to_spectral(beta_form(psi_phys, psi_phys)));
  if (params.c0() != 0.0) source = add(source, scale(phi_hat, params.c0()));
  ComplexScalarField source_half = apply_multiplier(source, inv_sqrt_a_symbol(g));

  const cplx i_unit{0.0, 1.0};
  HalfWaveState out = state;
  for (Sign s : {Sign::plus, Sign::minus}) {
    const SpinorField& psi_other = (s == Sign::plus) ? state.psi_minus : state.psi_plus;
    // -i M beta psi_mp + i g P_pm(phi beta psi)
    SpinorField term = project(coupling, s);
    term = scale(term, i_unit * params.g);
    SpinorField mass_term{scale(psi_other.up, -i_unit * params.M),
                          scale(psi_other.lo, i_unit * params.M)};
    SpinorField dpsi = add(term, mass_term);
    // pm i A^{-1/2} (<beta psi, psi> + c0 phi)
    ComplexScalarField dphi = scale(source_half, i_unit * static_cast<double>(sgn(s)));
    if (s == Sign::plus) {
      out.psi_plus = dpsi;
      out.phi_plus = dphi;
    } else {
      out.psi_minus = dpsi;
      out.phi_minus = dphi;
    }
  }
  return out;
}

HalfWaveState rhs(const HalfWaveState& state, const DkgParams& params, bool dealias) {
  const GridSpec& g = state.grid();
  HalfWaveState out = nonlinear_rhs(state, params, dealias);

  std::vector<cplx> dpsi_p(g.N), dpsi_m(g.N), dphi_p(g.N), dphi_m(g.N);
  for (int i = 0; i < g.N; ++i) {
    const cplx i_xi{0.0, g.xi_slot(i)};
    const cplx i_br{0.0, angle_bracket(g.xi_slot(i))};
    dpsi_p[i] = -i_xi;  // mp d/dx in Fourier
    dpsi_m[i] = +i_xi;
    dphi_p[i] = -i_br;  // mp i A^{1/2}
    dphi_m[i] = +i_br;
  }
  out.psi_plus = add(out.psi_plus, apply_multiplier(state.psi_plus, dpsi_p));
  out.psi_minus = add(out.psi_minus, apply_multiplier(state.psi_minus, dpsi_m));
  out.phi_plus = add(out.phi_plus, apply_multiplier(state.phi_plus, dphi_p));
  out.phi_minus = add(out.phi_minus, apply_multiplier(state.phi_minus, dphi_m));
  return out;
}

Diagnostics diagnostics_of(const HalfWaveState& state, const DkgParams& params) {
  Diagnostics d;
  d.t = state.t;
  SpinorField psi = add(state.psi_plus, state.psi_minus);
  double n = l2_norm(psi);
  d.charge = n * n;

  CauchyData data = reconstruct(state);
  const GridSpec& g = state.grid();
  double e = 0.0;
  for (int i = 0; i < g.N; ++i) {
    double xi = g.xi_slot(i);
    e += (xi * xi + params.m * params.m) * std::norm(data.phi.values[i]) +
         std::norm(data.phi_t.values[i]);
  }
  d.phi_energy = 0.5 * e * g.dxi();

  d.max_coeff = std::max({max_abs(state.psi_plus), max_abs(state.psi_minus),
                          max_abs(state.phi_plus), max_abs(state.phi_minus)});
  return d;
}

namespace {

HalfWaveState step_exponential_rk4(const HalfWaveState& u, const DkgParams& params,
                                   bool dealias, double dt, const PropagatorSet& E,
                                   const PropagatorSet& E2) {
  auto N = [&](const HalfWaveState& s) { return nonlinear_rhs(s, params, dealias); };
  HalfWaveState a = N(u);
  HalfWaveState b = N(E2.apply(StateOps::axpy(u, 0.5 * dt, a)));
  HalfWaveState c = N(StateOps::axpy(E2.apply(u), 0.5 * dt, b));
  HalfWaveState d = N(StateOps::axpy(E.apply(u), dt, E2.apply(c)));

  HalfWaveState acc = E.apply(a);
  acc = StateOps::axpy(acc, 2.0, E2.apply(StateOps::add(b, c)));
  acc = StateOps::add(acc, d);
  HalfWaveState out = StateOps::axpy(E.apply(u), dt / 6.0, acc);
  out.t = u.t + dt;
  return out;
}

HalfWaveState step_strang(const HalfWaveState& u, const DkgParams& params,
                          bool dealias, double dt, const PropagatorSet& E2) {
  auto N = [&](const HalfWaveState& s) { return nonlinear_rhs(s, params, dealias); };
  HalfWaveState h = E2.apply(u);
  HalfWaveState mid = StateOps::axpy(h, 0.5 * dt, N(h));
  HalfWaveState full = StateOps::axpy(h, dt, N(mid));
  HalfWaveState out = E2.apply(full);
  out.t = u.t + dt;
  return out;
}

}  // namespace

Trajectory solve(const HalfWaveState& initial, const DkgParams& params,
                 const SolveConfig& config) {
  validate(config);
  validate(params);
  const int n = config.steps();
  const GridSpec& g = initial.grid();
  PropagatorSet E(g, config.dt), E2(g, config.dt / 2.0);

  Trajectory traj;
  traj.config = config;
  traj.params = params;
  traj.states.reserve(n + 1);
  traj.states.push_back(initial);
  traj.states.front().t = 0.0;
  traj.diagnostics.push_back(diagnostics_of(initial, params));
  traj.last_valid_time = 0.0;

  for (int step = 0; step < n; ++step) {
    const HalfWaveState& u = traj.states.back();
    HalfWaveState next = config.scheme == Scheme::exponential_rk4
                             ? step_exponential_rk4(u, params, config.dealias, config.dt, E, E2)
                             : step_strang(u, params, config.dealias, config.dt, E2);
    next.t = (step + 1) * config.dt;
    if (!all_finite(next)) {
      traj.blew_up = true;
      break;
    }
    traj.states.push_back(std::move(next));
    traj.diagnostics.push_back(diagnostics_of(traj.states.back(), params));
    traj.last_valid_time = traj.states.back().t;
  }
  return traj;
}

namespace {

// Composite 4th-order weights for int_0^{j h} f ds on nodes 0..max(j,3).
// Even j: Simpson. Odd j >= 3: Simpson up to j-3, then the 3/8 rule.
// j == 1: cubic through nodes 0..3 integrated over the first interval.
std::vector<double> duhamel_weights(int j, double h) {
  if (j == 0) return {};
  if (j == 1) {
    return {9.0 * h / 24.0, 19.0 * h / 24.0, -5.0 * h / 24.0, 1.0 * h / 24.0};
  }
  std::vector<double> w;
  int simpson_end = (j % 2 == 0) ? j : j - 3;
  w.assign(std::max(j, simpson_end) + 1, 0.0);
  for (int i = 0; i + 2 <= simpson_end; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  if (j % 2 == 1) {
    w[j - 3] += 3.0 * h / 8.0;
    w[j - 2] += 9.0 * h / 8.0;
    w[j - 1] += 9.0 * h / 8.0;
    w[j] += 3.0 * h / 8.0;
  }
  return w;
}

}  // namespace

PicardResult picard(const HalfWaveState& initial, const DkgParams& params,
                    const SolveConfig& config, int n_iter) {
  validate(config);
  validate(params);
  if (n_iter < 0) throw std::invalid_argument("picard: n_iter must be >= 0");
  const int n = config.steps();
  if (n < 4) throw std::invalid_argument("picard: need at least 4 time steps");
  const double h = config.dt;
  const GridSpec& g = initial.grid();

  // Propagators for every lag used by the quadrature, including the
  // short backward lags of the one-sided first-interval rule.
  std::vector<PropagatorSet> lag_prop;
  lag_prop.reserve(n + 4);
  for (int lag = -3; lag <= n; ++lag) lag_prop.emplace_back(g, lag * h);
  auto prop = [&](int lag) -> const PropagatorSet& { return lag_prop[lag + 3]; };

  // Iterate 0: the free solution.
  std::vector<HalfWaveState> current;
  current.reserve(n + 1);
  HalfWaveState init = initial;
  init.t = 0.0;
  for (int j = 0; j <= n; ++j) {
    HalfWaveState s = prop(j).apply(init);
    s.t = j * h;
    current.push_back(std::move(s));
  }

  std::vector<std::vector<double>> weights(n + 1);
  for (int j = 0; j <= n; ++j) weights[j] = duhamel_weights(j, h);

  PicardResult result;
  int growth_run = 0;
  for (int iter = 1; iter <= n_iter; ++iter) {
    std::vector<HalfWaveState> forcing;
    forcing.reserve(n + 1);
    for (int j = 0; j <= n; ++j) {
      forcing.push_back(nonlinear_rhs(current[j], params, config.dealias));
    }

    std::vector<HalfWaveState> next;
    next.reserve(n + 1);
    for (int j = 0; j <= n; ++j) {
      HalfWaveState s = prop(j).apply(init);
      const auto& w = weights[j];
      for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] == 0.0) continue;
        s = StateOps::axpy(s, w[i], prop(j - i).apply(forcing[i]));
      }
      s.t = j * h;
      next.push_back(std::move(s));
    }

    double res = 0.0;
    for (int j = 0; j <= n; ++j) {
      res = std::max(res, state_l2_distance(next[j], current[j]));
    }
    if (!result.residuals.empty() && res > result.residuals.back()) {
      if (++growth_run >= 3) result.diverged = true;
    } else {
      growth_run = 0;
    }
    result.residuals.push_back(res);
    current = std::move(next);
  }

  Trajectory traj;
  traj.config = config;
  traj.params = params;
  traj.states = std::move(current);
  for (const auto& s : traj.states) traj.diagnostics.push_back(diagnostics_of(s, params));
  traj.last_valid_time = traj.states.back().t;
  result.trajectory = std::move(traj);
  return result;
}

}  // namespace dkglab
