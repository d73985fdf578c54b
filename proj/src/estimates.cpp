#include "dkglab/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dkglab/norms.hpp"

namespace dkglab {

Distribution distribution_from_string(const std::string& name) {
  if (name == "gaussian-modes") return Distribution::gaussian_modes;
  if (name == "band-limited") return Distribution::band_limited;
  if (name == "single-mode") return Distribution::single_mode;
  throw std::invalid_argument("unknown distribution: " + name);
}

const char* distribution_name(Distribution d) {
  switch (d) {
    case Distribution::gaussian_modes: return "gaussian-modes";
    case Distribution::band_limited: return "band-limited";
    case Distribution::single_mode: return "single-mode";
  }
  return "?";
}

void validate(const EnsembleSpec& spec) {
  if (spec.count < 1) throw std::invalid_argument("EnsembleSpec: count must be >= 1");
  if (spec.bandwidth < 1) throw std::invalid_argument("EnsembleSpec: bandwidth must be >= 1");
}

ComplexScalarField random_field(const GridSpec& g, Rng& rng, Distribution dist,
                                int bandwidth) {
  ComplexScalarField f = make_field(g, Rep::spectral);
  if (dist == Distribution::single_mode) {
    int k = static_cast<int>(std::floor(rng.uniform(-bandwidth, bandwidth + 1)));
    k = std::clamp(k, -g.N / 2, g.N / 2 - 1);
    f.values[g.slot_of_k(k)] = rng.gaussian_complex();
    return f;
  }
  const int bw = dist == Distribution::band_limited ? std::min(bandwidth, g.N / 2 - 1)
                                                    : g.N / 2 - 1;
  for (int i = 0; i < g.N; ++i) {
    int k = g.k_of_slot(i);
    if (std::abs(k) > bw) continue;
    f.values[i] = rng.gaussian_complex() / angle_bracket(g.xi_of_k(k));
  }
  return f;
}

SpaceTimeSpectrum random_spacetime(const GridSpec& g, int nt, double Tw, Rng& rng,
                                   Distribution dist, int bandwidth) {
  SpaceTimeSpectrum spec;
  spec.grid = g;
  spec.nt = nt;
  spec.Tw = Tw;
  spec.taper = Taper::none;
  spec.coeffs.assign(static_cast<std::size_t>(g.N) * nt, cplx{0.0, 0.0});

  if (dist == Distribution::single_mode) {
    int k = std::clamp(static_cast<int>(std::floor(rng.uniform(-bandwidth, bandwidth + 1))),
                       -g.N / 2, g.N / 2 - 1);
    int j = std::clamp(static_cast<int>(std::floor(rng.uniform(-bandwidth, bandwidth + 1))),
                       -nt / 2, nt / 2 - 1);
    spec.at(g.slot_of_k(k), j + nt / 2) = rng.gaussian_complex();
    return spec;
  }
  const int bwx = dist == Distribution::band_limited ? std::min(bandwidth, g.N / 2 - 1)
                                                     : g.N / 2 - 1;
  const int bwt = dist == Distribution::band_limited ? std::min(bandwidth, nt / 2 - 1)
                                                     : nt / 2 - 1;
  for (int i = 0; i < g.N; ++i) {
    int k = g.k_of_slot(i);
    if (std::abs(k) > bwx) continue;
    double wx = 1.0 / angle_bracket(g.xi_of_k(k));
    for (int j = 0; j < nt; ++j) {
      int jj = j - nt / 2;
      if (std::abs(jj) > bwt) continue;
      spec.at(i, j) = rng.gaussian_complex() * wx / angle_bracket(spec.tau_slot(j));
    }
  }
  return spec;
}

nlohmann::json RatioReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["sup_ratio"] = sup_ratio;
  j["violations"] = violations;
  j["max_violation"] = max_violation;
  nlohmann::json per = nlohmann::json::array();
  for (const auto& [n, ratio] : per_resolution) per.push_back({{"N", n}, {"sup_ratio", ratio}});
  j["per_resolution"] = per;
  j["metadata"] = metadata;
  return j;
}

RatioReport check_modulation_inequality(const EnsembleSpec& spec, double range) {
  validate(spec);
  Rng rng(spec.seed);
  RatioReport report;
  report.name = "modulation-inequality";

  double min_slack = std::numeric_limits<double>::infinity();
  double max_slack = 0.0;
  nlohmann::json witness;
  for (long trial = 0; trial < spec.count; ++trial) {
    double xi1 = rng.uniform(-range, range), tau1 = rng.uniform(-range, range);
    double xi2 = rng.uniform(-range, range), tau2 = rng.uniform(-range, range);
    ModulationTriple m = modulation_triple(xi1, tau1, xi2, tau2);
    double lhs = std::min(std::abs(xi1), std::abs(xi2));
    for (double sigma_pm : {m.sigma_plus, m.sigma_minus}) {
      double rhs = 0.5 * (std::abs(sigma_pm) + std::abs(m.sigma1_plus) +
                          std::abs(m.sigma2_minus));
      double slack = rhs - lhs;
      double tol = 1e-12 * (1.0 + std::abs(rhs));
      if (slack < -tol) {
        ++report.violations;
        report.max_violation = std::max(report.max_violation, -slack);
        if (witness.is_null()) {
          witness = {{"xi1", xi1}, {"tau1", tau1}, {"xi2", xi2}, {"tau2", tau2},
                     {"lhs", lhs}, {"rhs", rhs}};
        }
      }
      min_slack = std::min(min_slack, slack);
      max_slack = std::max(max_slack, slack);
      if (rhs > 0.0) report.sup_ratio = std::max(report.sup_ratio, lhs / rhs);
    }
  }
  report.metadata = {{"count", spec.count}, {"range", range},      {"seed", spec.seed},
                     {"min_slack", min_slack}, {"max_slack", max_slack}};
  if (!witness.is_null()) report.metadata["witness"] = witness;
  return report;
}

RatioReport check_modulation_inequality_exhaustive(int half_extent) {
  if (half_extent < 1) throw std::invalid_argument("check_modulation_inequality_exhaustive: extent >= 1");
  RatioReport report;
  report.name = "modulation-inequality-exhaustive";
  double min_slack = std::numeric_limits<double>::infinity();
  long total = 0;
  for (int xi1 = -half_extent; xi1 <= half_extent; ++xi1)
    for (int tau1 = -half_extent; tau1 <= half_extent; ++tau1)
      for (int xi2 = -half_extent; xi2 <= half_extent; ++xi2)
        for (int tau2 = -half_extent; tau2 <= half_extent; ++tau2) {
          ModulationTriple m = modulation_triple(xi1, tau1, xi2, tau2);
          double lhs = std::min(std::abs(xi1), std::abs(xi2));
          for (double sp : {m.sigma_plus, m.sigma_minus}) {
            double rhs = 0.5 * (std::abs(sp) + std::abs(m.sigma1_plus) +
                                std::abs(m.sigma2_minus));
            double slack = rhs - lhs;
            if (slack < 0.0) {
              ++report.violations;
              report.max_violation = std::max(report.max_violation, -slack);
            }
            min_slack = std::min(min_slack, slack);
            if (rhs > 0.0) report.sup_ratio = std::max(report.sup_ratio, lhs / rhs);
          }
          ++total;
        }
  report.metadata = {{"half_extent", half_extent}, {"tuples", total}, {"min_slack", min_slack}};
  return report;
}

namespace {

int support_bandwidth(const ComplexScalarField& f) {
  int bw = 0;
  for (int i = 0; i < f.grid.N; ++i) {
    if (std::abs(f.values[i]) > 0.0) bw = std::max(bw, std::abs(f.grid.k_of_slot(i)));
  }
  return bw;
}

}  // namespace

FreeWaveProductReport check_free_wave_product(const ComplexScalarField& f,
                                              const ComplexScalarField& g,
                                              double p) {
  require_same_grid(f.grid, g.grid, "check_free_wave_product");
  require_rep(f, Rep::spectral, "check_free_wave_product");
  require_rep(g, Rep::spectral, "check_free_wave_product");
  const GridSpec& grid = f.grid;
  const int N = grid.N;
  const int band = N / 4;
  if (support_bandwidth(f) > band || support_bandwidth(g) > band) {
    throw std::invalid_argument("check_free_wave_product: inputs must be band-limited to N/4");
  }

  // Tw = L makes the time frequency lattice coincide with the space one, so
  // the traveling-wave characteristics land exactly on grid points.
  const int nt = N;
  const double Tw = grid.L;
  const double dt = Tw / nt;
  std::vector<cplx> samples(static_cast<std::size_t>(N) * nt);
  for (int l = 0; l < nt; ++l) {
    double t = l * dt;
    ComplexScalarField u = to_physical(apply_multiplier(
        f, [&](double xi) { return std::polar(1.0, -xi * t); }));
    ComplexScalarField v = to_physical(apply_multiplier(
        g, [&](double xi) { return std::polar(1.0, +xi * t); }));
    for (int j = 0; j < N; ++j) {
      samples[static_cast<std::size_t>(j) * nt + l] = u.values[j] * v.values[j];
    }
  }
  SpaceTimeSpectrum W = spacetime_spectrum(grid, samples, nt, Tw, Taper::none);

  auto coeff = [&](const ComplexScalarField& h, int k) -> cplx {
    if (std::abs(k) > band) return {0.0, 0.0};
    return h.values[grid.slot_of_k(k)];
  };

  // Expected transform: fhat((n-m)/2) ghat((n+m)/2) on the even-parity
  // sublattice, plus the wrapped image when n or m sits on the -N/2 edge
  // (mode pairs at exactly |k| = N/4 can fold there).
  double max_err = 0.0, max_mag = 0.0;
  for (int i = 0; i < N; ++i) {
    int n = grid.k_of_slot(i);
    for (int j = 0; j < nt; ++j) {
      int m = j - nt / 2;
      cplx expected{0.0, 0.0};
      if ((n - m) % 2 == 0) {
        expected += coeff(f, (n - m) / 2) * coeff(g, (n + m) / 2);
      }
      if (n == -N / 2 && (N / 2 - m) % 2 == 0) {
        expected += coeff(f, (N / 2 - m) / 2) * coeff(g, (N / 2 + m) / 2);
      }
      if (m == -nt / 2 && (n - N / 2) % 2 == 0) {
        expected += coeff(f, (n - N / 2) / 2) * coeff(g, (n + N / 2) / 2);
      }
      max_mag = std::max(max_mag, std::abs(expected));
      max_err = std::max(max_err, std::abs(W.at(i, j) - expected));
    }
  }

  FreeWaveProductReport out;
  out.max_rel_error = max_mag > 0.0 ? max_err / max_mag : 0.0;
  NormSpec ns{0.0, p};
  double denom = hsp_norm(f, ns) * hsp_norm(g, ns);
  PhaseSpec flat{PhaseKind::line, Sign::plus, 0.0, 0.0, p};
  out.hat_ratio = denom > 0.0 ? xsb_norm(W, flat) / denom : 0.0;
  return out;
}

RatioReport check_free_wave_product_ensemble(int N, const EnsembleSpec& spec, double p) {
  validate(spec);
  GridSpec grid = make_grid(N, 2.0 * M_PI);
  RatioReport report;
  report.name = "free-wave-product";
  double max_err = 0.0;
  for (int trial = 0; trial < spec.count; ++trial) {
    Rng rng(Rng::derive(spec.seed, trial));
    int bw = std::min(spec.bandwidth, N / 4);
    ComplexScalarField f = random_field(grid, rng, spec.dist, bw);
    ComplexScalarField g = random_field(grid, rng, spec.dist, bw);
    FreeWaveProductReport r = check_free_wave_product(f, g, p);
    max_err = std::max(max_err, r.max_rel_error);
    report.sup_ratio = std::max(report.sup_ratio, r.hat_ratio);
    if (r.max_rel_error > 1e-10) {
      ++report.violations;
      report.max_violation = std::max(report.max_violation, r.max_rel_error);
    }
  }
  report.per_resolution.push_back({N, report.sup_ratio});
  report.metadata = {{"N", N},      {"p", p},          {"seed", spec.seed},
                     {"count", spec.count}, {"max_rel_error", max_err},
                     {"distribution", distribution_name(spec.dist)}};
  return report;
}

RatioReport check_null_structure(const EnsembleSpec& spec, int N, double L) {
  validate(spec);
  GridSpec grid = make_grid(N, L);
  RatioReport report;
  report.name = "null-structure";
  double worst = 0.0;
  for (int trial = 0; trial < spec.count; ++trial) {
    Rng rng(Rng::derive(spec.seed, trial));
    SpinorField psi{to_physical(random_field(grid, rng, spec.dist, spec.bandwidth)),
                    to_physical(random_field(grid, rng, spec.dist, spec.bandwidth))};
    SpinorField psi_prime{to_physical(random_field(grid, rng, spec.dist, spec.bandwidth)),
                          to_physical(random_field(grid, rng, spec.dist, spec.bandwidth))};
    NullComponents nc = null_components(psi, psi_prime);
    double scale = max_abs(psi) * max_abs(psi_prime);
    if (scale == 0.0) continue;
    double resid = std::max(max_abs(nc.pp), max_abs(nc.mm)) / scale;
    worst = std::max(worst, resid);
    if (resid > 1e-12) {
      ++report.violations;
      report.max_violation = std::max(report.max_violation, resid);
    }
  }
  report.sup_ratio = worst;
  report.per_resolution.push_back({N, worst});
  report.metadata = {{"N", N}, {"count", spec.count}, {"seed", spec.seed},
                     {"max_relative_residual", worst}};
  return report;
}

const char* bilinear_name(BilinearEstimate which) {
  switch (which) {
    case BilinearEstimate::dirac_pm: return "dirac+-";
    case BilinearEstimate::dirac_mp: return "dirac-+";
    case BilinearEstimate::wave_pm: return "wave+-";
    case BilinearEstimate::wave_mp: return "wave-+";
  }
  return "?";
}

BilinearEstimate bilinear_from_string(const std::string& name) {
  if (name == "dirac+-") return BilinearEstimate::dirac_pm;
  if (name == "dirac-+") return BilinearEstimate::dirac_mp;
  if (name == "wave+-") return BilinearEstimate::wave_pm;
  if (name == "wave-+") return BilinearEstimate::wave_mp;
  throw std::invalid_argument("unknown bilinear estimate: " + name);
}

namespace {

struct SpacetimeSpinor {
  SpaceTimeSpectrum up, lo;
};

SpacetimeSpinor project_st(const SpacetimeSpinor& psi, Sign s) {
  SpacetimeSpinor out = psi;
  const double o = 0.5 * sgn(s);
  for (std::size_t i = 0; i < psi.up.coeffs.size(); ++i) {
    cplx u = psi.up.coeffs[i], l = psi.lo.coeffs[i];
    out.up.coeffs[i] = 0.5 * u + o * l;
    out.lo.coeffs[i] = o * u + 0.5 * l;
  }
  return out;
}

double xsb_norm_spinor(const SpacetimeSpinor& psi, const PhaseSpec& phase) {
  double accum = xsb_accum(psi.up, phase) + xsb_accum(psi.lo, phase);
  return std::pow(accum, (phase.p - 1.0) / phase.p);
}

// <beta a, b> with a, b given spectrally: inverse-transform, multiply
// pointwise, transform back.
SpaceTimeSpectrum beta_pair_spectrum(const SpacetimeSpinor& a, const SpacetimeSpinor& b) {
  std::vector<cplx> au = spacetime_samples(a.up), al = spacetime_samples(a.lo);
  std::vector<cplx> bu = spacetime_samples(b.up), bl = spacetime_samples(b.lo);
  std::vector<cplx> prod(au.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    prod[i] = std::conj(bu[i]) * au[i] - std::conj(bl[i]) * al[i];
  }
  return spacetime_spectrum(a.up.grid, prod, a.up.nt, a.up.Tw, Taper::none);
}

// Shared sweep scaffolding: per resolution, sup of trial_fn over the
// ensemble; overall sup and per-resolution table land in the report.
template <typename TrialFn>
RatioReport ratio_sweep(const std::string& name, const EnsembleSpec& spec,
                        const std::vector<int>& resolutions, TrialFn&& trial_fn) {
  RatioReport report;
  report.name = name;
  for (int N : resolutions) {
    double sup = 0.0;
    for (int trial = 0; trial < spec.count; ++trial) {
      Rng rng(Rng::derive(spec.seed, static_cast<std::uint64_t>(N) * 1000003ull + trial));
      sup = std::max(sup, trial_fn(N, rng));
    }
    report.per_resolution.push_back({N, sup});
    report.sup_ratio = std::max(report.sup_ratio, sup);
  }
  return report;
}

double growth_factor(const std::vector<std::pair<int, double>>& per_resolution) {
  double worst = 0.0;
  for (std::size_t i = 1; i < per_resolution.size(); ++i) {
    if (per_resolution[i - 1].second > 0.0) {
      worst = std::max(worst, per_resolution[i].second / per_resolution[i - 1].second);
    }
  }
  return worst;
}

}  // namespace

RatioReport estimate_bilinear_constant(BilinearEstimate which, const BilinearParams& params,
                                       const EnsembleSpec& spec,
                                       const std::vector<int>& resolutions) {
  validate(spec);
  const bool first_plus = which == BilinearEstimate::dirac_pm || which == BilinearEstimate::wave_pm;
  const bool dual_form = which == BilinearEstimate::dirac_pm || which == BilinearEstimate::dirac_mp;
  const double pc = conjugate_exponent(params.p);

  auto trial = [&](int N, Rng& rng) -> double {
    GridSpec grid = make_grid(N, 2.0 * M_PI);
    int nt = N;
    double Tw = 2.0 * M_PI;
    auto draw = [&]() {
      return random_spacetime(grid, nt, Tw, rng, spec.dist,
                              std::min(spec.bandwidth, N / 2 - 1));
    };
    SpacetimeSpinor psi{draw(), draw()};
    SpacetimeSpinor psi_prime{draw(), draw()};
    Sign sa = first_plus ? Sign::plus : Sign::minus;
    Sign sb = flip(sa);
    psi = project_st(psi, sa);
    psi_prime = project_st(psi_prime, sb);

    SpaceTimeSpectrum form = beta_pair_spectrum(psi, psi_prime);

    double lhs = 0.0;
    for (Sign cone : {Sign::plus, Sign::minus}) {
      PhaseSpec y = dual_form
                        ? PhaseSpec{PhaseKind::cone, cone, -params.r, -params.rho, pc}
                        : PhaseSpec{PhaseKind::cone, cone, params.r - 1.0,
                                    params.rho - 1.0 + params.eps, params.p};
      lhs = std::max(lhs, xsb_norm(form, y));
    }

    PhaseSpec xa{PhaseKind::line, sa, params.s, params.sigma, params.p};
    PhaseSpec xb = dual_form
                       ? PhaseSpec{PhaseKind::line, sb, -params.s,
                                   1.0 - params.sigma - params.eps, pc}
                       : PhaseSpec{PhaseKind::line, sb, params.s, params.sigma, params.p};
    double rhs = xsb_norm_spinor(psi, xa) * xsb_norm_spinor(psi_prime, xb);
    return rhs > 0.0 ? lhs / rhs : 0.0;
  };

  RatioReport report = ratio_sweep(std::string("bilinear-") + bilinear_name(which), spec,
                                   resolutions, trial);

  FeasibilityProblem prob{params.p, params.s, params.r, params.eps};
  ExponentPair pair{params.sigma, params.rho};
  bool admissible = check_main(prob).all() && all_ok(evaluate_conditions(prob, pair));
  report.metadata = {{"estimate", bilinear_name(which)},
                     {"s", params.s},
                     {"r", params.r},
                     {"p", params.p},
                     {"sigma", params.sigma},
                     {"rho", params.rho},
                     {"eps", params.eps},
                     {"seed", spec.seed},
                     {"count", spec.count},
                     {"distribution", distribution_name(spec.dist)},
                     {"admissible", admissible},
                     {"growth_factor", growth_factor(report.per_resolution)}};
  if (!admissible) report.metadata["note"] = "outside admissible region";
  return report;
}

RatioReport check_embeddings(double r_index, const EnsembleSpec& spec,
                             const std::vector<int>& resolutions, double eps) {
  validate(spec);
  if (!(r_index > 1.0) || !std::isfinite(r_index)) {
    throw std::invalid_argument("check_embeddings: need 1 < r < inf");
  }
  const double rc = conjugate_exponent(r_index);
  const double r2 = 2.0 * r_index;
  const double r2c = conjugate_exponent(r2);

  struct Case {
    const char* name;
    double px_conj, qt_conj;  // mixed-norm side (conjugated exponents)
    double l, b;              // X-norm side
  };
  // (inf -> 1 on the transform side); the last row is the two-sided variant
  // with w1 = w2 = 2r, so v1 = v2 = 2r.
  const Case cases[] = {
      {"x_inf_t_r", 1.0, rc, 1.0 / r_index + eps, 0.0},
      {"x_r_t_inf", rc, 1.0, 0.0, 1.0 / r_index + eps},
      {"x_inf_t_inf", 1.0, 1.0, 1.0 / r_index + eps, 1.0 / r_index + eps},
      {"x_2r_t_2r", r2c, r2c, 1.0 / r2 + eps, 1.0 / r2 + eps},
  };

  RatioReport report;
  report.name = "embeddings";
  nlohmann::json detail = nlohmann::json::object();
  for (const Case& c : cases) {
    auto trial = [&](int N, Rng& rng) -> double {
      GridSpec grid = make_grid(N, 2.0 * M_PI);
      SpaceTimeSpectrum u = random_spacetime(grid, N, 2.0 * M_PI, rng, spec.dist,
                                             std::min(spec.bandwidth, N / 2 - 1));
      double lhs = mixed_hat_norm(u, c.px_conj, c.qt_conj);
      PhaseSpec x{PhaseKind::line, Sign::plus, c.l, c.b, r_index};
      double rhs = xsb_norm(u, x);
      return rhs > 0.0 ? lhs / rhs : 0.0;
    };
    RatioReport sub = ratio_sweep(c.name, spec, resolutions, trial);
    nlohmann::json per = nlohmann::json::array();
    for (const auto& [n, v] : sub.per_resolution) per.push_back({{"N", n}, {"sup_ratio", v}});
    detail[c.name] = {{"per_resolution", per},
                      {"growth_factor", growth_factor(sub.per_resolution)}};
    if (report.per_resolution.empty()) {
      report.per_resolution = sub.per_resolution;
    } else {
      for (std::size_t i = 0; i < report.per_resolution.size(); ++i) {
        report.per_resolution[i].second =
            std::max(report.per_resolution[i].second, sub.per_resolution[i].second);
      }
    }
    report.sup_ratio = std::max(report.sup_ratio, sub.sup_ratio);
  }
  report.metadata = {{"r", r_index},       {"eps", eps},   {"seed", spec.seed},
                     {"count", spec.count}, {"cases", detail},
                     {"distribution", distribution_name(spec.dist)}};
  return report;
}

RatioReport check_crossing_product(double sigma, double p, const EnsembleSpec& spec,
                              const std::vector<int>& resolutions) {
  validate(spec);
  if (!(p > 1.0)) throw std::invalid_argument("check_crossing_product: need p > 1");
  if (!(sigma > 1.0 / p)) {
    throw std::invalid_argument("check_crossing_product: need sigma > 1/p");
  }

  auto trial = [&](int N, Rng& rng) -> double {
    GridSpec grid = make_grid(N, 2.0 * M_PI);
    int nt = N;
    double Tw = 2.0 * M_PI;
    int bw = std::min(spec.bandwidth, N / 2 - 1);
    SpaceTimeSpectrum u = random_spacetime(grid, nt, Tw, rng, spec.dist, bw);
    SpaceTimeSpectrum v = random_spacetime(grid, nt, Tw, rng, spec.dist, bw);
    std::vector<cplx> us = spacetime_samples(u), vs = spacetime_samples(v);
    for (std::size_t i = 0; i < us.size(); ++i) us[i] *= vs[i];
    SpaceTimeSpectrum w = spacetime_spectrum(grid, us, nt, Tw, Taper::none);

    PhaseSpec flat{PhaseKind::line, Sign::plus, 0.0, 0.0, p};
    PhaseSpec xp{PhaseKind::line, Sign::plus, 0.0, sigma, p};
    PhaseSpec xm{PhaseKind::line, Sign::minus, 0.0, sigma, p};
    double rhs = xsb_norm(u, xp) * xsb_norm(v, xm);
    return rhs > 0.0 ? xsb_norm(w, flat) / rhs : 0.0;
  };

  RatioReport report = ratio_sweep("crossing-product", spec, resolutions, trial);
  report.metadata = {{"sigma", sigma}, {"p", p},  {"seed", spec.seed},
                     {"count", spec.count}, {"distribution", distribution_name(spec.dist)},
                     {"growth_factor", growth_factor(report.per_resolution)}};
  return report;
}

bool ProductLawParams::admissible() const {
  double bound = 1.0 / p + 1.0 / q + (1.0 - 1.0 / r) - 1.0;
  return a + b + c > bound && a + b >= 0.0 && a + c >= 0.0 && b + c >= 0.0 &&
         alpha >= 0.0 && beta >= 0.0 && gamma >= 0.0 && alpha + beta + gamma > bound;
}

RatioReport check_product_law(const ProductLawParams& params, const EnsembleSpec& spec,
                              const std::vector<int>& resolutions) {
  validate(spec);
  auto trial = [&](int N, Rng& rng) -> double {
    GridSpec grid = make_grid(N, 2.0 * M_PI);
    int nt = N;
    double Tw = 2.0 * M_PI;
    int bw = std::min(spec.bandwidth, N / 2 - 1);
    SpaceTimeSpectrum u = random_spacetime(grid, nt, Tw, rng, spec.dist, bw);
    SpaceTimeSpectrum v = random_spacetime(grid, nt, Tw, rng, spec.dist, bw);
    std::vector<cplx> us = spacetime_samples(u), vs = spacetime_samples(v);
    for (std::size_t i = 0; i < us.size(); ++i) us[i] *= vs[i];
    SpaceTimeSpectrum w = spacetime_spectrum(grid, us, nt, Tw, Taper::none);

    PhaseSpec lhs_spec{PhaseKind::cone, params.cone_sign, -params.c, -params.gamma, params.r};
    PhaseSpec ua{PhaseKind::line, Sign::plus, params.a, params.alpha, params.p};
    PhaseSpec vb{PhaseKind::line, Sign::minus, params.b, params.beta, params.q};
    double rhs = xsb_norm(u, ua) * xsb_norm(v, vb);
    return rhs > 0.0 ? xsb_norm(w, lhs_spec) / rhs : 0.0;
  };

  RatioReport report = ratio_sweep("product-law", spec, resolutions, trial);
  report.metadata = {{"a", params.a},         {"b", params.b},       {"c", params.c},
                     {"alpha", params.alpha}, {"beta", params.beta}, {"gamma", params.gamma},
                     {"p", params.p},         {"q", params.q},       {"r", params.r},
                     {"admissible", params.admissible()},
                     {"seed", spec.seed},     {"count", spec.count},
                     {"growth_factor", growth_factor(report.per_resolution)}};
  return report;
}

}  // namespace dkglab
