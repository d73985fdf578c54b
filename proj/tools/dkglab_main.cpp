// dkglab: batch driver for the half-wave Dirac-Klein-Gordon lab.
//
// Subcommands: simulate, picard, verify, region, norms. Every run writes a
// manifest.json with the full parameter echo and seed; all CSV/JSON output
// is reproducible bit-for-bit from (argv, seed), wall clock aside.
// Exit codes: 0 success, 1 usage/config error, 2 exact-claim violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "dkglab/estimates.hpp"
#include "dkglab/io.hpp"
#include "dkglab/norms.hpp"
#include "dkglab/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dkglab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

std::uint64_t seed_fallback() {
  if (const char* env = std::getenv("DKGLAB_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 1;
}

struct CommonOpts {
  std::string out = "dkglab_out";
  std::uint64_t seed = seed_fallback();
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out, "output directory");
  cmd->add_option("--seed", opts.seed, "RNG seed (env DKGLAB_SEED is the fallback)");
}

HalfWaveState initial_data(const GridSpec& g, const std::string& kind, double amp,
                           std::uint64_t seed, int bandwidth) {
  SpinorField psi0 = make_spinor(g, Rep::physical);
  ComplexScalarField phi0 = make_field(g, Rep::physical);
  ComplexScalarField phi1 = make_field(g, Rep::physical);
  if (kind == "smooth") {
    double k0 = 2.0 * M_PI / g.L;
    for (int j = 0; j < g.N; ++j) {
      double x = g.x(j);
      psi0.up.values[j] = amp * (std::cos(k0 * x) + 0.3 * std::sin(2.0 * k0 * x));
      psi0.lo.values[j] = amp * (0.5 * std::sin(k0 * x) - 0.2 * std::cos(2.0 * k0 * x));
      phi0.values[j] = amp * std::cos(k0 * x);
      phi1.values[j] = amp * 0.4 * std::sin(k0 * x);
    }
  } else if (kind == "random") {
    // real gaussian band-limited data (keeps the reality invariant active)
    Rng rng(seed);
    auto fill = [&](std::vector<cplx>& phys) {
      ComplexScalarField f = random_field(g, rng, Distribution::band_limited, bandwidth);
      ComplexScalarField re = scale(add(f, conj_field(f)), 0.5);
      phys = to_physical(re).values;
    };
    fill(psi0.up.values);
    fill(psi0.lo.values);
    fill(phi0.values);
    fill(phi1.values);
    psi0.up = scale(psi0.up, amp);
    psi0.lo = scale(psi0.lo, amp);
    phi0 = scale(phi0, amp);
    phi1 = scale(phi1, amp);
  } else {
    throw std::invalid_argument("--data must be smooth or random");
  }
  return diagonalize(psi0, phi0, phi1);
}

void write_json(const fs::path& path, const json& j) { io::atomic_write(path, j.dump(2)); }

int run_simulate(const CommonOpts& common, const GridSpec& g, const DkgParams& params,
                 const SolveConfig& config, const std::string& data_kind, double amp,
                 int bandwidth, int stride, const std::string& format) {
  io::SnapshotFormat snap_format;
  if (format == "json") {
    snap_format = io::SnapshotFormat::json;
  } else if (format == "bin") {
    snap_format = io::SnapshotFormat::binary;
  } else {
    throw std::invalid_argument("--snapshot-format must be json or bin");
  }
  HalfWaveState init = initial_data(g, data_kind, amp, common.seed, bandwidth);
  Trajectory traj = solve(init, params, config);

  json echo = {{"N", g.N},     {"L", g.L},         {"T", config.T},
               {"dt", config.dt}, {"g", params.g}, {"M", params.M},
               {"m", params.m},   {"data", data_kind}, {"amp", amp},
               {"dealias", config.dealias},
               {"scheme", config.scheme == Scheme::exponential_rk4 ? "exponential-rk4"
                                                                   : "strang"}};
  echo["snapshot_format"] = format;
  fs::create_directories(common.out);
  io::write_trajectory(traj, common.out, stride,
                       io::run_manifest("simulate", echo, common.seed), snap_format);

  double q0 = std::sqrt(traj.diagnostics.front().charge);
  double drift = 0.0;
  for (const auto& d : traj.diagnostics) {
    drift = std::max(drift, std::abs(std::sqrt(d.charge) - q0) / q0);
  }
  std::cout << "simulate: " << traj.states.size() - 1 << " steps, charge drift "
            << io::format17(drift) << (traj.blew_up ? " [BLOW-UP]" : "") << "\n";
  // a detected blow-up is a reported abort, not a usage or claim failure;
  // consumers read blew_up / last_valid_time from the manifest
  return kExitOk;
}

int run_picard(const CommonOpts& common, const GridSpec& g, const DkgParams& params,
               const SolveConfig& config, const std::string& data_kind, double amp,
               int bandwidth, int iters) {
  HalfWaveState init = initial_data(g, data_kind, amp, common.seed, bandwidth);
  PicardResult res = picard(init, params, config, iters);

  fs::create_directories(common.out);
  json echo = {{"N", g.N}, {"L", g.L}, {"T", config.T}, {"dt", config.dt},
               {"g", params.g}, {"M", params.M}, {"m", params.m},
               {"iters", iters}, {"data", data_kind}, {"amp", amp}};
  json manifest = io::run_manifest("picard", echo, common.seed);
  manifest["diverged"] = res.diverged;
  manifest["residuals"] = res.residuals;
  write_json(fs::path(common.out) / "manifest.json", manifest);

  std::string csv = "# manifest: manifest.json\niteration,residual\n";
  for (std::size_t i = 0; i < res.residuals.size(); ++i) {
    csv += std::to_string(i + 1) + "," + io::format17(res.residuals[i]) + "\n";
  }
  io::atomic_write(fs::path(common.out) / "residuals.csv", csv);

  std::cout << "picard: " << res.residuals.size() << " sweeps";
  if (res.residuals.size() >= 2) {
    std::cout << ", last contraction ratio "
              << io::format17(res.residuals.back() / res.residuals[res.residuals.size() - 2]);
  }
  std::cout << (res.diverged ? " [DIVERGED]" : "") << "\n";
  return kExitOk;
}

struct VerifyOpts {
  std::string suite = "all";
  long ineq_count = 1000000;
  int trials = 6;
  int null_pairs = 1000;
  int product_n = 256;
  std::vector<int> resolutions = {64, 128, 256};
  double s = 0.0, r = 0.5, p = 2.0, sigma = 0.6, rho = 0.6, eps = 0.01;
  double embed_r = 2.0;
  int bandwidth = 16;
  std::string dist = "band-limited";
};

int run_verify(const CommonOpts& common, const VerifyOpts& opts) {
  const bool exact = opts.suite == "exact" || opts.suite == "all";
  const bool statistical = opts.suite == "statistical" || opts.suite == "all";
  if (!exact && !statistical) {
    throw std::invalid_argument("--suite must be exact, statistical or all");
  }

  std::vector<RatioReport> reports;
  long violations = 0;
  auto note = [&](const RatioReport& rep, bool is_exact) {
    violations += is_exact ? rep.violations : 0;
    std::cout << (is_exact ? (rep.violations == 0 ? "PASS " : "FAIL ") : "INFO ")
              << rep.name << ": sup ratio " << io::format17(rep.sup_ratio);
    if (is_exact) std::cout << ", violations " << rep.violations;
    std::cout << "\n";
    reports.push_back(rep);
  };

  if (exact) {
    EnsembleSpec ineq{common.seed, static_cast<int>(opts.ineq_count),
                       Distribution::gaussian_modes, opts.bandwidth};
    note(check_modulation_inequality(ineq), true);
    note(check_modulation_inequality_exhaustive(8), true);
    EnsembleSpec prod{common.seed, opts.trials, Distribution::band_limited, opts.bandwidth};
    note(check_free_wave_product_ensemble(opts.product_n, prod, opts.p), true);
    EnsembleSpec nulls{common.seed, opts.null_pairs,
                       Distribution::gaussian_modes, opts.bandwidth};
    note(check_null_structure(nulls), true);
  }
  if (statistical) {
    EnsembleSpec ens{common.seed, opts.trials, distribution_from_string(opts.dist),
                     opts.bandwidth};
    note(check_embeddings(opts.embed_r, ens, opts.resolutions, opts.eps), false);
    note(check_crossing_product(opts.sigma, opts.p, ens, opts.resolutions), false);
    note(check_product_law(ProductLawParams{}, ens, opts.resolutions), false);
    BilinearParams params{opts.s, opts.r, opts.p, opts.sigma, opts.rho, opts.eps};
    for (BilinearEstimate which : {BilinearEstimate::dirac_pm, BilinearEstimate::dirac_mp,
                                   BilinearEstimate::wave_pm, BilinearEstimate::wave_mp}) {
      note(estimate_bilinear_constant(which, params, ens, opts.resolutions), false);
    }
  }

  fs::create_directories(common.out);
  json echo = {{"suite", opts.suite},   {"trials", opts.trials},
               {"ineq_count", opts.ineq_count}, {"resolutions", opts.resolutions},
               {"s", opts.s},           {"r", opts.r},
               {"p", opts.p},           {"sigma", opts.sigma},
               {"rho", opts.rho},       {"eps", opts.eps},
               {"bandwidth", opts.bandwidth}, {"distribution", opts.dist}};
  json manifest = io::run_manifest("verify", echo, common.seed);
  manifest["violations"] = violations;
  write_json(fs::path(common.out) / "manifest.json", manifest);

  json out = json::array();
  for (const auto& rep : reports) {
    json j = rep.to_json();
    j["manifest"] = "manifest.json";
    out.push_back(j);
  }
  write_json(fs::path(common.out) / "reports.json", out);

  if (violations > 0) {
    std::cout << "verify: " << violations << " exact-claim violation(s)\n";
    return kExitViolation;
  }
  std::cout << "verify: all exact claims hold\n";
  return kExitOk;
}

int run_region(const CommonOpts& common, double p, int resolution, double eps,
               double s_min, double s_max, double r_min, double r_max) {
  fs::create_directories(common.out);
  json echo = {{"p", p},        {"resolution", resolution}, {"eps", eps},
               {"s_min", s_min}, {"s_max", s_max}, {"r_min", r_min}, {"r_max", r_max}};
  json manifest = io::run_manifest("region", echo, common.seed);
  write_json(fs::path(common.out) / "manifest.json", manifest);

  std::string boundary = "# manifest: manifest.json\nsegment,s,r\n";
  for (const auto& seg : region_boundary(p, resolution)) {
    for (const auto& pt : seg.points) {
      boundary += seg.name + "," + io::format17(pt[0]) + "," + io::format17(pt[1]) + "\n";
    }
  }
  io::atomic_write(fs::path(common.out) / "boundary.csv", boundary);

  std::string sweep = "# manifest: manifest.json\ns,r,admissible,sigma,rho\n";
  long admissible_count = 0;
  for (int i = 0; i < resolution; ++i) {
    double s = s_min + (s_max - s_min) * i / (resolution - 1);
    for (int j = 0; j < resolution; ++j) {
      double r = r_min + (r_max - r_min) * j / (resolution - 1);
      FeasibilityProblem prob{p, s, r, eps};
      bool inside = check_main(prob).all();
      std::optional<ExponentPair> pair;
      if (inside) pair = find_sigma_rho(prob);
      admissible_count += inside ? 1 : 0;
      sweep += io::format17(s) + "," + io::format17(r) + "," + (inside ? "1" : "0") + "," +
               (pair ? io::format17(pair->sigma) : "") + "," +
               (pair ? io::format17(pair->rho) : "") + "\n";
    }
  }
  io::atomic_write(fs::path(common.out) / "sweep.csv", sweep);

  ScalingExponents sc = scaling_exponents({p, 0.0, 1.0, eps});
  json summary = {{"manifest", "manifest.json"},
                  {"admissible_points", admissible_count},
                  {"grid_points", static_cast<long>(resolution) * resolution},
                  {"sigma_min", sc.sigma_min},
                  {"lambda_min", sc.lambda_min}};
  write_json(fs::path(common.out) / "summary.json", summary);
  std::cout << "region: " << admissible_count << " admissible grid points\n";
  return kExitOk;
}

int run_norms(const CommonOpts& common, const std::string& traj_dir, double s, double r,
              double sigma, double rho, double p, const std::string& taper_name) {
  Taper taper = taper_name == "bump" ? Taper::bump : Taper::none;
  Trajectory traj = io::load_trajectory(traj_dir);

  json echo = {{"traj", traj_dir}, {"s", s}, {"r", r}, {"sigma", sigma},
               {"rho", rho},       {"p", p}, {"taper", taper_name}};
  json manifest = io::run_manifest("norms", echo, common.seed);

  struct Row {
    Component comp;
    PhaseSpec phase;
  };
  const Row rows[] = {
      {Component::psi_plus_up, {PhaseKind::line, Sign::plus, s, sigma, p}},
      {Component::psi_plus_lo, {PhaseKind::line, Sign::plus, s, sigma, p}},
      {Component::psi_minus_up, {PhaseKind::line, Sign::minus, s, sigma, p}},
      {Component::psi_minus_lo, {PhaseKind::line, Sign::minus, s, sigma, p}},
      {Component::phi_plus, {PhaseKind::cone, Sign::plus, r, rho, p}},
      {Component::phi_minus, {PhaseKind::cone, Sign::minus, r, rho, p}},
  };

  json out = json::array();
  const GridSpec& g = traj.states.front().grid();
  for (const Row& row : rows) {
    SpaceTimeSpectrum spec = spacetime_spectrum(traj, row.comp, taper);
    double value = xsb_norm(spec, row.phase);
    out.push_back({{"manifest", "manifest.json"},
                   {"component", component_name(row.comp)},
                   {"phase", row.phase.kind == PhaseKind::line ? "line" : "cone"},
                   {"sign", sgn(row.phase.sign)},
                   {"l", row.phase.l},
                   {"b", row.phase.b},
                   {"p", row.phase.p},
                   {"value", value},
                   {"grid", {{"N", g.N}, {"L", g.L}, {"nt", spec.nt}, {"Tw", spec.Tw}}},
                   {"taper", taper_name}});
    std::cout << "norm " << component_name(row.comp) << " = " << io::format17(value) << "\n";
  }

  fs::create_directories(common.out);
  write_json(fs::path(common.out) / "manifest.json", manifest);
  write_json(fs::path(common.out) / "norms.json", out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"half-wave Dirac-Klein-Gordon simulator and estimate lab"};
  app.set_version_flag("--version", std::string("dkglab ") + kVersion);
  app.require_subcommand(1);
  // key=value file with one [subcommand] section per command; explicit
  // flags always win over file values
  app.set_config("--config", "", "key=value config file with [subcommand] sections");

  struct SysOpts {
    int N = 256;
    double L = 2.0 * M_PI;
    double T = 1.0, dt = 1e-3;
    double g = 1.0, M = 1.0, m = 1.0;
    std::string scheme = "exponential-rk4";
    bool no_dealias = false;
    std::string data = "smooth";
    double amp = 1.0;
    int bandwidth = 4;
    int stride = 0;
    int iters = 8;
    std::string snapshot_format = "json";
  };

  CommonOpts sim_common, pic_common, ver_common, reg_common, nrm_common;
  SysOpts sim, pic;

  auto add_sys = [](CLI::App* cmd, SysOpts& o) {
    cmd->add_option("--N", o.N, "grid points (power of two)");
    cmd->add_option("--L", o.L, "domain length");
    cmd->add_option("--T", o.T, "final time");
    cmd->add_option("--dt", o.dt, "time step");
    cmd->add_option("--g", o.g, "coupling");
    cmd->add_option("--M", o.M, "Dirac mass");
    cmd->add_option("--m", o.m, "Klein-Gordon mass");
    cmd->add_option("--scheme", o.scheme, "exponential-rk4 | strang");
    cmd->add_flag("--no-dealias", o.no_dealias, "disable the 2/3-rule mask");
    cmd->add_option("--data", o.data, "initial data: smooth | random");
    cmd->add_option("--amp", o.amp, "data amplitude");
    cmd->add_option("--bandwidth", o.bandwidth, "random-data band limit");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "integrate the diagonal system");
  add_sys(simulate, sim);
  simulate->add_option("--stride", sim.stride, "snapshot stride (0 = auto, ~32 snapshots)");
  simulate->add_option("--snapshot-format", sim.snapshot_format, "json | bin");
  add_common(simulate, sim_common);

  CLI::App* picard_cmd = app.add_subcommand("picard", "fixed-point iteration diagnostics");
  pic.T = 0.1;
  pic.dt = 2.5e-3;
  pic.amp = 0.2;
  add_sys(picard_cmd, pic);
  picard_cmd->add_option("--iters", pic.iters, "number of sweeps");
  add_common(picard_cmd, pic_common);

  VerifyOpts ver;
  CLI::App* verify = app.add_subcommand("verify", "exact and statistical estimate checks");
  verify->add_option("--suite", ver.suite, "exact | statistical | all");
  verify->add_option("--ineq-count", ver.ineq_count,
                     "random tuples for the modulation inequality");
  verify->add_option("--trials", ver.trials, "trials per ratio sweep");
  verify->add_option("--null-pairs", ver.null_pairs, "random pairs for the null check");
  verify->add_option("--product-N", ver.product_n, "grid size for the free-wave product");
  verify->add_option("--resolutions", ver.resolutions, "ratio-sweep grid sizes");
  verify->add_option("--s", ver.s);
  verify->add_option("--r", ver.r);
  verify->add_option("--p", ver.p);
  verify->add_option("--sigma", ver.sigma);
  verify->add_option("--rho", ver.rho);
  verify->add_option("--eps", ver.eps);
  verify->add_option("--embed-r", ver.embed_r, "index for the embedding checks");
  verify->add_option("--bandwidth", ver.bandwidth);
  verify->add_option("--dist", ver.dist, "gaussian-modes | band-limited | single-mode");
  add_common(verify, ver_common);

  double reg_p = 2.0, reg_eps = 0.01;
  double reg_smin = -1.0, reg_smax = 2.0, reg_rmin = -0.5, reg_rmax = 2.5;
  int reg_resolution = 200;
  CLI::App* region = app.add_subcommand("region", "admissible-region boundary and sweep");
  region->add_option("--p", reg_p, "Lebesgue index in (1,2]");
  region->add_option("--resolution", reg_resolution);
  region->add_option("--eps", reg_eps);
  region->add_option("--s-min", reg_smin);
  region->add_option("--s-max", reg_smax);
  region->add_option("--r-min", reg_rmin);
  region->add_option("--r-max", reg_rmax);
  add_common(region, reg_common);

  std::string nrm_traj;
  double nrm_s = 0.0, nrm_r = 0.5, nrm_sigma = 0.6, nrm_rho = 0.6, nrm_p = 2.0;
  std::string nrm_taper = "none";
  CLI::App* norms = app.add_subcommand("norms", "modulation norms of a saved trajectory");
  norms->add_option("--traj", nrm_traj, "trajectory directory (from simulate)")->required();
  norms->add_option("--s", nrm_s);
  norms->add_option("--r", nrm_r);
  norms->add_option("--sigma", nrm_sigma);
  norms->add_option("--rho", nrm_rho);
  norms->add_option("--p", nrm_p);
  norms->add_option("--taper", nrm_taper, "none | bump");
  add_common(norms, nrm_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help/error text
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto to_config = [](const SysOpts& o) {
      Scheme scheme;
      if (o.scheme == "exponential-rk4") {
        scheme = Scheme::exponential_rk4;
      } else if (o.scheme == "strang") {
        scheme = Scheme::strang;
      } else {
        throw std::invalid_argument("--scheme must be exponential-rk4 or strang");
      }
      return SolveConfig{o.T, o.dt, scheme, !o.no_dealias};
    };

    if (simulate->parsed()) {
      SolveConfig config = to_config(sim);
      int stride = sim.stride > 0 ? sim.stride : std::max(1, config.steps() / 32);
      return run_simulate(sim_common, make_grid(sim.N, sim.L),
                          DkgParams{sim.M, sim.m, sim.g}, config, sim.data, sim.amp,
                          sim.bandwidth, stride, sim.snapshot_format);
    }
    if (picard_cmd->parsed()) {
      return run_picard(pic_common, make_grid(pic.N, pic.L), DkgParams{pic.M, pic.m, pic.g},
                        to_config(pic), pic.data, pic.amp, pic.bandwidth, pic.iters);
    }
    if (verify->parsed()) return run_verify(ver_common, ver);
    if (region->parsed()) {
      return run_region(reg_common, reg_p, reg_resolution, reg_eps, reg_smin, reg_smax,
                        reg_rmin, reg_rmax);
    }
    if (norms->parsed()) {
      return run_norms(nrm_common, nrm_traj, nrm_s, nrm_r, nrm_sigma, nrm_rho, nrm_p,
                       nrm_taper);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
