#include <doctest.h>

#include <cmath>

#include "dkglab/norms.hpp"
#include "dkglab/rng.hpp"
#include "dkglab/spacetime.hpp"

using namespace dkglab;

namespace {

std::vector<cplx> plane_wave_samples(const GridSpec& g, int nt, double Tw, int k, double v) {
  // u(x, t) = e^{i k0 (x - v t)} with k0 = dxi * k; v = +1 rides U_+.
  std::vector<cplx> samples(static_cast<std::size_t>(g.N) * nt);
  double k0 = g.dxi() * k;
  for (int j = 0; j < g.N; ++j)
    for (int l = 0; l < nt; ++l) {
      double t = Tw * l / nt;
      samples[static_cast<std::size_t>(j) * nt + l] = std::polar(1.0, k0 * (g.x(j) - v * t));
    }
  return samples;
}

}  // namespace

TEST_CASE("constant-in-time single mode concentrates on the tau = 0 row") {
  GridSpec g = make_grid(16, 2.0 * M_PI);
  int nt = 16;
  double Tw = 2.0 * M_PI;
  std::vector<cplx> samples = plane_wave_samples(g, nt, Tw, 3, 0.0);
  SpaceTimeSpectrum spec = spacetime_spectrum(g, samples, nt, Tw, Taper::none);
  for (int i = 0; i < g.N; ++i)
    for (int j = 0; j < nt; ++j) {
      bool hit = g.k_of_slot(i) == 3 && j == nt / 2;
      if (hit) {
        CHECK(std::abs(spec.at(i, j)) > 1.0);
      } else {
        CHECK(std::abs(spec.at(i, j)) <= 1e-12);
      }
    }
}

TEST_CASE("free wave lands on its characteristic entry (xi=k, tau=-k)") {
  GridSpec g = make_grid(16, 2.0 * M_PI);
  int nt = 16;
  double Tw = 2.0 * M_PI;  // commensurate: tau lattice == xi lattice
  int k = 5;
  std::vector<cplx> samples = plane_wave_samples(g, nt, Tw, k, +1.0);
  SpaceTimeSpectrum spec = spacetime_spectrum(g, samples, nt, Tw, Taper::none);
  int hits = 0;
  for (int i = 0; i < g.N; ++i)
    for (int j = 0; j < nt; ++j) {
      if (std::abs(spec.at(i, j)) > 1e-10) {
        ++hits;
        CHECK(g.k_of_slot(i) == k);
        CHECK(j - nt / 2 == -k);
      }
    }
  CHECK(hits == 1);
}

TEST_CASE("round trip and Parseval for random space-time samples") {
  GridSpec g = make_grid(32, 3.0);
  int nt = 24;
  double Tw = 1.7;
  Rng rng(8);
  std::vector<cplx> samples(static_cast<std::size_t>(g.N) * nt);
  for (auto& s : samples) s = rng.gaussian_complex();

  SpaceTimeSpectrum spec = spacetime_spectrum(g, samples, nt, Tw, Taper::none);
  std::vector<cplx> back = spacetime_samples(spec);
  double phys = 0.0, coef = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(std::abs(back[i] - samples[i]) <= 1e-12);
    phys += std::norm(samples[i]) * g.dx() * (Tw / nt);
  }
  for (const auto& c : spec.coeffs) coef += std::norm(c);
  coef *= g.dxi() * spec.dtau();
  CHECK(coef == doctest::Approx(phys).epsilon(1e-10));
}

TEST_CASE("spectrum construction validates shape and sample count") {
  GridSpec g = make_grid(16, 1.0);
  std::vector<cplx> samples(16 * 6);
  CHECK_THROWS_AS(spacetime_spectrum(g, samples, 6, 1.0, Taper::none),
                  std::invalid_argument);
  std::vector<cplx> bad(16 * 12 - 1);
  CHECK_THROWS_AS(spacetime_spectrum(g, bad, 12, 1.0, Taper::none), std::invalid_argument);
}

TEST_CASE("xsb_norm closed form on a single entry") {
  GridSpec g = make_grid(16, 2.0 * M_PI);
  int nt = 16;
  SpaceTimeSpectrum spec;
  spec.grid = g;
  spec.nt = nt;
  spec.Tw = 2.0 * M_PI;
  spec.coeffs.assign(static_cast<std::size_t>(g.N) * nt, cplx{0.0, 0.0});
  int k = 3, j = -2;
  spec.at(g.slot_of_k(k), j + nt / 2) = 1.0;

  for (double p : {1.5, 2.0, 3.0}) {
    double pc = conjugate_exponent(p);
    PhaseSpec ps{PhaseKind::cone, Sign::minus, 0.8, 0.4, p};
    double tau = spec.tau_slot(j + nt / 2);
    double expect = std::pow(angle_bracket(k), 0.8) *
                    std::pow(angle_bracket(tau - std::abs(double(k))), 0.4) *
                    std::pow(g.dxi() * spec.dtau(), 1.0 / pc);
    CHECK(xsb_norm(spec, ps) == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("xsb_norm with l=b=0, p=2 is the space-time L2 norm") {
  GridSpec g = make_grid(32, 5.0);
  int nt = 16;
  double Tw = 2.0;
  Rng rng(21);
  std::vector<cplx> samples(static_cast<std::size_t>(g.N) * nt);
  double l2 = 0.0;
  for (auto& s : samples) {
    s = rng.gaussian_complex();
    l2 += std::norm(s) * g.dx() * (Tw / nt);
  }
  SpaceTimeSpectrum spec = spacetime_spectrum(g, samples, nt, Tw, Taper::none);
  PhaseSpec flat{PhaseKind::line, Sign::plus, 0.0, 0.0, 2.0};
  CHECK(xsb_norm(spec, flat) == doctest::Approx(std::sqrt(l2)).epsilon(1e-10));
}

TEST_CASE("xsb_norm is monotone in l and b") {
  GridSpec g = make_grid(16, 2.0 * M_PI);
  int nt = 16;
  Rng rng(3);
  std::vector<cplx> samples(static_cast<std::size_t>(g.N) * nt);
  for (auto& s : samples) s = rng.gaussian_complex();
  SpaceTimeSpectrum spec = spacetime_spectrum(g, samples, nt, 2.0 * M_PI, Taper::none);

  double prev = 0.0;
  for (double l : {-0.5, 0.0, 0.5, 1.0}) {
    double n = xsb_norm(spec, PhaseSpec{PhaseKind::line, Sign::plus, l, 0.0, 1.5});
    if (l > -0.5) CHECK(n >= prev);
    prev = n;
  }
  prev = 0.0;
  for (double b : {0.0, 0.3, 0.8}) {
    double n = xsb_norm(spec, PhaseSpec{PhaseKind::cone, Sign::plus, 0.0, b, 1.5});
    if (b > 0.0) CHECK(n >= prev);
    prev = n;
  }
}

TEST_CASE("on-characteristic free wave: xsb_norm independent of b") {
  GridSpec g = make_grid(16, 2.0 * M_PI);
  int nt = 16;
  double Tw = 2.0 * M_PI;
  int k = 4;
  std::vector<cplx> samples = plane_wave_samples(g, nt, Tw, k, +1.0);
  SpaceTimeSpectrum spec = spacetime_spectrum(g, samples, nt, Tw, Taper::none);
  // support sits at tau + xi = 0, so the line_+ modulation weight is <0> = 1
  double n0 = xsb_norm(spec, PhaseSpec{PhaseKind::line, Sign::plus, 0.3, 0.0, 2.0});
  for (double b : {0.5, 1.0, 2.0}) {
    double nb = xsb_norm(spec, PhaseSpec{PhaseKind::line, Sign::plus, 0.3, b, 2.0});
    CHECK(nb == doctest::Approx(n0).epsilon(1e-12));
  }
}

TEST_CASE("trajectory spectrum of an uncoupled run is near-characteristic") {
  GridSpec g = make_grid(32, 2.0 * M_PI);
  HalfWaveState st;
  st.psi_plus = make_spinor(g, Rep::spectral);
  st.psi_minus = make_spinor(g, Rep::spectral);
  st.phi_plus = make_field(g, Rep::spectral);
  st.phi_minus = make_field(g, Rep::spectral);
  int k = 2;
  st.psi_plus.up.values[g.slot_of_k(k)] = 1.0;
  st.psi_plus.lo.values[g.slot_of_k(k)] = 1.0;  // P_+ psi_+ = psi_+

  DkgParams params{0.0, 1.0, 0.0};
  SolveConfig config{2.0 * M_PI, 2.0 * M_PI / 32, Scheme::exponential_rk4, false};
  Trajectory traj = solve(st, params, config);
  SpaceTimeSpectrum spec = spacetime_spectrum(traj, Component::psi_plus_up, Taper::none);
  // the U_+ mode k travels on tau = -xi exactly (commensurate window)
  int hits = 0;
  for (int i = 0; i < g.N; ++i)
    for (int j = 0; j < spec.nt; ++j) {
      if (std::abs(spec.at(i, j)) > 1e-9) {
        ++hits;
        CHECK(g.k_of_slot(i) == k);
        CHECK(j - spec.nt / 2 == -k);
      }
    }
  CHECK(hits == 1);

  // taper spreads the support but keeps the norm finite and metadata intact
  SpaceTimeSpectrum tapered = spacetime_spectrum(traj, Component::psi_plus_up, Taper::bump);
  CHECK(tapered.taper == Taper::bump);

  // an odd snapshot count sheds one sample to keep the tau lattice even
  Trajectory odd = traj;
  odd.states.resize(12);  // 11 samples after the wrap drop
  SpaceTimeSpectrum trimmed = spacetime_spectrum(odd, Component::psi_plus_up, Taper::none);
  CHECK(trimmed.nt == 10);
  CHECK(trimmed.Tw == doctest::Approx(10 * odd.config.dt));

  // non-uniform sampling is rejected
  Trajectory skewed = traj;
  skewed.states[3].t += 0.5 * skewed.config.dt;
  CHECK_THROWS_AS(spacetime_spectrum(skewed, Component::psi_plus_up, Taper::none),
                  std::invalid_argument);
}

TEST_CASE("mixed_hat_norm single entry and exponent sanity") {
  GridSpec g = make_grid(16, 2.0 * M_PI);
  int nt = 16;
  SpaceTimeSpectrum spec;
  spec.grid = g;
  spec.nt = nt;
  spec.Tw = 2.0 * M_PI;
  spec.coeffs.assign(static_cast<std::size_t>(g.N) * nt, cplx{0.0, 0.0});
  spec.at(g.slot_of_k(2), nt / 2 + 1) = 2.0;

  // single entry: norm = |c| * dtau^{1/qt'} * dxi^{1/px'}
  double v = mixed_hat_norm(spec, 2.0, 1.0);
  CHECK(v == doctest::Approx(2.0 * spec.dtau() * std::sqrt(g.dxi())).epsilon(1e-13));
  CHECK_THROWS_AS(mixed_hat_norm(spec, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("xsb_norm is absolutely homogeneous") {
  GridSpec g = make_grid(16, 2.0 * M_PI);
  int nt = 16;
  Rng rng(77);
  std::vector<cplx> samples(static_cast<std::size_t>(g.N) * nt);
  for (auto& s : samples) s = rng.gaussian_complex();
  SpaceTimeSpectrum spec = spacetime_spectrum(g, samples, nt, 2.0 * M_PI, Taper::none);
  SpaceTimeSpectrum scaled = spec;
  const cplx factor{-1.7, 2.3};
  for (auto& c : scaled.coeffs) c *= factor;

  for (double p : {1.3, 2.0, 4.0}) {
    PhaseSpec ps{PhaseKind::cone, Sign::minus, 0.4, 0.3, p};
    CHECK(xsb_norm(scaled, ps) ==
          doctest::Approx(std::abs(factor) * xsb_norm(spec, ps)).epsilon(1e-12));
  }
}

TEST_CASE("modulation_triple hand values") {
  ModulationTriple m = modulation_triple(1, 0, 2, 0);
  CHECK(m.sigma1_plus == 1.0);
  CHECK(m.sigma2_minus == -2.0);
  CHECK(m.sigma_plus == 3.0);
  CHECK(m.sigma_minus == -3.0);

  double a = 1.7;
  ModulationTriple n = modulation_triple(a, -a, a, a);
  CHECK(n.sigma1_plus == 0.0);
  CHECK(n.sigma2_minus == 0.0);
  CHECK(n.sigma_minus == doctest::Approx(-2 * a));

  ModulationTriple z = modulation_triple(0, 0, 0, 0);
  CHECK(z.sigma_plus == 0.0);
  CHECK(z.sigma_minus == 0.0);
  CHECK(z.sigma1_plus == 0.0);
  CHECK(z.sigma2_minus == 0.0);
}
