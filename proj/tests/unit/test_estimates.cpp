#include <doctest.h>

#include <cmath>

#include "dkglab/estimates.hpp"
#include "dkglab/norms.hpp"

using namespace dkglab;

TEST_CASE("modulation inequality: hand-computed and equality cases") {
  {
    ModulationTriple m = modulation_triple(1, 0, 2, 0);
    double lhs = std::min(std::abs(1.0), std::abs(2.0));
    double rhs = 0.5 * (std::abs(m.sigma_plus) + std::abs(m.sigma1_plus) +
                        std::abs(m.sigma2_minus));
    CHECK(lhs <= rhs);
    CHECK(rhs == doctest::Approx(3.0));
  }
  {
    double a = 2.5;
    ModulationTriple m = modulation_triple(a, -a, a, a);
    double lhs = a;
    double rhs = 0.5 * (std::abs(m.sigma_minus) + std::abs(m.sigma1_plus) +
                        std::abs(m.sigma2_minus));
    CHECK(lhs == doctest::Approx(rhs));  // equality case
  }
}

TEST_CASE("modulation inequality: randomized and exhaustive sweeps are clean") {
  EnsembleSpec spec;
  spec.seed = 7;
  spec.count = 200000;
  RatioReport r = check_modulation_inequality(spec, 100.0);
  CHECK(r.violations == 0);
  CHECK(r.sup_ratio <= 1.0 + 1e-12);
  // exact slack is >= 0; the evaluated one can carry ~1e-14 rounding
  CHECK(r.metadata.at("min_slack").get<double>() >= -1e-12);

  RatioReport ex = check_modulation_inequality_exhaustive(6);
  CHECK(ex.violations == 0);
  CHECK(ex.metadata.at("min_slack").get<double>() == 0.0);  // equality is attained
}

TEST_CASE("free-wave product: plane waves hit a single entry") {
  GridSpec g = make_grid(32, 2.0 * M_PI);
  ComplexScalarField f = make_field(g, Rep::spectral);
  ComplexScalarField h = make_field(g, Rep::spectral);
  int k1 = 3, k2 = -5;
  f.values[g.slot_of_k(k1)] = cplx{0.8, 0.1};
  h.values[g.slot_of_k(k2)] = cplx{-0.2, 0.5};
  FreeWaveProductReport rep = check_free_wave_product(f, h);
  CHECK(rep.max_rel_error <= 1e-12);
  CHECK(rep.hat_ratio > 0.0);
}

TEST_CASE("free-wave product: zero input gives zero ratio and error") {
  GridSpec g = make_grid(16, 2.0 * M_PI);
  ComplexScalarField f = make_field(g, Rep::spectral);
  FreeWaveProductReport rep = check_free_wave_product(f, f);
  CHECK(rep.max_rel_error == 0.0);
  CHECK(rep.hat_ratio == 0.0);
}

TEST_CASE("free-wave product: random band-limited fields match the formula") {
  EnsembleSpec spec;
  spec.seed = 11;
  spec.count = 4;
  spec.bandwidth = 16;  // N/4 for N = 64: exercises the band edge
  RatioReport rep = check_free_wave_product_ensemble(64, spec);
  CHECK(rep.violations == 0);
  CHECK(rep.metadata.at("max_rel_error").get<double>() <= 1e-10);
}

TEST_CASE("free-wave product rejects unbounded supports") {
  GridSpec g = make_grid(16, 2.0 * M_PI);
  ComplexScalarField f = make_field(g, Rep::spectral);
  f.values[g.slot_of_k(5)] = 1.0;  // 5 > N/4 = 4
  CHECK_THROWS_AS(check_free_wave_product(f, f), std::invalid_argument);
}

TEST_CASE("null structure sweep is exact") {
  EnsembleSpec spec;
  spec.seed = 3;
  spec.count = 100;
  RatioReport rep = check_null_structure(spec, 32);
  CHECK(rep.violations == 0);
  CHECK(rep.sup_ratio <= 1e-12);
}

TEST_CASE("crossing-product ratio sweep: preconditions and bounded ratios") {
  EnsembleSpec spec;
  spec.seed = 1;
  spec.count = 3;
  CHECK_THROWS_AS(check_crossing_product(0.4, 2.0, spec, {16}), std::invalid_argument);

  RatioReport rep = check_crossing_product(0.6, 2.0, spec, {16, 32});
  CHECK(rep.sup_ratio > 0.0);
  CHECK(std::isfinite(rep.sup_ratio));
  CHECK(rep.per_resolution.size() == 2);
}

TEST_CASE("bilinear sweep runs, reports admissibility, and is deterministic") {
  EnsembleSpec spec;
  spec.seed = 5;
  spec.count = 2;
  BilinearParams params;  // (2, 0, 0.5, 0.6, 0.6, 0.01): admissible
  RatioReport rep = estimate_bilinear_constant(BilinearEstimate::wave_pm, params, spec, {16});
  CHECK(rep.metadata.at("admissible").get<bool>());
  CHECK(std::isfinite(rep.sup_ratio));
  CHECK(rep.sup_ratio > 0.0);

  RatioReport again = estimate_bilinear_constant(BilinearEstimate::wave_pm, params, spec, {16});
  CHECK(again.sup_ratio == rep.sup_ratio);  // fixed seed -> identical sweep

  BilinearParams bad = params;
  bad.s = -0.4;  // violates the s-lower bound at p = 2
  RatioReport marked = estimate_bilinear_constant(BilinearEstimate::dirac_pm, bad, spec, {16});
  CHECK(!marked.metadata.at("admissible").get<bool>());
  CHECK(marked.metadata.at("note").get<std::string>() == "outside admissible region");
  CHECK(std::isfinite(marked.sup_ratio));
}

TEST_CASE("all four bilinear estimates produce finite nonzero ratios") {
  EnsembleSpec spec;
  spec.seed = 9;
  spec.count = 2;
  BilinearParams params;
  for (BilinearEstimate which : {BilinearEstimate::dirac_pm, BilinearEstimate::dirac_mp,
                                 BilinearEstimate::wave_pm, BilinearEstimate::wave_mp}) {
    RatioReport rep = estimate_bilinear_constant(which, params, spec, {16});
    CHECK(std::isfinite(rep.sup_ratio));
    CHECK(rep.sup_ratio > 0.0);
  }
}

TEST_CASE("embedding sweep: single-entry ratio stays under the weight quotient") {
  // a one-entry spectrum makes both sides explicit: the ratio reduces to
  // dxi^{1/r} <xi0>^{-1/r-eps} <= 1 on the integer-frequency grid
  EnsembleSpec spec;
  spec.seed = 2;
  spec.count = 4;
  spec.dist = Distribution::single_mode;
  spec.bandwidth = 5;
  RatioReport rep = check_embeddings(2.0, spec, {16});
  CHECK(rep.sup_ratio <= 1.0 + 1e-12);

  spec.dist = Distribution::band_limited;
  RatioReport rep2 = check_embeddings(2.0, spec, {16, 32});
  CHECK(std::isfinite(rep2.sup_ratio));
  CHECK(rep2.metadata.at("cases").contains("x_r_t_inf"));
}

TEST_CASE("on-characteristic fields reduce the crossing bound to the product bound") {
  // free waves have zero modulation, so the X^{0,sigma} weights collapse to
  // the spatial hat-norms and the crossing-product ratio equals the free-wave
  // product ratio
  GridSpec g = make_grid(32, 2.0 * M_PI);
  const int nt = 32;
  const double Tw = 2.0 * M_PI;
  Rng rng(14);
  ComplexScalarField f = random_field(g, rng, Distribution::band_limited, 6);
  ComplexScalarField h = random_field(g, rng, Distribution::band_limited, 6);

  auto traveling = [&](const ComplexScalarField& base, double v) {
    std::vector<cplx> samples(static_cast<std::size_t>(g.N) * nt);
    for (int l = 0; l < nt; ++l) {
      double t = Tw * l / nt;
      ComplexScalarField slice = to_physical(apply_multiplier(
          base, [&](double xi) { return std::polar(1.0, -v * xi * t); }));
      for (int j = 0; j < g.N; ++j) {
        samples[static_cast<std::size_t>(j) * nt + l] = slice.values[j];
      }
    }
    return samples;
  };

  std::vector<cplx> us = traveling(f, +1.0), vs = traveling(h, -1.0);
  SpaceTimeSpectrum u = spacetime_spectrum(g, us, nt, Tw, Taper::none);
  SpaceTimeSpectrum v = spacetime_spectrum(g, vs, nt, Tw, Taper::none);
  std::vector<cplx> prod(us.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = us[i] * vs[i];
  SpaceTimeSpectrum w = spacetime_spectrum(g, prod, nt, Tw, Taper::none);

  const double p = 2.0, sigma = 0.7;
  PhaseSpec flat{PhaseKind::line, Sign::plus, 0.0, 0.0, p};
  PhaseSpec xp{PhaseKind::line, Sign::plus, 0.0, sigma, p};
  PhaseSpec xm{PhaseKind::line, Sign::minus, 0.0, sigma, p};
  double cor_ratio = xsb_norm(w, flat) / (xsb_norm(u, xp) * xsb_norm(v, xm));

  FreeWaveProductReport fw = check_free_wave_product(f, h, p);
  // same on-characteristic data on both sides; each 2D factor in the
  // denominator carries (Tw/sqrt(2 pi)) dtau^{1/p'} relative to its 1D norm
  double one_factor = Tw / std::sqrt(2.0 * M_PI) *
                      std::pow(2.0 * M_PI / Tw, 1.0 - 1.0 / p);
  CHECK(cor_ratio == doctest::Approx(fw.hat_ratio / (one_factor * one_factor))
                         .epsilon(1e-10));
}

TEST_CASE("borderline zero slack is accepted and reported by the embeddings") {
  EnsembleSpec spec;
  spec.seed = 8;
  spec.count = 2;
  RatioReport snug = check_embeddings(2.0, spec, {16, 32}, 0.0);
  RatioReport eased = check_embeddings(2.0, spec, {16, 32}, 0.1);
  CHECK(std::isfinite(snug.sup_ratio));
  // zero slack can only make the right-hand sides smaller
  CHECK(snug.sup_ratio >= eased.sup_ratio);
}

TEST_CASE("product law admissibility predicate and sweep") {
  ProductLawParams params;
  CHECK(params.admissible());
  ProductLawParams bad = params;
  bad.a = -0.4;
  bad.b = 0.0;
  CHECK(!bad.admissible());

  EnsembleSpec spec;
  spec.seed = 4;
  spec.count = 2;
  RatioReport rep = check_product_law(params, spec, {16});
  CHECK(std::isfinite(rep.sup_ratio));
  CHECK(rep.sup_ratio > 0.0);
  CHECK(rep.metadata.at("admissible").get<bool>());
}

TEST_CASE("ensemble validation") {
  EnsembleSpec spec;
  spec.count = 0;
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  CHECK(distribution_from_string("gaussian-modes") == Distribution::gaussian_modes);
  CHECK_THROWS_AS(distribution_from_string("nope"), std::invalid_argument);
}
