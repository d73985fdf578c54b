#pragma once
#include <json.hpp>

#include "dkglab/feasibility.hpp"
#include "dkglab/rng.hpp"
#include "dkglab/spacetime.hpp"

namespace dkglab {

enum class Distribution { gaussian_modes, band_limited, single_mode };

Distribution distribution_from_string(const std::string& name);
const char* distribution_name(Distribution d);

/// Reproducible random-field ensemble: `count` trials drawn from
/// per-trial seeds derived from `seed`.
struct EnsembleSpec {
  std::uint64_t seed = 1;
  int count = 8;
  Distribution dist = Distribution::band_limited;
  int bandwidth = 16;
};

void validate(const EnsembleSpec& spec);

/// Random spectral field: gaussian coefficients under the power-law envelope
/// <xi>^{-1} (band-limited / single-mode variants restrict the support).
ComplexScalarField random_field(const GridSpec& g, Rng& rng, Distribution dist,
                                int bandwidth);

/// Random space-time spectrum with envelope <xi>^{-1} <tau>^{-1}.
SpaceTimeSpectrum random_spacetime(const GridSpec& g, int nt, double Tw, Rng& rng,
                                   Distribution dist, int bandwidth);

struct RatioReport {
  std::string name;
  double sup_ratio = 0.0;
  std::vector<std::pair<int, double>> per_resolution;
  long violations = 0;
  double max_violation = 0.0;
  nlohmann::json metadata;

  nlohmann::json to_json() const;
};

/// min(|xi1|,|xi2|) <= (|sigma_pm| + |sigma1+| + |sigma2-|)/2, both signs,
/// over uniform tuples in [-range, range]^4. Exact inequality: zero violations
/// expected (beyond a documented 1e-12-scale floating tolerance); the
/// tightest and loosest observed slacks are recorded.
RatioReport check_modulation_inequality(const EnsembleSpec& spec, double range = 100.0);

/// Exhaustive integer-lattice variant on [-half_extent, half_extent]^4,
/// exact arithmetic, zero tolerance.
RatioReport check_modulation_inequality_exhaustive(int half_extent);

struct FreeWaveProductReport {
  double max_rel_error = 0.0;  // vs the on-characteristic product formula
  double hat_ratio = 0.0;      // ||uv|| / (||f|| ||g||) in the hat-L^p scale
};

/// Builds the counter-propagating waves u(x,t) = f(x-t), v(x,t) = g(x+t) on
/// a window commensurate with the torus (Tw = L, nt = N) and compares the
/// discrete space-time transform of uv with
///   fhat((xi-tau)/2) * ghat((xi+tau)/2)
/// on the even-parity sublattice (alias images at the band edge included).
/// Preconditions: f, g spectral, band-limited to |k| <= N/4.
FreeWaveProductReport check_free_wave_product(const ComplexScalarField& f,
                                              const ComplexScalarField& g,
                                              double p = 2.0);

RatioReport check_free_wave_product_ensemble(int N, const EnsembleSpec& spec,
                                             double p = 2.0);

/// Exact vanishing of the same-sign components <beta P_pm psi, P_pm psi'>,
/// relative tolerance 1e-12 against the sup norms of the inputs.
RatioReport check_null_structure(const EnsembleSpec& spec, int N = 64, double L = 2 * M_PI);

enum class BilinearEstimate { dirac_pm, dirac_mp, wave_pm, wave_mp };

const char* bilinear_name(BilinearEstimate which);
BilinearEstimate bilinear_from_string(const std::string& name);

struct BilinearParams {
  double s = 0.0, r = 0.5, p = 2.0, sigma = 0.6, rho = 0.6, eps = 0.01;
};

/// Ratio sweep LHS/RHS for one of the four bilinear estimates on random
/// space-time spinor pairs (synthesized spectrally, projected onto the
/// matching eigenspaces). Both cone signs are evaluated and the larger LHS
/// is used. Parameters outside the admissible region are still swept; the
/// report is marked accordingly.
RatioReport estimate_bilinear_constant(BilinearEstimate which, const BilinearParams& params,
                                       const EnsembleSpec& spec,
                                       const std::vector<int>& resolutions);

/// Statistical check of the four mixed-norm embeddings at index r
/// (the two-sided variants use w1 = w2 = 2r). sup ratios per embedding are
/// recorded in the metadata; eps is the "+" slack on the exponents.
RatioReport check_embeddings(double r_index, const EnsembleSpec& spec,
                             const std::vector<int>& resolutions, double eps = 0.01);

/// ||uv||_{hat-L^p} <= c ||u||_{X^{0,sigma}_{+p}} ||v||_{X^{0,sigma}_{-p}},
/// requires sigma > 1/p.
RatioReport check_crossing_product(double sigma, double p, const EnsembleSpec& spec,
                              const std::vector<int>& resolutions);

struct ProductLawParams {
  double a = 0.3, b = 0.3, c = 0.0;        // regularity exponents
  double alpha = 0.6, beta = 0.6, gamma = 0.0;  // modulation exponents
  double p = 2.0, q = 2.0, r = 2.0;        // Lebesgue indices
  Sign cone_sign = Sign::plus;

  /// a+b+c and alpha+beta+gamma must exceed 1/p + 1/q + 1/r' - 1.
  bool admissible() const;
};

/// Three-field product-law ratio check with phases (+xi, -xi, pm|xi|).
RatioReport check_product_law(const ProductLawParams& params, const EnsembleSpec& spec,
                              const std::vector<int>& resolutions);

}  // namespace dkglab
