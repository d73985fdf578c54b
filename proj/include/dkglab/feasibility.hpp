#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dkglab {

/// Parameter tuple for the admissibility machinery: Lebesgue index p in
/// (1,2], data regularities (s for the spinor, r for the wave), and the
/// slack eps > 0 standing in for every "+" exponent.
struct FeasibilityProblem {
  double p = 2.0;
  double s = 0.0;
  double r = 0.5;
  double eps = 0.01;
};

void validate(const FeasibilityProblem& prob);

/// The four sufficient conditions on (p, s, r):
///   (a) s > -1/2 + 1/(2p)   (b) r <= 1 + s   (c) r >= |s|   (d) r > 2/p - 1.
/// Strict inequalities are evaluated as value > strict_margin (default 0;
/// 1e-12 gives reproducible behavior at floating boundaries).
struct MainConditions {
  bool s_lower = false;
  bool r_upper = false;
  bool r_abs = false;
  bool r_lower = false;

  bool all() const { return s_lower && r_upper && r_abs && r_lower; }
};

MainConditions check_main(const FeasibilityProblem& prob, double strict_margin = 0.0);

/// Modulation exponents; admissible range is the open square (1/p, 1)^2.
struct ExponentPair {
  double sigma = 0.0;
  double rho = 0.0;
};

struct ConditionEval {
  int id = 0;            // 1..17, or 100+ for the (1/p,1) bounds on sigma/rho
  double value = 0.0;    // lhs - rhs; the condition wants value >= 0 (or > 0)
  bool strict = false;
  bool ok = false;
};

/// Evaluates the full working system (the seventeen linear conditions plus
/// the open bounds on sigma and rho). Strict conditions demand
/// value >= strict_margin; non-strict demand value >= 0.
std::vector<ConditionEval> evaluate_conditions(const FeasibilityProblem& prob,
                                               const ExponentPair& pair,
                                               double strict_margin = 1e-12);

bool all_ok(const std::vector<ConditionEval>& evals);

/// Solves the working system for (sigma, rho) by exact interval
/// intersection: rho is eliminated first (the canonical choice
/// rho = 1/p + eps is tried before the interval midpoint), then the sigma
/// interval is intersected and its midpoint returned. Returns nothing when
/// the feasible set is empty. Any returned pair re-validates against the
/// full system.
std::optional<ExponentPair> find_sigma_rho(const FeasibilityProblem& prob);

struct SweepSpec {
  int np = 50, ns = 50, nr = 50;
  double margin = 1e-3;   // interior slack applied to all four region bounds
  double eps = -1.0;      // slack for the working system; < 0 means margin/4
  double p_min = 1.02, p_max = 2.0;
  double s_span = 1.2;    // s runs from the margin-shifted lower bound up this far
  std::uint64_t max_witnesses = 16;
};

struct SweepReport {
  long total = 0;
  long successes = 0;
  long canonical_rho = 0;  // points solved with the rho = 1/p + eps choice
  std::vector<std::array<double, 3>> failures;  // (p, s, r) witnesses
};

/// Asserts the implication "inside the four-condition region => the working
/// system is solvable" over a grid placed margin-deep inside the region.
SweepReport verify_region_solvability(const SweepSpec& sweep);

/// L2-scaling exponents of the data spaces: sigma_scale = s + 1/2 - 1/p for
/// the spinor slot and lambda_scale = r + 1/2 - 1/p for the wave slot,
/// together with their region minimizers (the lambda branch splits at
/// p = 5/3).
struct ScalingExponents {
  double sigma_scale = 0.0;
  double lambda_scale = 0.0;
  double sigma_min = 0.0;
  double lambda_min = 0.0;
};

ScalingExponents scaling_exponents(const FeasibilityProblem& prob);

struct BoundarySegment {
  std::string name;
  std::vector<std::array<double, 2>> points;  // (s, r)
};

/// Boundary polylines of the admissible (s, r) region at fixed p, sampled at
/// `resolution` points per active segment, within the window s <= s_max = 2.
std::vector<BoundarySegment> region_boundary(double p, int resolution);

}  // namespace dkglab
