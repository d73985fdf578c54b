#include "dkglab/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dkglab {

void validate(const FeasibilityProblem& prob) {
  if (!(prob.p > 1.0 && prob.p <= 2.0)) {
    throw std::invalid_argument("FeasibilityProblem: p must lie in (1, 2]");
  }
  if (!(prob.eps > 0.0)) throw std::invalid_argument("FeasibilityProblem: eps must be > 0");
  if (!std::isfinite(prob.s) || !std::isfinite(prob.r)) {
    throw std::invalid_argument("FeasibilityProblem: non-finite s or r");
  }
}

MainConditions check_main(const FeasibilityProblem& prob, double strict_margin) {
  validate(prob);
  MainConditions c;
  c.s_lower = prob.s - (-0.5 + 0.5 / prob.p) > strict_margin;
  c.r_upper = 1.0 + prob.s - prob.r >= 0.0;
  c.r_abs = prob.r - std::abs(prob.s) >= 0.0;
  c.r_lower = prob.r - (2.0 / prob.p - 1.0) > strict_margin;
  return c;
}

std::vector<ConditionEval> evaluate_conditions(const FeasibilityProblem& prob,
                                               const ExponentPair& pair,
                                               double strict_margin) {
  const double p = prob.p, s = prob.s, r = prob.r, eps = prob.eps;
  const double sg = pair.sigma, rho = pair.rho;
  const double ip = 1.0 / p;

  struct Row {
    int id;
    double value;
    bool strict;
  };
  const Row rows[] = {
      {1, s + 1.0 - rho - eps, false},
      {2, s + 1.0 - r, false},
      {3, 2.0 * s + 1.0 - rho - eps, false},
      {4, 2.0 * s + 1.0 - rho - eps + 1.0 - r, false},
      {5, 2.0 * s + sg + 1.0 - r - ip, true},
      {6, 2.0 * s + sg, false},
      {7, s + sg + 1.0 - r, false},
      {8, s + 1.0 - r, false},
      {9, sg + 1.0 - rho - eps - ip, true},
      {10, 1.0 - eps - rho, false},
      {11, 1.0 - eps - sg, false},
      {12, r + 1.0 - sg - eps - ip, true},
      {13, 1.0 - sg - eps, false},
      {14, s + r, false},
      {15, r - s, false},
      {16, s + 1.0 - sg - eps + r, false},
      {17, -s + 1.0 - sg - eps + r, false},
      {101, sg - ip, true},
      {102, 1.0 - sg, true},
      {103, rho - ip, true},
      {104, 1.0 - rho, true},
  };

  std::vector<ConditionEval> out;
  out.reserve(std::size(rows));
  for (const Row& row : rows) {
    ConditionEval e;
    e.id = row.id;
    e.value = row.value;
    e.strict = row.strict;
    e.ok = row.strict ? row.value >= strict_margin : row.value >= 0.0;
    out.push_back(e);
  }
  return out;
}

bool all_ok(const std::vector<ConditionEval>& evals) {
  return std::all_of(evals.begin(), evals.end(), [](const ConditionEval& e) { return e.ok; });
}

namespace {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_strict = false, hi_strict = false;

  void cut_lo(double v, bool strict) {
    if (v > lo) {
      lo = v;
      lo_strict = strict;
    } else if (v == lo) {
      lo_strict = lo_strict || strict;
    }
  }
  void cut_hi(double v, bool strict) {
    if (v < hi) {
      hi = v;
      hi_strict = strict;
    } else if (v == hi) {
      hi_strict = hi_strict || strict;
    }
  }
  bool empty() const {
    if (lo > hi) return true;
    if (lo == hi && (lo_strict || hi_strict)) return true;
    return false;
  }
  double width() const { return hi - lo; }
  double pick() const { return 0.5 * (lo + hi); }
  bool contains(double v) const {
    if (v < lo || v > hi) return false;
    if (v == lo && lo_strict) return false;
    if (v == hi && hi_strict) return false;
    return true;
  }
};

}  // namespace

std::optional<ExponentPair> find_sigma_rho(const FeasibilityProblem& prob) {
  validate(prob);
  const double p = prob.p, s = prob.s, r = prob.r, eps = prob.eps;
  const double ip = 1.0 / p;

  // Conditions free of (sigma, rho) gate everything else.
  if (!(s + 1.0 - r >= 0.0)) return std::nullopt;       // r <= 1 + s
  if (!(s + r >= 0.0) || !(r - s >= 0.0)) return std::nullopt;  // r >= |s|

  // rho interval: open (1/p, 1) cut by the non-strict upper bounds.
  Interval rho_iv;
  rho_iv.cut_lo(ip, true);
  rho_iv.cut_hi(1.0, true);
  rho_iv.cut_hi(s + 1.0 - eps, false);
  rho_iv.cut_hi(2.0 * s + 1.0 - eps, false);
  rho_iv.cut_hi(2.0 * s + 2.0 - r - eps, false);
  rho_iv.cut_hi(1.0 - eps, false);
  if (rho_iv.empty()) return std::nullopt;
  double rho = ip + eps;  // canonical choice, tried first
  if (!rho_iv.contains(rho)) rho = rho_iv.pick();

  // sigma interval given rho (the rho coupling enters through one lower
  // bound, dominated whenever rho <= 1 - eps but kept for completeness).
  Interval sg_iv;
  sg_iv.cut_lo(ip, true);
  sg_iv.cut_hi(1.0, true);
  sg_iv.cut_lo(ip - 2.0 * s - 1.0 + r, true);
  sg_iv.cut_lo(-2.0 * s, false);
  sg_iv.cut_lo(r - s - 1.0, false);
  sg_iv.cut_lo(rho + eps + ip - 1.0, true);
  sg_iv.cut_hi(1.0 - eps, false);
  sg_iv.cut_hi(r + 1.0 - eps - ip, true);
  sg_iv.cut_hi(s + r + 1.0 - eps, false);
  sg_iv.cut_hi(r - s + 1.0 - eps, false);
  if (sg_iv.empty()) return std::nullopt;

  ExponentPair pair{sg_iv.pick(), rho};
  if (!all_ok(evaluate_conditions(prob, pair))) return std::nullopt;
  return pair;
}

SweepReport verify_region_solvability(const SweepSpec& sweep) {
  if (sweep.np < 1 || sweep.ns < 1 || sweep.nr < 1) {
    throw std::invalid_argument("verify_region_solvability: grid counts must be >= 1");
  }
  if (!(sweep.margin >= 1e-3)) {
    throw std::invalid_argument("verify_region_solvability: margin must be >= 1e-3");
  }
  const double d = sweep.margin;
  const double eps = sweep.eps > 0.0 ? sweep.eps : sweep.margin / 4.0;

  auto axis = [](double lo, double hi, int n, int i) {
    return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (n - 1);
  };

  SweepReport report;
  for (int ip = 0; ip < sweep.np; ++ip) {
    double p = axis(sweep.p_min, sweep.p_max, sweep.np, ip);
    double s_lo = -0.5 + 0.5 / p + d;
    for (int is = 0; is < sweep.ns; ++is) {
      double s = axis(s_lo, s_lo + sweep.s_span, sweep.ns, is);
      double r_lo = std::max(std::abs(s), 2.0 / p - 1.0) + d;
      double r_hi = 1.0 + s - d;
      if (!(r_hi > r_lo)) {
        throw std::runtime_error("verify_region_solvability: degenerate r interval (margin too large)");
      }
      for (int ir = 0; ir < sweep.nr; ++ir) {
        double r = axis(r_lo, r_hi, sweep.nr, ir);
        ++report.total;
        FeasibilityProblem prob{p, s, r, eps};
        auto pair = find_sigma_rho(prob);
        bool ok = pair.has_value() && all_ok(evaluate_conditions(prob, *pair));
        if (ok) {
          ++report.successes;
          if (pair->rho == 1.0 / p + eps) ++report.canonical_rho;
        } else if (report.failures.size() < sweep.max_witnesses) {
          report.failures.push_back({p, s, r});
        }
      }
    }
  }
  return report;
}

ScalingExponents scaling_exponents(const FeasibilityProblem& prob) {
  validate(prob);
  ScalingExponents out;
  out.sigma_scale = prob.s + 0.5 - 1.0 / prob.p;
  out.lambda_scale = prob.r + 0.5 - 1.0 / prob.p;
  out.sigma_min = -0.5 / prob.p;
  out.lambda_min = prob.p <= 5.0 / 3.0 ? 1.0 / prob.p - 0.5 : 1.0 - 1.5 / prob.p;
  return out;
}

std::vector<BoundarySegment> region_boundary(double p, int resolution) {
  if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("region_boundary: p in (1, 2]");
  if (resolution < 16) throw std::invalid_argument("region_boundary: resolution >= 16");

  const double s_lo = -0.5 + 0.5 / p;
  const double s_max = 2.0;
  const double r_floor = 2.0 / p - 1.0;

  auto sample = [&](const std::string& name, double a, double b, auto f) {
    BoundarySegment seg{name, {}};
    seg.points.reserve(resolution);
    for (int i = 0; i < resolution; ++i) {
      double s = a + (b - a) * i / (resolution - 1);
      seg.points.push_back({s, f(s)});
    }
    return seg;
  };

  std::vector<BoundarySegment> segments;
  // Vertical wall at the minimal s, from the lower envelope up to r = 1+s.
  {
    double bot = std::max(std::abs(s_lo), r_floor);
    double top = 1.0 + s_lo;
    BoundarySegment seg{"s_lower_wall", {}};
    for (int i = 0; i < resolution; ++i) {
      double r = bot + (top - bot) * i / (resolution - 1);
      seg.points.push_back({s_lo, r});
    }
    segments.push_back(std::move(seg));
  }
  segments.push_back(sample("r_upper", s_lo, s_max, [](double s) { return 1.0 + s; }));
  if (1.0 - 2.0 / p >= s_lo) {  // |s| branch on the left exists only for p >= 5/3
    segments.push_back(
        sample("r_abs_left", s_lo, 1.0 - 2.0 / p, [](double s) { return -s; }));
  }
  segments.push_back(
      sample("r_abs_right", std::max(0.0, r_floor), s_max, [](double s) { return s; }));
  segments.push_back(sample("r_lower", std::max(s_lo, 1.0 - 2.0 / p), r_floor,
                            [&](double) { return r_floor; }));
  return segments;
}

}  // namespace dkglab
