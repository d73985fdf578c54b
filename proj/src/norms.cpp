#include "dkglab/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace dkglab {

void validate(const NormSpec& spec) {
  if (!(spec.p > 1.0 && spec.p <= 2.0)) {
    throw std::invalid_argument("NormSpec: p must lie in (1, 2]");
  }
  if (!std::isfinite(spec.s)) throw std::invalid_argument("NormSpec: s must be finite");
}

double conjugate_exponent(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("conjugate_exponent: need p > 1");
  return p / (p - 1.0);
}

double hsp_norm(const ComplexScalarField& f, const NormSpec& spec) {
  validate(spec);
  require_rep(f, Rep::spectral, "hsp_norm");
  const double q = spec.p_conj();
  const double dxi = f.grid.dxi();
  double accum = 0.0;
  for (int i = 0; i < f.grid.N; ++i) {
    double w = std::pow(angle_bracket(f.grid.xi_slot(i)), spec.s * q);
    accum += w * std::pow(std::abs(f.values[i]), q) * dxi;
  }
  return std::pow(accum, 1.0 / q);
}

double l2_norm(const ComplexScalarField& f) {
  // Plancherel makes the two representations agree up to roundoff.
  const double w = f.rep == Rep::spectral ? f.grid.dxi() : f.grid.dx();
  double accum = 0.0;
  for (const auto& c : f.values) accum += std::norm(c) * w;
  return std::sqrt(accum);
}

double l2_norm(const SpinorField& f) {
  double a = l2_norm(f.up), b = l2_norm(f.lo);
  return std::sqrt(a * a + b * b);
}

double l2_distance(const ComplexScalarField& a, const ComplexScalarField& b) {
  return l2_norm(sub(a, b));
}

double l2_distance(const SpinorField& a, const SpinorField& b) {
  return l2_norm(sub(a, b));
}

}  // namespace dkglab
