#pragma once
#include "dkglab/field.hpp"

namespace dkglab {

/// Data-space norm parameters: regularity s and Lebesgue index p in (1, 2].
/// The norm acts on the transform side with the conjugate exponent p'.
struct NormSpec {
  double s = 0.0;
  double p = 2.0;

  double p_conj() const { return p / (p - 1.0); }
};

void validate(const NormSpec& spec);

double conjugate_exponent(double p);

/// Discrete weighted-transform norm
///   ( sum_k <xi_k>^{s p'} |fhat(xi_k)|^{p'} dxi )^{1/p'},
/// with <xi> = (1 + xi^2)^{1/2}. Requires spectral representation. The dxi
/// quadrature weight makes s=0, p=2 coincide with the physical L^2 norm.
double hsp_norm(const ComplexScalarField& f, const NormSpec& spec);

/// Physical L^2 norm (with dx weight); accepts either representation.
double l2_norm(const ComplexScalarField& f);
double l2_norm(const SpinorField& f);
double l2_distance(const ComplexScalarField& a, const ComplexScalarField& b);
double l2_distance(const SpinorField& a, const SpinorField& b);

inline double angle_bracket(double v) { return std::sqrt(1.0 + v * v); }

}  // namespace dkglab
