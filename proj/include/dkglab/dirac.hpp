#pragma once
#include <array>

#include "dkglab/field.hpp"

namespace dkglab {

enum class Sign { plus, minus };
inline int sgn(Sign s) { return s == Sign::plus ? +1 : -1; }
inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

using Mat2 = std::array<std::array<cplx, 2>, 2>;

/// Fixed hermitian representation: alpha = [[0,1],[1,0]], beta = [[1,0],[0,-1]].
Mat2 alpha_matrix();
Mat2 beta_matrix();
/// P_pm = (1/2) [[1, pm1], [pm1, 1]], the eigenprojections of alpha.
Mat2 projector_matrix(Sign s);

Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_add(const Mat2& a, const Mat2& b);
Mat2 mat_sub(const Mat2& a, const Mat2& b);
std::array<cplx, 2> mat_apply(const Mat2& m, const std::array<cplx, 2>& v);

SpinorField apply_beta(const SpinorField& psi);
SpinorField apply_alpha(const SpinorField& psi);
SpinorField project(const SpinorField& psi, Sign s);

/// Pointwise <beta psi, psi'>_{C^2} with the convention <u, v> = v^dagger u
/// (conjugation on the second slot), so beta_form(psi, psi) is real:
///   |upper|^2 - |lower|^2. Requires physical representation, same grid.
ComplexScalarField beta_form(const SpinorField& psi, const SpinorField& psi_prime);

/// The four sign components <beta P_a psi, P_b psi'> for (a,b) in {+,-}^2.
/// The (+,+) and (-,-) components vanish identically; the cross terms sum
/// with them to beta_form(psi, psi').
struct NullComponents {
  ComplexScalarField pp, pm, mp, mm;  // (a,b) = (+,+), (+,-), (-,+), (-,-)
};
NullComponents null_components(const SpinorField& psi, const SpinorField& psi_prime);

/// <beta P_a psi, P_b psi'> for one sign pair.
ComplexScalarField beta_form_projected(const SpinorField& psi, Sign a,
                                       const SpinorField& psi_prime, Sign b);

}  // namespace dkglab
