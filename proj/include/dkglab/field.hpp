#pragma once
#include <complex>
#include <functional>
#include <vector>

#include "dkglab/grid.hpp"

namespace dkglab {

using cplx = std::complex<double>;

enum class Rep { spectral, physical };

/// One C-valued field on a periodic grid. `values` holds either physical
/// samples f(x_j), j = 0..N-1, or spectral coefficients in monotone
/// frequency order. Spectral coefficients follow the unitary
/// continuum-transform convention (Riemann sums of the symmetric pair):
///
///   fhat_k = dx/sqrt(2 pi) * sum_j f(x_j) e^{-i xi_k x_j}
///   f(x_j) = dxi/sqrt(2 pi) * sum_k fhat_k e^{+i xi_k x_j}
///
/// so that sum_k |fhat_k|^2 dxi == sum_j |f(x_j)|^2 dx (discrete Plancherel).
struct ComplexScalarField {
  GridSpec grid;
  Rep rep = Rep::spectral;
  std::vector<cplx> values;
};

ComplexScalarField make_field(const GridSpec& g, Rep rep = Rep::spectral);
ComplexScalarField to_spectral(const ComplexScalarField& f);
ComplexScalarField to_physical(const ComplexScalarField& f);
ComplexScalarField with_rep(const ComplexScalarField& f, Rep rep);

/// Multiplies spectral coefficients by symbol(xi_k). Requires spectral rep
/// and a finite symbol value at every grid frequency.
ComplexScalarField apply_multiplier(const ComplexScalarField& f,
                                    const std::function<cplx(double)>& symbol);
ComplexScalarField apply_multiplier(const ComplexScalarField& f,
                                    const std::vector<cplx>& symbol);

ComplexScalarField add(const ComplexScalarField& a, const ComplexScalarField& b);
ComplexScalarField sub(const ComplexScalarField& a, const ComplexScalarField& b);
ComplexScalarField scale(const ComplexScalarField& a, cplx factor);
/// Pointwise product; both fields must be physical and share a grid.
ComplexScalarField pointwise(const ComplexScalarField& a, const ComplexScalarField& b);
/// Complex conjugate (valid in either representation; spectral conjugation
/// reflects the frequency axis, with the Nyquist mode fixed).
ComplexScalarField conj_field(const ComplexScalarField& a);

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where);
void require_rep(const ComplexScalarField& f, Rep rep, const char* where);

/// Two-component spinor field; both components share grid and representation.
struct SpinorField {
  ComplexScalarField up, lo;

  const GridSpec& grid() const { return up.grid; }
  Rep rep() const { return up.rep; }
};

SpinorField make_spinor(const GridSpec& g, Rep rep = Rep::spectral);
SpinorField to_spectral(const SpinorField& f);
SpinorField to_physical(const SpinorField& f);
SpinorField add(const SpinorField& a, const SpinorField& b);
SpinorField sub(const SpinorField& a, const SpinorField& b);
SpinorField scale(const SpinorField& a, cplx factor);
SpinorField apply_multiplier(const SpinorField& f, const std::vector<cplx>& symbol);

double max_abs(const ComplexScalarField& f);
double max_abs(const SpinorField& f);

}  // namespace dkglab
