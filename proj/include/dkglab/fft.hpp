#pragma once
#include <complex>
#include <vector>

namespace dkglab::fft {

using cplx = std::complex<double>;

/// In-place unnormalized DFT on natural-order data,
/// forward kernel e^{-2*pi*i*jk/n}, inverse kernel e^{+2*pi*i*jk/n}.
/// Backed by FFTW; plans are cached per (size, direction) behind a mutex,
/// execution is safe to call concurrently on distinct buffers.
void dft(std::vector<cplx>& a, bool inverse);

/// In-place 2D DFT, row-major a[i0*n1 + i1], both axes transformed.
void dft2(std::vector<cplx>& a, int n0, int n1, bool inverse);

}  // namespace dkglab::fft
