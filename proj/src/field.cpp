#include "dkglab/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dkglab/fft.hpp"

namespace dkglab {

namespace {

// monotone slot i <-> DFT natural index m: m = (i + N/2) % N (self-inverse).
std::vector<cplx> shift_half(const std::vector<cplx>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<cplx> out(n);
  for (int i = 0; i < n; ++i) out[i] = a[(i + n / 2) % n];
  return out;
}

}  // namespace

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
  if (!(a == b)) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

void require_rep(const ComplexScalarField& f, Rep rep, const char* where) {
  if (f.rep != rep) {
    throw std::invalid_argument(std::string(where) + ": field has the wrong representation");
  }
}

ComplexScalarField make_field(const GridSpec& g, Rep rep) {
  return ComplexScalarField{g, rep, std::vector<cplx>(g.N, cplx{0.0, 0.0})};
}

ComplexScalarField to_spectral(const ComplexScalarField& f) {
  if (f.rep == Rep::spectral) return f;
  ComplexScalarField out{f.grid, Rep::spectral, f.values};
  fft::dft(out.values, /*inverse=*/false);
  const double scale = f.grid.dx() / std::sqrt(2.0 * M_PI);
  for (auto& c : out.values) c *= scale;
  out.values = shift_half(out.values);
  return out;
}

ComplexScalarField to_physical(const ComplexScalarField& f) {
  if (f.rep == Rep::physical) return f;
  ComplexScalarField out{f.grid, Rep::physical, shift_half(f.values)};
  fft::dft(out.values, /*inverse=*/true);
  const double scale = f.grid.dxi() / std::sqrt(2.0 * M_PI);
  for (auto& c : out.values) c *= scale;
  return out;
}

ComplexScalarField with_rep(const ComplexScalarField& f, Rep rep) {
  return rep == Rep::spectral ? to_spectral(f) : to_physical(f);
}

ComplexScalarField apply_multiplier(const ComplexScalarField& f,
                                    const std::vector<cplx>& symbol) {
  require_rep(f, Rep::spectral, "apply_multiplier");
  if (symbol.size() != f.values.size()) {
    throw std::invalid_argument("apply_multiplier: symbol length mismatch");
  }
  ComplexScalarField out = f;
  for (std::size_t i = 0; i < symbol.size(); ++i) {
    if (!std::isfinite(symbol[i].real()) || !std::isfinite(symbol[i].imag())) {
      throw std::invalid_argument("apply_multiplier: non-finite symbol value on the grid");
    }
    out.values[i] *= symbol[i];
  }
  return out;
}

ComplexScalarField apply_multiplier(const ComplexScalarField& f,
                                    const std::function<cplx(double)>& symbol) {
  std::vector<cplx> sym(f.grid.N);
  for (int i = 0; i < f.grid.N; ++i) sym[i] = symbol(f.grid.xi_slot(i));
  return apply_multiplier(f, sym);
}

namespace {
ComplexScalarField zip(const ComplexScalarField& a, const ComplexScalarField& b,
                       const char* where, cplx (*op)(cplx, cplx)) {
  require_same_grid(a.grid, b.grid, where);
  if (a.rep != b.rep) throw std::invalid_argument(std::string(where) + ": rep mismatch");
  ComplexScalarField out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = op(a.values[i], b.values[i]);
  return out;
}
}  // namespace

ComplexScalarField add(const ComplexScalarField& a, const ComplexScalarField& b) {
  return zip(a, b, "add", [](cplx x, cplx y) { return x + y; });
}

ComplexScalarField sub(const ComplexScalarField& a, const ComplexScalarField& b) {
  return zip(a, b, "sub", [](cplx x, cplx y) { return x - y; });
}

ComplexScalarField scale(const ComplexScalarField& a, cplx factor) {
  ComplexScalarField out = a;
  for (auto& c : out.values) c *= factor;
  return out;
}

ComplexScalarField pointwise(const ComplexScalarField& a, const ComplexScalarField& b) {
  require_rep(a, Rep::physical, "pointwise");
  require_rep(b, Rep::physical, "pointwise");
  return zip(a, b, "pointwise", [](cplx x, cplx y) { return x * y; });
}

ComplexScalarField conj_field(const ComplexScalarField& a) {
  ComplexScalarField out = a;
  if (a.rep == Rep::physical) {
    for (auto& c : out.values) c = std::conj(c);
    return out;
  }
  // conj(f)^hat(xi) = conj(fhat(-xi)); slot N/2 pairs with itself via mod N.
  const int n = a.grid.N;
  for (int i = 0; i < n; ++i) {
    int k = a.grid.k_of_slot(i);
    int src = ((-k + n / 2) % n + n) % n;
    out.values[i] = std::conj(a.values[src]);
  }
  return out;
}

SpinorField make_spinor(const GridSpec& g, Rep rep) {
  return SpinorField{make_field(g, rep), make_field(g, rep)};
}

SpinorField to_spectral(const SpinorField& f) {
  return {to_spectral(f.up), to_spectral(f.lo)};
}

SpinorField to_physical(const SpinorField& f) {
  return {to_physical(f.up), to_physical(f.lo)};
}

SpinorField add(const SpinorField& a, const SpinorField& b) {
  return {add(a.up, b.up), add(a.lo, b.lo)};
}

SpinorField sub(const SpinorField& a, const SpinorField& b) {
  return {sub(a.up, b.up), sub(a.lo, b.lo)};
}

SpinorField scale(const SpinorField& a, cplx factor) {
  return {scale(a.up, factor), scale(a.lo, factor)};
}

SpinorField apply_multiplier(const SpinorField& f, const std::vector<cplx>& symbol) {
  return {apply_multiplier(f.up, symbol), apply_multiplier(f.lo, symbol)};
}

double max_abs(const ComplexScalarField& f) {
  double m = 0.0;
  for (const auto& c : f.values) m = std::max(m, std::abs(c));
  return m;
}

double max_abs(const SpinorField& f) { return std::max(max_abs(f.up), max_abs(f.lo)); }

}  // namespace dkglab
