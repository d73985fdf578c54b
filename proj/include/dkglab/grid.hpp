#pragma once
#include <cmath>
#include <vector>

namespace dkglab {

/// Uniform periodic grid on [0, L) with N points (N a power of two) and the
/// matching discrete frequency set xi_k = 2*pi*k/L, k = -N/2 .. N/2-1.
/// Spectral arrays are laid out in monotone k order at the API boundary:
/// slot i holds mode k = i - N/2.
struct GridSpec {
  int N = 0;
  double L = 0.0;

  double dx() const { return L / N; }
  double dxi() const { return 2.0 * M_PI / L; }
  double x(int j) const { return L * static_cast<double>(j) / N; }
  int k_of_slot(int i) const { return i - N / 2; }
  int slot_of_k(int k) const { return k + N / 2; }
  double xi_of_k(int k) const { return dxi() * k; }
  double xi_slot(int i) const { return xi_of_k(k_of_slot(i)); }
  std::vector<double> frequencies() const;

  bool operator==(const GridSpec&) const = default;
};

/// Validates N (power of two, >= 8) and L (> 0); throws std::invalid_argument.
GridSpec make_grid(int N, double L);

bool is_power_of_two(int n);

}  // namespace dkglab
