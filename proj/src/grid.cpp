#include "dkglab/grid.hpp"

#include <stdexcept>
#include <string>

namespace dkglab {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

GridSpec make_grid(int N, double L) {
  if (N < 8 || !is_power_of_two(N)) {
    throw std::invalid_argument("make_grid: N must be a power of two >= 8, got " +
                                std::to_string(N));
  }
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw std::invalid_argument("make_grid: L must be positive and finite");
  }
  return GridSpec{N, L};
}

std::vector<double> GridSpec::frequencies() const {
  std::vector<double> xi(N);
  for (int i = 0; i < N; ++i) xi[i] = xi_slot(i);
  return xi;
}

}  // namespace dkglab
