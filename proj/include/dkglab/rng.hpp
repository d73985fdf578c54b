#pragma once
#include <complex>
#include <cstdint>

namespace dkglab {

/// Deterministic RNG (splitmix64 core, Box-Muller gaussians). Hand-rolled so
/// that a given seed produces identical streams on every platform/stdlib.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  double gaussian();  // standard normal
  std::complex<double> gaussian_complex();

  /// Decorrelated child seed for trial `index` of a master seed.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t index);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace dkglab
