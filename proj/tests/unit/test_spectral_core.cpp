#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dkglab/field.hpp"
#include "dkglab/norms.hpp"
#include "dkglab/rng.hpp"

using namespace dkglab;

namespace {

ComplexScalarField random_physical(const GridSpec& g, std::uint64_t seed) {
  Rng rng(seed);
  ComplexScalarField f = make_field(g, Rep::physical);
  for (auto& v : f.values) v = rng.gaussian_complex();
  return f;
}

}  // namespace

TEST_CASE("make_grid validates and lays out frequencies") {
  GridSpec g = make_grid(8, 2.0 * M_PI);
  auto xi = g.frequencies();
  CHECK(xi.size() == 8);
  // L = 2*pi gives integer frequencies -4..3
  for (int i = 0; i < 8; ++i) CHECK(xi[i] == doctest::Approx(i - 4).epsilon(1e-15));
  CHECK(std::is_sorted(xi.begin(), xi.end()));

  GridSpec g16 = make_grid(16, 1.0);
  CHECK(g16.dx() == doctest::Approx(1.0 / 16));
  CHECK(g16.dxi() == doctest::Approx(2.0 * M_PI));

  // symmetric about 0 apart from the unpaired Nyquist mode
  GridSpec gs = make_grid(64, 3.7);
  auto freqs = gs.frequencies();
  for (int i = 1; i < gs.N; ++i) {
    CHECK(freqs[i] == doctest::Approx(-freqs[gs.N - i]).epsilon(1e-15));
  }

  CHECK_THROWS_AS(make_grid(10, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(16, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(16, -1.0), std::invalid_argument);
}

TEST_CASE("transform round trip reproduces random fields") {
  for (int N : {8, 64, 256}) {
    GridSpec g = make_grid(N, 3.7);
    ComplexScalarField f = random_physical(g, 42 + N);
    ComplexScalarField back = to_physical(to_spectral(f));
    double scale = max_abs(f);
    for (int i = 0; i < N; ++i) {
      CHECK(std::abs(back.values[i] - f.values[i]) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("single mode lands in the right slot") {
  GridSpec g = make_grid(16, 2.0 * M_PI);
  int k = 3;
  ComplexScalarField f = make_field(g, Rep::physical);
  for (int j = 0; j < g.N; ++j) f.values[j] = std::polar(1.0, k * g.x(j));
  ComplexScalarField fh = to_spectral(f);
  // unitary-density convention: e^{ikx} has coefficient L/sqrt(2 pi) at k
  double expect = g.L / std::sqrt(2.0 * M_PI);
  for (int i = 0; i < g.N; ++i) {
    double want = g.k_of_slot(i) == k ? expect : 0.0;
    CHECK(std::abs(fh.values[i]) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("identity multiplier is a no-op and composition is pointwise") {
  GridSpec g = make_grid(64, 5.0);
  ComplexScalarField f = to_spectral(random_physical(g, 7));
  ComplexScalarField same = apply_multiplier(f, [](double) { return cplx{1.0, 0.0}; });
  for (int i = 0; i < g.N; ++i) CHECK(same.values[i] == f.values[i]);

  auto s1 = [](double xi) { return cplx{1.0 / (1.0 + xi * xi), 0.5}; };
  auto s2 = [](double xi) { return std::polar(1.0, 0.3 * xi); };
  ComplexScalarField chained = apply_multiplier(apply_multiplier(f, s2), s1);
  ComplexScalarField direct =
      apply_multiplier(f, [&](double xi) { return s1(xi) * s2(xi); });
  double scale = max_abs(f);
  for (int i = 0; i < g.N; ++i) {
    CHECK(std::abs(chained.values[i] - direct.values[i]) <= 1e-14 * scale);
  }
}

TEST_CASE("single-mode diagonal action of (xi^2+1)^{-1/2}") {
  GridSpec g = make_grid(16, 2.0 * M_PI);
  int k = 3;
  ComplexScalarField f = make_field(g, Rep::spectral);
  f.values[g.slot_of_k(k)] = 1.0;
  ComplexScalarField out = apply_multiplier(
      f, [](double xi) { return cplx{1.0 / std::sqrt(xi * xi + 1.0), 0.0}; });
  CHECK(out.values[g.slot_of_k(k)].real() ==
        doctest::Approx(1.0 / std::sqrt(k * k + 1.0)).epsilon(1e-15));
}

TEST_CASE("phase multiplier e^{-i t xi} with t = dx rotates physical samples") {
  GridSpec g = make_grid(32, 4.0);
  ComplexScalarField f = random_physical(g, 11);
  // band-limit to make the interpolation exact under sampling shifts
  ComplexScalarField fh = to_spectral(f);
  for (int i = 0; i < g.N; ++i) {
    if (std::abs(g.k_of_slot(i)) > g.N / 4) fh.values[i] = 0.0;
  }
  f = to_physical(fh);

  double t = g.dx();
  ComplexScalarField shifted = to_physical(apply_multiplier(
      to_spectral(f), [&](double xi) { return std::polar(1.0, -xi * t); }));

  // independent oracle: rotate the sample array by one cell
  std::vector<cplx> rotated(f.values.size());
  for (int j = 0; j < g.N; ++j) rotated[j] = f.values[((j - 1) % g.N + g.N) % g.N];
  double scale = max_abs(f);
  for (int j = 0; j < g.N; ++j) {
    CHECK(std::abs(shifted.values[j] - rotated[j]) <= 1e-12 * scale);
  }
}

TEST_CASE("multiplier rejects non-finite symbol values") {
  GridSpec g = make_grid(8, 1.0);
  ComplexScalarField f = make_field(g, Rep::spectral);
  CHECK_THROWS_AS(
      apply_multiplier(f, [](double xi) { return cplx{1.0 / xi, 0.0}; }),
      std::invalid_argument);  // xi = 0 is on the grid
}

TEST_CASE("hsp_norm closed forms") {
  GridSpec g = make_grid(16, 2.0 * M_PI);  // dxi = 1
  ComplexScalarField f = make_field(g, Rep::spectral);
  int k = 3;
  f.values[g.slot_of_k(k)] = 1.0;

  for (double p : {1.25, 1.5, 2.0}) {
    NormSpec spec{0.7, p};
    double pc = spec.p_conj();
    double expect = std::pow(angle_bracket(k), 0.7) * std::pow(g.dxi(), 1.0 / pc);
    CHECK(hsp_norm(f, spec) == doctest::Approx(expect).epsilon(1e-13));
  }

  // two unit modes, s = 0: the l^{p'} norm of (1,1)
  ComplexScalarField two = make_field(g, Rep::spectral);
  two.values[g.slot_of_k(1)] = 1.0;
  two.values[g.slot_of_k(-5)] = 1.0;
  for (double p : {1.25, 1.5, 2.0}) {
    double pc = conjugate_exponent(p);
    double expect = std::pow(2.0, 1.0 / pc) * std::pow(g.dxi(), 1.0 / pc);
    CHECK(hsp_norm(two, NormSpec{0.0, p}) == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("hsp_norm at s=0, p=2 is Parseval") {
  GridSpec g = make_grid(128, 7.3);
  ComplexScalarField f = random_physical(g, 23);
  double phys = 0.0;
  for (const auto& v : f.values) phys += std::norm(v) * g.dx();
  double norm = hsp_norm(to_spectral(f), NormSpec{0.0, 2.0});
  CHECK(norm * norm == doctest::Approx(phys).epsilon(1e-10));
}

TEST_CASE("hsp_norm is monotone in s") {
  GridSpec g = make_grid(64, 3.0);
  ComplexScalarField f = to_spectral(random_physical(g, 5));
  double prev = 0.0;
  bool first = true;
  for (double s : {-1.0, -0.25, 0.0, 0.5, 1.5}) {
    double n = hsp_norm(f, NormSpec{s, 1.5});
    if (!first) CHECK(n >= prev);
    prev = n;
    first = false;
  }
}

TEST_CASE("NormSpec rejects p outside (1,2]") {
  GridSpec g = make_grid(8, 1.0);
  ComplexScalarField f = make_field(g, Rep::spectral);
  CHECK_THROWS_AS(hsp_norm(f, NormSpec{0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(hsp_norm(f, NormSpec{0.0, 2.5}), std::invalid_argument);
  CHECK_THROWS_AS(hsp_norm(make_field(g, Rep::physical), NormSpec{0.0, 2.0}),
                  std::invalid_argument);
}

TEST_CASE("spectral conjugation mirrors the frequency axis") {
  GridSpec g = make_grid(32, 2.0);
  ComplexScalarField f = random_physical(g, 3);
  ComplexScalarField route_a = to_spectral(conj_field(f));
  ComplexScalarField route_b = conj_field(to_spectral(f));
  double scale = max_abs(route_a) + 1e-300;
  for (int i = 0; i < g.N; ++i) {
    CHECK(std::abs(route_a.values[i] - route_b.values[i]) <= 1e-12 * scale);
  }
}
