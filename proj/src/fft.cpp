#include "dkglab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace dkglab::fft {

namespace {

std::mutex planner_mutex;

struct PlanKey {
  int n0, n1;  // n1 == 0 for 1D
  bool inverse;
  auto operator<=>(const PlanKey&) const = default;
};

// Plans are created once per shape with FFTW_UNALIGNED so they can execute
// on any caller buffer via fftw_execute_dft.
fftw_plan get_plan(const PlanKey& key) {
  static std::map<PlanKey, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(planner_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::size_t total = key.n1 == 0 ? static_cast<std::size_t>(key.n0)
                                  : static_cast<std::size_t>(key.n0) * key.n1;
  fftw_complex* buf = fftw_alloc_complex(total);
  if (!buf) throw std::bad_alloc();
  int sign = key.inverse ? FFTW_BACKWARD : FFTW_FORWARD;
  unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  fftw_plan plan = key.n1 == 0
                       ? fftw_plan_dft_1d(key.n0, buf, buf, sign, flags)
                       : fftw_plan_dft_2d(key.n0, key.n1, buf, buf, sign, flags);
  fftw_free(buf);
  if (!plan) throw std::runtime_error("fftw planning failed");
  cache.emplace(key, plan);
  return plan;
}

void execute(fftw_plan plan, std::vector<cplx>& a) {
  auto* p = reinterpret_cast<fftw_complex*>(a.data());
  fftw_execute_dft(plan, p, p);
}

}  // namespace

void dft(std::vector<cplx>& a, bool inverse) {
  if (a.empty()) throw std::invalid_argument("dft: empty input");
  execute(get_plan({static_cast<int>(a.size()), 0, inverse}), a);
}

void dft2(std::vector<cplx>& a, int n0, int n1, bool inverse) {
  if (n0 <= 0 || n1 <= 0 || a.size() != static_cast<std::size_t>(n0) * n1) {
    throw std::invalid_argument("dft2: shape mismatch");
  }
  execute(get_plan({n0, n1, inverse}), a);
}

}  // namespace dkglab::fft
