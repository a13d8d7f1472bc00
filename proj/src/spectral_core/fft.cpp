#include "nlsim/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace nlsim::fft {
namespace {

struct PlanKey {
  int dim;
  int n;
  Direction dir;
  auto operator<=>(const PlanKey&) const = default;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int dim, int n, Direction dir) {
    std::lock_guard lock(mutex_);
    const PlanKey key{dim, n, dir};
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<int> shape(dim, n);
    std::size_t total = 1;
    for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(n);
    // ESTIMATE keeps the chosen algorithm, hence the output bits, fixed.
    fftw_complex* scratch = fftw_alloc_complex(total);
    const int sign = dir == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan = fftw_plan_dft(dim, shape.data(), scratch, scratch, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void execute(const Grid& grid, std::span<cplx> data, Direction dir) {
  fftw_plan plan = cache().get(grid.dim(), grid.points_per_axis(), dir);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
}

}  // namespace nlsim::fft
