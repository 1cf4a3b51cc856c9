#include "lps/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace lps::detail {

namespace {
// The FFTW planner is not reentrant; execution of a ready plan is.
std::mutex planner_mutex;
}  // namespace

void dft(std::vector<Complex>& data, bool forward) {
  const int n = static_cast<int>(data.size());
  if (n == 0) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    plan = fftw_plan_dft_1d(n, buf, buf, forward ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_destroy_plan(plan);
  }
}

}  // namespace lps::detail
