#include "supervol/parallel.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace supervol::parallel {

namespace {
std::atomic<bool> g_enabled{[] {
  const char* e = std::getenv("SUPERVOL_SERIAL");
  return !(e && e[0] == '1');
}()};
}

bool enabled() {
#ifdef _OPENMP
  return g_enabled.load(std::memory_order_relaxed);
#else
  return false;
#endif
}

void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

int thread_count() {
#ifdef _OPENMP
  return enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

}  // namespace supervol::parallel
