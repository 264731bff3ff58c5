// Times the OpenMP kernels against the serial reference on identical work.
// Shared memo tables (brackets, kernel moments) are warmed before timing so
// both paths measure the same arithmetic; outputs agree bit for bit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "supervol/kdv.hpp"
#include "supervol/parallel.hpp"
#include "supervol/virasoro.hpp"
#include "supervol/volumes.hpp"

using namespace supervol;
namespace chrono = std::chrono;

namespace {

double time_mode(bool par, const std::function<void()>& f) {
  parallel::set_enabled(par);
  const auto t0 = chrono::steady_clock::now();
  f();
  return chrono::duration<double>(chrono::steady_clock::now() - t0).count();
}

void all_volumes(VolFlavor f, int max_euler) {
  VolumeEngine::instance().clear_memory_cache();
  for (unsigned g = 0; 2 * static_cast<int>(g) - 1 <= max_euler; ++g)
    for (unsigned n = 1; stable(g, n) && 2 * static_cast<int>(g) - 2 + static_cast<int>(n) <= max_euler; ++n)
      (void)VolumeEngine::instance().vol(f, g, n);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", parallel::thread_count());

  // warm the shared memo tables outside the timed region
  all_volumes(VolFlavor::WP, 6);
  const TruncSeries<Rat> log_kw = assemble_tau_log(BracketKind::KW, TauBounds{3, 9, 4});
  const TruncSeries<Rat> z_kw = log_kw.exp_();

  struct Job {
    const char* name;
    std::function<void()> run;
  };
  const std::vector<Job> jobs = {
      {"vol_wp table, 2g-2+n <= 6", [] { all_volumes(VolFlavor::WP, 6); }},
      {"vol_wp table, 2g-2+n = 7 row", [] {
         VolumeEngine::instance().clear_memory_cache();
         (void)vol_wp(2, 5);
         (void)vol_wp(1, 7);
         (void)vol_wp(0, 9);
       }},
      {"series exp (G=3,N=9,K=4)", [&] { (void)log_kw.exp_(); }},
      {"kdv residual of Z^KW", [&] { (void)kdv_residual(z_kw); }},
  };

  double serial_total = 0, parallel_total = 0;
  for (const auto& j : jobs) {
    const double s = time_mode(false, j.run);
    const double p = time_mode(true, j.run);
    serial_total += s;
    parallel_total += p;
    std::printf("%-30s serial %7.3f s   parallel %7.3f s   (x%.2f)\n", j.name, s, p, s / p);
  }
  std::printf("\ntotal%56.3f s %19.3f s   (x%.2f)\n", serial_total, parallel_total,
              serial_total / parallel_total);
  return 0;
}
