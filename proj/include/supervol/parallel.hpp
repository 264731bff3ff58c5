#ifndef SUPERVOL_PARALLEL_HPP
#define SUPERVOL_PARALLEL_HPP

namespace supervol::parallel {

// Runtime switch between the OpenMP kernels and the serial reference paths.
// Outputs are bit-identical either way (exact arithmetic, canonical maps);
// the tests assert that and the benchmark target times both.
bool enabled();
void set_enabled(bool on);
int thread_count();

}  // namespace supervol::parallel

#endif
