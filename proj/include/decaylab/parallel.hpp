#pragma once

namespace decaylab {

/// Thread count used by the parallel kernels. Starts from DECAYLAB_THREADS
/// (unset or 0 = OpenMP default); set_thread_count overrides it.
int thread_count();
void set_thread_count(int n);  // 0 = OpenMP default

}  // namespace decaylab
