#pragma once

namespace aglab {

// Every parallel kernel has a serial twin that produces bit-identical
// output; Exec selects between them. The OpenMP variants are written so the
// result does not depend on the thread count either (per-slot writes or
// fixed-order reductions only).
enum class Exec { Serial, Parallel };

// Worker-count resolution: explicit value > AGLAB_WORKERS env > hardware
// concurrency. Applies to all Exec::Parallel kernels via omp_set_num_threads.
int resolve_workers(int requested);
void set_workers(int workers);
int current_workers();

}  // namespace aglab
