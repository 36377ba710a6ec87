#include "aglab/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>
#include <thread>

namespace aglab {

namespace {
int g_workers = 0;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("AGLAB_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void set_workers(int workers) {
  g_workers = resolve_workers(workers);
  omp_set_num_threads(g_workers);
}

int current_workers() {
  if (g_workers == 0) set_workers(0);
  return g_workers;
}

}  // namespace aglab
