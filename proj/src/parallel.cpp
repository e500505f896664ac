#include "starconf/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace starconf {

namespace {
int default_threads() {
#ifdef _OPENMP
  return omp_get_num_procs();
#else
  return 1;
#endif
}
}  // namespace

void set_thread_count(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n > 0 ? n : default_threads());
#else
  (void)n;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return default_threads();
#endif
}

}  // namespace starconf
