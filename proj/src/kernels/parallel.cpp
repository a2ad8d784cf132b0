#include "idealis/kernels/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace idealis {

int configure_threads_from_env() {
#ifdef _OPENMP
  if (const char* env = std::getenv("IDEALIS_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) omp_set_num_threads(n);
    } catch (const std::exception&) {
      // Ignore malformed values and keep the OpenMP default.
    }
  }
#endif
  return max_threads();
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace idealis
