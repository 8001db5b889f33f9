#ifndef BDC_OPENMP_HPP
#define BDC_OPENMP_HPP

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bdc {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace bdc

#endif
