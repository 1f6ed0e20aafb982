#include "aifs/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aifs {

void configure_threads() {
#ifdef _OPENMP
    if (const char *env = std::getenv("AIFS_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0)
                omp_set_num_threads(n);
        } catch (const std::exception &) {
            // ignore malformed values
        }
    }
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace aifs
