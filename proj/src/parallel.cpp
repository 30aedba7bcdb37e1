#include "unmix/parallel.hpp"

#include <omp.h>

namespace unmix {

namespace {
int default_threads = -1;
}

void set_thread_count(int threads) {
  if (default_threads < 0) default_threads = omp_get_max_threads();
  omp_set_num_threads(threads > 0 ? threads : default_threads);
}

int thread_count() { return omp_get_max_threads(); }

namespace detail {

void parallel_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t)) {
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    body(ctx, static_cast<std::size_t>(i));
  }
}

}  // namespace detail

}  // namespace unmix
