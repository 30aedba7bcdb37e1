#ifndef UNMIX_PARALLEL_HPP
#define UNMIX_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>

namespace unmix {

/// Selects between the OpenMP kernel and its serial reference loop.
/// Both produce identical results; the serial path exists for testing
/// and benchmarking.
enum class Exec { serial, parallel };

/// Number of OpenMP threads used by parallel kernels (<= 0 restores the
/// runtime default).
void set_thread_count(int threads);
int thread_count();

namespace detail {
void parallel_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t));
}

/// Runs body(i) for i in [0, n). Iterations must be independent. The
/// first exception thrown by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  struct Ctx {
    Body* body;
    std::exception_ptr error;
    std::mutex mu;
  } ctx{&body, nullptr, {}};
  detail::parallel_for_impl(n, &ctx, [](void* raw, std::size_t i) {
    auto* c = static_cast<Ctx*>(raw);
    try {
      (*c->body)(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(c->mu);
      if (!c->error) c->error = std::current_exception();
    }
  });
  if (ctx.error) std::rethrow_exception(ctx.error);
}

}  // namespace unmix

#endif  // UNMIX_PARALLEL_HPP
