#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace syzstab {

/// Selects the OpenMP kernel or its serial reference twin. Both variants
/// perform the same operations in the same per-item order and give
/// bit-identical results.
enum class Exec { serial, parallel };

/// Thread count used by Exec::parallel kernels. Defaults to SYZSTAB_THREADS
/// from the environment, else the OpenMP default.
int thread_count();
void set_thread_count(int n);

/// Runs body(i) for i in [0, n). Iterations must be independent. If some
/// iterations throw, the exception of the lowest such index is rethrown, as
/// the serial loop would.
template <class Body>
void for_each_index(Exec exec, std::size_t n, Body&& body) {
  if (exec == Exec::parallel && n > 1) {
    const int threads = thread_count();
    std::mutex mutex;
    std::exception_ptr error;
    std::size_t error_index = n;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard lock(mutex);
        if (static_cast<std::size_t>(i) < error_index) {
          error_index = static_cast<std::size_t>(i);
          error = std::current_exception();
        }
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

}  // namespace syzstab
