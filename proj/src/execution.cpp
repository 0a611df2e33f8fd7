#include "fsna/execution.hpp"

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsna {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void for_each_index(std::size_t count, Execution policy,
                    const std::function<void(std::size_t)>& body) {
  if (policy == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<std::ptrdiff_t>(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
}

}  // namespace fsna
