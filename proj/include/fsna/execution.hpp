#pragma once

#include <cstddef>
#include <functional>

namespace fsna {

/// Selects between the OpenMP kernels and the plain serial loops they are
/// checked against. Both produce bit-identical results.
enum class Execution { serial, parallel };

/// Worker threads the parallel kernels will use (1 without OpenMP).
int max_threads();

/// Calls body(i) for i in [0, count). Iterations must be independent. With
/// Execution::parallel they are spread over OpenMP threads; the first
/// exception thrown by any iteration is rethrown after the loop.
void for_each_index(std::size_t count, Execution policy,
                    const std::function<void(std::size_t)>& body);

}  // namespace fsna
