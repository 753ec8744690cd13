#pragma once

#include <cstddef>
#include <exception>
#include <optional>

#include "clothoid/error.hpp"

namespace clothoid::detail {

// Runs body(i) for i in [0, n) on the OpenMP team. Every index must write only
// its own output slot, so results do not depend on the schedule. If any index
// throws, the error of the smallest index is rethrown with that index attached.
template <class Body>
void parallel_for_indices(std::size_t n, Body&& body) {
  const auto count = static_cast<std::ptrdiff_t>(n);
  std::ptrdiff_t first_bad = count;
  std::optional<Error> error;
  std::exception_ptr foreign;

#pragma omp parallel for schedule(static) if (count >= 64)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (const Error& e) {
#pragma omp critical(clothoid_parallel_error)
      {
        if (i < first_bad) {
          first_bad = i;
          error = e.with_index(static_cast<std::size_t>(i));
        }
      }
    } catch (...) {
#pragma omp critical(clothoid_parallel_error)
      {
        if (!foreign) foreign = std::current_exception();
      }
    }
  }

  if (foreign) std::rethrow_exception(foreign);
  if (error) throw *error;
}

}  // namespace clothoid::detail
