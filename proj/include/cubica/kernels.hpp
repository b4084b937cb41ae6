#pragma once

// Hot loops, each with a serial reference and an OpenMP variant.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

#include "cubica/bitmatrix.hpp"
#include "cubica/pg3.hpp"

namespace cubica::kernels {

enum class Exec { Serial, Parallel };

// Calls f(i) for i in [0, n). The first exception thrown by any call is
// rethrown after the loop.
template <class F>
void for_each_index(std::size_t n, Exec exec, F&& f) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(cubica_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

// Flat table: entry l*(q+1)+k is the k-th plane through line l.
std::vector<pg3::PlaneId> line_pencils(const pg3::SpaceModel& space, Exec exec);

// Largest popcount(row_i & row_j) over pairs i < j; 0 with fewer than two rows.
std::uint32_t max_row_overlap(const BitMatrix& m, Exec exec);

// Number of threads the parallel variants will use.
int thread_count();
// Applies CUBICA_THREADS if set to a positive integer.
void apply_thread_env();

}  // namespace cubica::kernels
