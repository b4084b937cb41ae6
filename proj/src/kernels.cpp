#include "cubica/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <span>

namespace cubica::kernels {
namespace {

std::uint32_t overlap_from(const BitMatrix& m, std::size_t i) {
  std::uint32_t best = 0;
  const std::size_t words = m.words_per_row();
  const std::uint64_t* a = m.row(i);
  for (std::size_t j = i + 1; j < m.rows(); ++j) {
    const std::uint64_t* b = m.row(j);
    std::uint32_t s = 0;
    for (std::size_t w = 0; w < words; ++w) s += static_cast<std::uint32_t>(std::popcount(a[w] & b[w]));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

std::vector<pg3::PlaneId> line_pencils(const pg3::SpaceModel& space, Exec exec) {
  const std::size_t width = static_cast<std::size_t>(space.q()) + 1;
  std::vector<pg3::PlaneId> out(space.num_lines() * width);
  for_each_index(space.num_lines(), exec, [&](std::size_t l) {
    space.planes_through(pg3::LineId{static_cast<std::uint32_t>(l)},
                         std::span<pg3::PlaneId>(out.data() + l * width, width));
  });
  return out;
}

std::uint32_t max_row_overlap(const BitMatrix& m, Exec exec) {
  const auto n = static_cast<std::int64_t>(m.rows());
  std::uint32_t best = 0;
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i) best = std::max(best, overlap_from(m, static_cast<std::size_t>(i)));
    return best;
  }
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best)
  for (std::int64_t i = 0; i < n; ++i) best = std::max(best, overlap_from(m, static_cast<std::size_t>(i)));
  return best;
}

int thread_count() { return omp_get_max_threads(); }

void apply_thread_env() {
  if (const char* env = std::getenv("CUBICA_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
}

}  // namespace cubica::kernels
