#ifndef EXEL_PARALLEL_HPP_
#define EXEL_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace exel {

/// Worker count for embarrassingly parallel checks: hardware concurrency
/// capped by the EXEL_SGPD_THREADS environment variable (a cap of 1 or an
/// unset variable smaller than 2 means sequential execution).
std::size_t worker_count();

/// Runs fn(begin, end) over a partition of [0, n) on worker_count() threads.
/// Workers receive disjoint ranges, so writes to per-index slots need no
/// synchronization and results are independent of the thread count.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace exel

#endif  // EXEL_PARALLEL_HPP_
