#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace mla {

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs pred over [0, count) and returns the matching indices in ascending
// order. Work is chunked across threads; each chunk keeps its ids sorted, so
// concatenating chunks in order preserves the canonical ordering.
std::vector<std::size_t> parallel_matching_ids(
    std::size_t count, int jobs, const std::function<bool(std::size_t)>& pred);

}  // namespace mla
