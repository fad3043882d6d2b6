#include "mla/parallel.hpp"

#include <algorithm>

namespace mla {

std::vector<std::size_t> parallel_matching_ids(
    std::size_t count, int jobs, const std::function<bool(std::size_t)>& pred) {
  int workers = resolve_jobs(jobs);
  if (workers <= 1 || count < 2048) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < count; ++i)
      if (pred(i)) out.push_back(i);
    return out;
  }

  std::size_t n = static_cast<std::size_t>(workers);
  std::vector<std::vector<std::size_t>> buckets(n);
  std::vector<std::thread> threads;
  threads.reserve(n);
  std::size_t chunk = (count + n - 1) / n;
  for (std::size_t w = 0; w < n; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    threads.emplace_back([lo, hi, &pred, &buckets, w] {
      for (std::size_t i = lo; i < hi; ++i)
        if (pred(i)) buckets[w].push_back(i);
    });
  }
  for (auto& t : threads) t.join();

  std::vector<std::size_t> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace mla
