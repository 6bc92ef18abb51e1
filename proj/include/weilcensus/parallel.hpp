#ifndef WEILCENSUS_PARALLEL_HPP
#define WEILCENSUS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace weilcensus {

/// Half-open bounds of part `i` when [0, total) is cut into `parts` near-equal
/// contiguous pieces.
inline std::pair<std::uint64_t, std::uint64_t> split_range(std::uint64_t total, std::uint64_t parts,
                                                           std::uint64_t i) {
  const std::uint64_t q = total / parts, r = total % parts;
  const std::uint64_t begin = i * q + std::min(i, r);
  return {begin, begin + q + (i < r ? 1 : 0)};
}

/// Runs task(i) for i in [0, tasks) on up to `workers` threads. Tasks must write
/// only to their own slot; the caller merges slots in index order. If tasks
/// throw, the exception of the lowest failing index is rethrown.
template <class Task>
void run_tasks(std::uint64_t tasks, unsigned workers, Task&& task) {
  workers = std::max(1u, workers);
  std::vector<std::exception_ptr> errors(tasks);
  if (workers == 1 || tasks <= 1) {
    for (std::uint64_t i = 0; i < tasks; ++i) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    auto loop = [&] {
      for (std::uint64_t i; (i = next.fetch_add(1)) < tasks;) {
        try {
          task(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(workers, tasks));
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(loop);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace weilcensus

#endif
