#ifndef CYCHOM_THREADS_HPP
#define CYCHOM_THREADS_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace cychom {

namespace detail {
inline std::atomic<int>& thread_setting() {
  static std::atomic<int> n{0}; // 0 = use hardware concurrency
  return n;
}
} // namespace detail

inline void set_thread_count(int n) { detail::thread_setting().store(n); }

inline int thread_count() {
  int n = detail::thread_setting().load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/*
 * Runs independent tasks on up to thread_count() threads.  Tasks write only
 * to their own output slots, so results are identical for any thread count;
 * exceptions are captured and the first one (in task order) is rethrown
 * after all workers join.
 */
inline void run_parallel(const std::vector<std::function<void()>>& tasks) {
  int n = thread_count();
  if (n <= 1 || tasks.size() <= 1) {
    for (const auto& t : tasks) t();
    return;
  }
  n = std::min<int>(n, static_cast<int>(tasks.size()));
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace cychom

#endif
