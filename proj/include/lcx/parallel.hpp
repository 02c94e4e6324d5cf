#pragma once
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lcx {

// Runs f(0..n-1) across up to `workers` threads.  Work items are handed out
// by atomic counter; callers that need ordered output should write results
// into a pre-sized buffer by index.  The first exception wins and is
// rethrown on the calling thread.
template <typename F>
void parallel_for(std::size_t n, std::size_t workers, F&& f) {
  if (n == 0) return;
  if (workers == 0) workers = 1;
  if (workers == 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  if (workers > n) workers = n;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace lcx
