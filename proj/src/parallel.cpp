#include "deko/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace deko {

namespace {
std::atomic<unsigned> g_threads{0};  // 0 = not initialised yet
}

void set_default_threads(unsigned n) { g_threads.store(n == 0 ? 1 : n); }

unsigned default_threads() {
  unsigned n = g_threads.load();
  if (n == 0) {
    n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    g_threads.store(n);
  }
  return n;
}

void parallel_for(std::size_t chunks, const std::function<void(std::size_t)>& fn,
                  unsigned threads) {
  if (threads == 0) threads = default_threads();
  if (chunks == 0) return;
  if (threads == 1 || chunks == 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        fn(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(chunks);  // drain remaining work
        return;
      }
    }
  };

  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  std::vector<std::thread> pool;
  pool.reserve(n_workers - 1);
  for (unsigned t = 1; t < n_workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace deko
