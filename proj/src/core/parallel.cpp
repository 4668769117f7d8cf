#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

namespace gia {

namespace {
std::atomic<int> g_width{1};
}

void set_parallelism(int width) {
  if (width <= 0) width = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  g_width = width;
}

int parallelism() { return g_width; }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t width = std::min<std::size_t>(static_cast<std::size_t>(g_width.load()), count);
  if (width <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace gia
