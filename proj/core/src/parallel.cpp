#include "momentum_lab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace momentum_lab {

unsigned parallel_thread_cap() {
  if (const char* env = std::getenv("MOMENTUM_LAB_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1) {
      return static_cast<unsigned>(value);
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw >= 1 ? hw : 1u;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk_fn) {
  if (n == 0) {
    return;
  }
  const std::size_t threads = std::min<std::size_t>(parallel_thread_cap(), n);
  if (threads <= 1) {
    chunk_fn(0, n);
    return;
  }

  const std::size_t base = n / threads;
  const std::size_t extra = n % threads;
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads - 1);

  std::size_t begin = 0;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t end = begin + base + (t < extra ? 1 : 0);
    auto task = [&chunk_fn, &errors, t, begin, end] {
      try {
        chunk_fn(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    };
    if (t + 1 == threads) {
      task();  // run the last chunk on the calling thread
    } else {
      workers.emplace_back(task);
    }
    begin = end;
  }
  for (auto& w : workers) {
    w.join();
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace momentum_lab
