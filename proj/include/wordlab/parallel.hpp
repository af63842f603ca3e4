#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace wordlab {

// WORDLAB_WORKERS if set and positive, else the hardware concurrency.
inline unsigned default_workers() {
  if (const char* env = std::getenv("WORDLAB_WORKERS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, total) into one contiguous chunk per worker and calls
// body(begin, end, worker) on each; exceptions are rethrown on the caller.
template <typename Body>
void parallel_chunks(std::uint64_t total, unsigned workers, Body&& body) {
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total)));
  if (workers <= 1) {
    body(std::uint64_t{0}, total, 0u);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  std::uint64_t step = total / workers, extra = total % workers, begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t end = begin + step + (w < extra ? 1 : 0);
    threads.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace wordlab
