#ifndef GAMMALAB_PARALLEL_HPP_
#define GAMMALAB_PARALLEL_HPP_

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace gammalab {

//! Worker cap for parallel scans, from GAMMA_LAB_THREADS (0 or unset = one
//! worker per hardware thread).
inline int thread_cap() {
  if (const char* env = std::getenv("GAMMA_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {

// Splits [0, count) into one contiguous chunk per worker and calls
// fn(chunk_index, begin, end) concurrently. Callers merge per-chunk results
// by chunk index, which keeps output identical for any worker count.
template <typename Fn>
void parallel_chunks(std::uint64_t count, Fn&& fn) {
  int workers = thread_cap();
  if (workers <= 1 || count < 4096) {
    fn(0, std::uint64_t{0}, count);
    return;
  }
  if (static_cast<std::uint64_t>(workers) > count) {
    workers = static_cast<int>(count);
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::uint64_t per = count / static_cast<std::uint64_t>(workers);
  std::uint64_t extra = count % static_cast<std::uint64_t>(workers);
  std::uint64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t len = per + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
    std::uint64_t end = begin + len;
    threads.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace detail
}  // namespace gammalab

#endif  // GAMMALAB_PARALLEL_HPP_
