#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qcube {

/// 0 means "use available parallelism".
inline unsigned resolve_threads(unsigned requested) noexcept {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [begin, end) into chunks handed out dynamically to `threads`
/// workers. Each worker owns one State; fn(State&, lo, hi) processes a
/// chunk. The caller merges the returned states, so any merge that is
/// associative and commutative yields a schedule-independent result.
template <typename State, typename Fn>
std::vector<State> parallel_chunks(std::uint64_t begin, std::uint64_t end, std::uint64_t chunk, unsigned threads,
                                   Fn fn) {
  threads = resolve_threads(threads);
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t chunks = end > begin ? (end - begin + chunk - 1) / chunk : 0;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));

  std::vector<State> states(threads);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&](unsigned id) {
    try {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= chunks) break;
        const std::uint64_t lo = begin + c * chunk;
        fn(states[id], lo, std::min(end, lo + chunk));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(chunks, std::memory_order_relaxed);
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }
  if (failure) std::rethrow_exception(failure);
  return states;
}

}  // namespace qcube
