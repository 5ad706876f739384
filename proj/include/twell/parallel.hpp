#ifndef TWELL_PARALLEL_HPP
#define TWELL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace twell {

namespace detail {
inline std::atomic<unsigned>& thread_cap() {
  static std::atomic<unsigned> cap{1};
  return cap;
}
}  // namespace detail

/// Upper bound on worker threads used by the enumeration kernels. Results
/// never depend on this value.
inline unsigned max_threads() { return detail::thread_cap().load(); }
inline void set_max_threads(unsigned n) { detail::thread_cap().store(std::max(1u, n)); }

/// Runs body(chunk_index, begin, end) over contiguous chunks of [0, n).
/// Chunk boundaries depend only on n and the chunk count, so any per-chunk
/// results merged in chunk order are deterministic.
template <typename Body>
void parallel_chunks(std::size_t n, std::size_t chunks, Body&& body) {
  chunks = std::max<std::size_t>(1, std::min(chunks, n));
  const auto bound = [&](std::size_t c) { return n * c / chunks; };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(max_threads(), chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) body(c, bound(c), bound(c + 1));
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t c; (c = next.fetch_add(1)) < chunks;) body(c, bound(c), bound(c + 1));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Number of chunks to split an n-element loop into.
inline std::size_t default_chunks(std::size_t n) {
  const std::size_t t = max_threads();
  return t <= 1 ? 1 : std::min<std::size_t>(n, 8 * t);
}

}  // namespace twell

#endif
