#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ternlcd {

inline constexpr const char* kThreadsEnv = "TERNLCD_THREADS";

// TERNLCD_THREADS if set to a positive integer, else the hardware count.
inline unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, total) into `parts` contiguous chunks and runs fn(part, begin, end)
// for each, on up to `threads` threads. Chunk boundaries depend only on
// `parts`, so callers that merge per-chunk results in chunk order get the
// same answer for any thread count.
template <class Fn>
void for_each_chunk(std::uint64_t total, unsigned parts, unsigned threads, Fn&& fn) {
  parts = std::max(1u, parts);
  const auto bound = [&](unsigned p) { return total / parts * p + std::min<std::uint64_t>(p, total % parts); };
  if (threads <= 1 || parts == 1) {
    for (unsigned p = 0; p < parts; ++p) fn(p, bound(p), bound(p + 1));
    return;
  }
  std::vector<std::exception_ptr> errors(parts);
  std::vector<std::thread> pool;
  const unsigned workers = std::min(threads, parts);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (unsigned p = w; p < parts; p += workers) {
        try {
          fn(p, bound(p), bound(p + 1));
        } catch (...) {
          errors[p] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ternlcd
