#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace bunkbed {

/// A state space larger than the configured cap was requested.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

/// Runs `body(chunk)` for every chunk in [0, num_chunks) on up to `workers`
/// threads. Chunks are claimed dynamically; callers write into per-chunk slots
/// and merge in chunk order, which keeps results independent of `workers`.
template <class Body>
void parallel_chunks(std::size_t num_chunks, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || num_chunks <= 1) {
    for (std::size_t c = 0; c < num_chunks; ++c) body(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < num_chunks;) {
      try {
        body(c);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, num_chunks));
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(run);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace bunkbed
