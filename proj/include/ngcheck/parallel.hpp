#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ngcheck {

/// Evaluates produce(chunk) for chunks [first, last) on `workers` threads and
/// hands each result to consume(chunk, result) in ascending chunk order.
/// Work proceeds in waves of 4 * workers chunks, which bounds memory and gives
/// the consumer a natural checkpoint between chunks.
template <typename Produce, typename Consume>
void ordered_chunks(std::uint64_t first, std::uint64_t last, unsigned workers, Produce&& produce,
                    Consume&& consume) {
  using Result = decltype(produce(std::uint64_t{0}));
  workers = std::max(1U, workers);
  const std::uint64_t wave = std::uint64_t{4} * workers;

  for (std::uint64_t base = first; base < last; base += wave) {
    const std::uint64_t count = std::min(wave, last - base);
    std::vector<std::optional<Result>> results(count);
    if (workers == 1 || count == 1) {
      for (std::uint64_t c = 0; c < count; ++c) results[c].emplace(produce(base + c));
    } else {
      std::atomic<std::uint64_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      {
        std::vector<std::jthread> pool;
        const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
        for (unsigned t = 0; t < threads; ++t) {
          pool.emplace_back([&] {
            for (std::uint64_t c = next++; c < count; c = next++) {
              try {
                results[c].emplace(produce(base + c));
              } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
              }
            }
          });
        }
      }
      if (failure) std::rethrow_exception(failure);
    }
    for (std::uint64_t c = 0; c < count; ++c) consume(base + c, std::move(*results[c]));
  }
}

}  // namespace ngcheck
