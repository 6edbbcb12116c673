#pragma once

// Compensated summation and a deterministic chunked parallel reduction.
//
// The chunk decomposition depends only on the element count and the chunk
// size, never on the thread count, and partial sums are always combined in
// chunk order. Results are therefore bit-identical for any number of threads.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lowwafom {

/// Kahan-Babuska (Neumaier) compensated accumulator.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    void add(const CompensatedSum& other) {
        add(other.sum_);
        add(other.comp_);
    }

    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline constexpr std::uint64_t kReduceChunk = std::uint64_t{1} << 14;

/// Number of worker threads to use for `requested` (0 means hardware concurrency).
inline unsigned resolve_threads(int requested) {
    if (requested > 0) return static_cast<unsigned>(requested);
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1U : hw;
}

/// Runs body(chunk_index) for chunk_index in [0, chunks) on up to `threads`
/// workers. The first exception thrown by any body is rethrown.
template <class Body>
void parallel_for_chunks(std::uint64_t chunks, int threads, Body&& body) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), chunks));
    if (workers <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) body(c);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= chunks) return;
            try {
                body(c);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(chunks);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// Sums chunk_sum(begin, end) over fixed-size chunks of [0, count), combining
/// the partial compensated sums in chunk order.
template <class ChunkSum>
CompensatedSum chunked_sum(std::uint64_t count, int threads, ChunkSum&& chunk_sum,
                           std::uint64_t chunk = kReduceChunk) {
    const std::uint64_t chunks = count == 0 ? 0 : (count + chunk - 1) / chunk;
    std::vector<CompensatedSum> partial(chunks);
    parallel_for_chunks(chunks, threads, [&](std::uint64_t c) {
        const std::uint64_t begin = c * chunk;
        const std::uint64_t end = std::min(count, begin + chunk);
        partial[c] = chunk_sum(begin, end);
    });
    CompensatedSum total;
    for (const auto& p : partial) total.add(p);
    return total;
}

}  // namespace lowwafom
