#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace amoeba {

/// Splits [0, count) into `threads` contiguous chunks and runs
/// body(chunk_index, begin, end) on each, one std::thread per chunk.
/// Chunk boundaries depend only on (count, threads), so per-chunk outputs
/// concatenated in chunk order are deterministic.
template <class Body>
void parallel_chunks(std::size_t count, unsigned threads, Body&& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        body(std::size_t{0}, std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = count * t / threads;
        const std::size_t end = count * (t + 1) / threads;
        pool.emplace_back([&, t, begin, end] {
            try {
                body(static_cast<std::size_t>(t), begin, end);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

/// Thread count from AMOEBA_THREADS, else hardware concurrency.
unsigned default_thread_count();

}  // namespace amoeba
