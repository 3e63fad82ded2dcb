#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace genusdist::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into contiguous chunks, runs body(begin, end, local) for
/// each on its own thread, and returns the chunk-local states in chunk order.
template <typename Local, typename Body>
std::vector<Local> run_chunked(std::uint64_t count, unsigned threads, const Local& init, Body body) {
    const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), count));
    std::vector<Local> locals(workers, init);
    if (workers == 1) {
        body(std::uint64_t{0}, count, locals[0]);
        return locals;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = count * w / workers;
        const std::uint64_t end = count * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            try {
                body(begin, end, locals[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return locals;
}

} // namespace genusdist::detail
