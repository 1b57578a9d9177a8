#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace riglab {

/// Worker count: hardware concurrency, overridden by the RIGLAB_THREADS
/// environment variable. Always at least 1.
std::size_t thread_budget();

/// Runs fn(i) for i in [begin, end) across workers. fn must only touch
/// per-index state (disjoint writes), so the result is identical to the
/// serial loop.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, Fn fn) {
    if (begin >= end) return;
    const std::size_t count = end - begin;
    const std::size_t workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = begin + w * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([fn, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

/// Deterministic chunked reduction over [begin, end): acc = combine(acc,
/// map(i)) within contiguous chunks, then chunk results folded in index
/// order. combine must be associative over per-index values with identity
/// `init` (total-order min/max, counts, AND/OR); avoid float sums, whose
/// value would depend on the chunking.
template <typename T, typename MapFn, typename CombineFn>
T parallel_map_reduce(std::size_t begin, std::size_t end, T init, MapFn map, CombineFn combine) {
    if (begin >= end) return init;
    const std::size_t count = end - begin;
    const std::size_t workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        T acc = std::move(init);
        for (std::size_t i = begin; i < end; ++i) acc = combine(std::move(acc), map(i));
        return acc;
    }
    std::vector<T> partial(workers, init);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    std::size_t used = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = begin + w * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        ++used;
        pool.emplace_back([&partial, &map, &combine, w, lo, hi] {
            T acc = std::move(partial[w]);
            for (std::size_t i = lo; i < hi; ++i) acc = combine(std::move(acc), map(i));
            partial[w] = std::move(acc);
        });
    }
    for (auto& t : pool) t.join();
    T acc = std::move(partial[0]);
    for (std::size_t w = 1; w < used; ++w) acc = combine(std::move(acc), std::move(partial[w]));
    return acc;
}

} // namespace riglab
