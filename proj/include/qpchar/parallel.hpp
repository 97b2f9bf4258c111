#ifndef QPCHAR_PARALLEL_HPP
#define QPCHAR_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qpchar {

/// Worker count used by every parallel loop in the library (default 1).
void set_thread_count(int threads);
int thread_count();

/// Returns {fn(items[0]), fn(items[1]), ...} in input order. Work is spread
/// over thread_count() workers; the result does not depend on the count.
template <typename Item, typename Fn>
auto parallel_map(const std::vector<Item>& items, Fn&& fn) -> std::vector<decltype(fn(items.front()))>
{
    using Result = decltype(fn(items.front()));
    std::vector<Result> out(items.size());
    const int workers = std::min<int>(thread_count(), static_cast<int>(items.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
            try {
                out[i] = fn(items[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace qpchar

#endif  // QPCHAR_PARALLEL_HPP
