#include "ifsquad/summation.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace ifsq {

int worker_count() {
    if (const char* env = std::getenv("IFSQUAD_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (...) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {

void run_blocks(std::size_t block_count, const std::function<void(std::size_t)>& run_block) {
    const int workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), block_count);
    if (workers <= 1 || block_count <= 1) {
        for (std::size_t b = 0; b < block_count; ++b) run_block(b);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto loop = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= block_count) return;
            try {
                run_block(b);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int i = 1; i < workers; ++i) pool.emplace_back(loop);
    loop();
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace detail

}  // namespace ifsq
