#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace nilext {

/// Worker count: NILEXT_THREADS if set and positive, else the hardware count.
inline unsigned default_threads()
{
    if (auto const *env = std::getenv("NILEXT_THREADS"))
    {
        try
        {
            auto v = std::stol(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        }
        catch (...)
        {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, total) into contiguous blocks and calls fn(block_index, begin, end)
/// for each, on up to `threads` workers. Callers collect results per block and
/// merge them in block order, which keeps output independent of the thread count.
template <class Fn>
void parallel_blocks(std::uint64_t total, unsigned threads, std::uint64_t blocks, Fn &&fn)
{
    if (total == 0)
        return;
    blocks = std::max<std::uint64_t>(1, std::min(blocks, total));
    auto block_begin = [&](std::uint64_t b) { return total / blocks * b + std::min(b, total % blocks); };
    if (threads <= 1 || blocks == 1)
    {
        for (std::uint64_t b = 0; b < blocks; ++b)
            fn(b, block_begin(b), block_begin(b + 1));
        return;
    }
    std::mutex m;
    std::uint64_t next = 0;
    std::exception_ptr error;
    auto worker = [&] {
        for (;;)
        {
            std::uint64_t b;
            {
                std::lock_guard lock(m);
                if (next == blocks || error)
                    return;
                b = next++;
            }
            try
            {
                fn(b, block_begin(b), block_begin(b + 1));
            }
            catch (...)
            {
                std::lock_guard lock(m);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::uint64_t>(threads, blocks); ++t)
        pool.emplace_back(worker);
    for (auto &th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace nilext
