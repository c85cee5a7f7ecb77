#pragma once

#include <cstddef>
#include <functional>

namespace oqbm {

// 0 selects std::thread::hardware_concurrency().
void set_thread_count(std::size_t n);
std::size_t thread_count();

// Calls body(begin, end) on disjoint chunks of [0, n). Exceptions from workers are rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 256);

}  // namespace oqbm
