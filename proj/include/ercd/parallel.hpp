#pragma once

#include <cstddef>
#include <functional>

namespace ercd {

// Worker count: ERCD_THREADS caps it, hardware concurrency is the default.
int thread_count();

// Runs fn(i) for i in [0, n). Each index writes only its own slot, so the
// result is identical for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ercd
