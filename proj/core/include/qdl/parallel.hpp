#pragma once

#include <cstddef>
#include <functional>

namespace qdl {

// Runs body(i) for every i in [0, count) on up to `threads` worker threads.
// Work is handed out in small chunks; body must only write to slots owned by
// its index. The first exception thrown by any worker is rethrown here.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

// Thread count from the QDL_THREADS environment variable, or 1.
unsigned default_thread_count();

}  // namespace qdl
