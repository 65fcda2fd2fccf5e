#pragma once

#include <cstddef>
#include <functional>

namespace rgw {

// Runs fn(begin, end) over [0, n) split into contiguous chunks, one worker
// thread per chunk. threads <= 1 runs inline. Chunks must be independent.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace rgw
