#ifndef ETOMO_CONCURRENCY_HPP
#define ETOMO_CONCURRENCY_HPP

#include <cstdint>
#include <functional>

namespace etomo {

// Worker count: min(hardware, ETOMO_THREADS) with a floor of 1.
int worker_count();

// Evenly chunked parallel map over [begin, end). The callable receives
// disjoint [lo, hi) ranges; outputs must go to disjoint slots so results
// are deterministic regardless of scheduling.
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& body);

} // namespace etomo

#endif
