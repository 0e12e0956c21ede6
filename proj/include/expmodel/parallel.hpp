#pragma once

#include <cstddef>
#include <functional>

namespace expmodel {

// Worker count from EXPMODEL_THREADS (unset or 0 = hardware concurrency).
[[nodiscard]] std::size_t thread_count();

// Calls body(i) for i in [0, n) over contiguous static chunks. body must only
// write state owned by index i, so results do not depend on the split.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace expmodel
