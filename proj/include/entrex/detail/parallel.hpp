#pragma once

#include <cstddef>
#include <functional>

namespace entrex::detail {

/// Run fn(i) for i in [begin, end) across hardware threads with a static
/// partition. Callers write disjoint outputs per index, so the result cannot
/// depend on scheduling. Falls back to a plain loop for small ranges.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn);

}  // namespace entrex::detail
