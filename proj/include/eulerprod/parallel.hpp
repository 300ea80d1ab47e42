#pragma once

#include <cstddef>
#include <functional>

namespace eulerprod {

// Runs fn(i) for i in [0, n).  Callers write results into slot i so the
// outcome does not depend on scheduling.  The exception raised for the
// smallest index is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn);

} // namespace eulerprod
