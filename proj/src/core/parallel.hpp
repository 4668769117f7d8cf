#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace gia {

/// Worker count used by parallel_for; 1 runs inline.
void set_parallelism(int width);
int parallelism();

/// Calls body(i) for i in [0, count). Results must be written by index so the
/// outcome does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace gia
