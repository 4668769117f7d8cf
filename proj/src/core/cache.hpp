#pragma once

#include <optional>
#include <string>

#include "poset.hpp"

namespace gia {

/// Directory for cached posets: explicit argument, else GIA_CACHE_DIR, else none.
std::optional<std::string> resolve_cache_dir(const std::string& requested);

/// E(n, d) read from "<dir>/full-n<n>-d<d>.g6" when present, otherwise built and written there.
GPoset cached_full_poset(int n, int max_degree, const std::string& cache_dir);

}  // namespace gia
