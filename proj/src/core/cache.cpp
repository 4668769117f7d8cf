#include "cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace gia {

std::optional<std::string> resolve_cache_dir(const std::string& requested) {
  if (!requested.empty()) return requested;
  if (const char* env = std::getenv("GIA_CACHE_DIR"); env && *env) return std::string(env);
  return std::nullopt;
}

GPoset cached_full_poset(int n, int max_degree, const std::string& cache_dir) {
  const int full = n * (n - 1) / 2;
  if (max_degree < 0 || max_degree > full) max_degree = full;
  const auto dir = resolve_cache_dir(cache_dir);
  if (!dir) return build_full_poset(n, max_degree);
  namespace fs = std::filesystem;
  const fs::path file = fs::path(*dir) / ("full-n" + std::to_string(n) + "-d" + std::to_string(max_degree) + ".g6");
  if (fs::exists(file)) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    GPoset p = read_poset(buf.str(), n, true);
    require(verify_subgraph_complete(p), ErrorCode::Precondition, "cached poset " + file.string() + " is not complete");
    return p;
  }
  GPoset p = build_full_poset(n, max_degree);
  std::error_code ec;
  fs::create_directories(*dir, ec);
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << write_poset(p);
  }
  fs::rename(tmp, file, ec);
  return p;
}

}  // namespace gia
