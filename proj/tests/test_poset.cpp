#include <doctest.h>

#include <filesystem>
#include <set>

#include "core/cache.hpp"
#include "core/enumeration.hpp"
#include "core/error.hpp"
#include "core/poset.hpp"
#include "support.hpp"

using namespace gia;
using testing::G;

namespace {

// every labeled graph on n vertices, reduced by the brute-force canonical form
std::set<std::pair<int, EdgeBits>> brute_classes(int n) {
  std::set<std::pair<int, EdgeBits>> out;
  const int slots = n * (n - 1) / 2;
  for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
    LabeledGraph g(n);
    for (int s = 0; s < slots; ++s)
      if (mask >> s & 1) {
        auto [i, j] = slot_pair(s);
        g.add_edge(i, j);
      }
    out.insert({g.edge_count(), testing::brute_min_bits(g)});
  }
  return out;
}

}  // namespace

TEST_CASE("full poset matches exhaustive classification") {
  for (int n = 1; n <= 5; ++n) {
    const GPoset p = build_full_poset(n);
    const auto brute = brute_classes(n);
    REQUIRE(p.size() == brute.size());
    std::set<std::pair<int, EdgeBits>> ours;
    for (const auto& g : p.members()) ours.insert({g.degree(), g.canon().bits()});
    CHECK(ours == brute);
  }
}

TEST_CASE("poset sizes agree with cycle-index counts") {
  for (int n = 1; n <= 7; ++n) {
    const GPoset p = build_full_poset(n);
    const auto counts = graph_counts(n);
    std::vector<std::size_t> by_degree(counts.size(), 0);
    for (int d : p.degrees()) ++by_degree[static_cast<std::size_t>(d)];
    for (std::size_t d = 0; d < counts.size(); ++d) CHECK(BigInt(static_cast<unsigned long>(by_degree[d])) == counts[d]);
  }
  CHECK(build_full_poset(4).size() == 11);
  CHECK(build_full_poset(5).size() == 34);
}

TEST_CASE("E(4) order") {
  const GPoset p = build_full_poset(4);
  const std::vector<std::string> expected = {"?", "A_", "Bo", "CK", "Bw", "Cs", "Ck", "C{", "C]", "C}", "C~"};
  REQUIRE(p.size() == expected.size());
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i].graph6() == expected[i]);
  CHECK(verify_subgraph_complete(p));
  CHECK(connected_members(p).size() == 9);
}

TEST_CASE("degree cap and predicate") {
  const GPoset p = build_full_poset(5, 3);
  CHECK(p.max_degree() == 3);
  const GPoset c = build_full_poset(5, -1, [](const IsoClass& g) { return g.cv() <= 3; });
  CHECK(c.size() == 4);
  CHECK_THROWS_AS(build_full_poset(7, -1, {}, 100), Error);
}

TEST_CASE("span poset of connected generators") {
  const std::vector<IsoClass> gens = {G("0-1"), G("0-1,0-2")};
  const GPoset s = build_span_poset(gens, 2);
  CHECK(s.contains(G("0-1,2-3")));
  CHECK(s.contains(G("0-1,0-2")));
  CHECK_FALSE(s.complete());
  CHECK(s.size() == 4);
}

TEST_CASE("poset text round trip and cache") {
  const GPoset p = build_full_poset(5);
  const GPoset q = read_poset(write_poset(p), 5, true);
  CHECK(q.members() == p.members());
  const std::string dir = "gia-test-cache";
  std::filesystem::remove_all(dir);
  const GPoset first = cached_full_poset(5, -1, dir);
  CHECK(std::filesystem::exists(dir + "/full-n5-d10.g6"));
  const GPoset second = cached_full_poset(5, -1, dir);
  CHECK(first.members() == second.members());
  CHECK(second.members() == p.members());
  std::filesystem::remove_all(dir);
}
