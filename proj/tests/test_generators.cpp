#include <doctest.h>

#include "core/enumeration.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "support.hpp"

using namespace gia;
using testing::G;

TEST_CASE("S(d) three ways") {
  for (int d = 1; d <= 40; ++d) {
    CHECK(s_sum(d) == s_closed(d));
    CHECK(s_recursive(d) == s_closed(d));
  }
  CHECK(s_closed(3) == -7);
}

TEST_CASE("separators") {
  const GPoset p3 = build_full_poset(3);
  const std::vector<IsoClass> k2{G("0-1")};
  CHECK(is_separator(k2, p3).is_separator);
  const GPoset p4 = build_full_poset(4);
  const SeparatorReport r = is_separator(k2, p4);
  CHECK_FALSE(r.is_separator);
  REQUIRE(r.witness);
  CHECK(p4[r.witness->first].degree() == p4[r.witness->second].degree());
  const std::vector<IsoClass> three{G("0-1"), G("0-1,0-2"), G("0-1,0-2,1-2")};
  CHECK(is_separator(three, p4).is_separator);
  const MinimalSeparators m = minimal_separators(p4);
  CHECK(m.size == 3);
  for (const auto& s : m.sets) CHECK(is_separator(s, p4).is_separator);
}

TEST_CASE("inseparable pairs agree on the span and differ as graphs") {
  for (int d = 1; d <= 3; ++d) {
    const InseparablePair r = inseparable_pair(d);
    CHECK(r.t_parts != r.u_parts);
    CHECK(BigInt(r.degree) <= r.degree_bound);
    if (!r.t_graph || !r.u_graph) continue;
    const LabeledGraph& t = *r.t_graph;
    const LabeledGraph& u = *r.u_graph;
    for (const auto& g : r.span.members()) CHECK(count_subgraphs(g, t) == count_subgraphs(g, u));
    CHECK(count_subgraphs(r.next_generator, t) != count_subgraphs(r.next_generator, u));
  }
}

TEST_CASE("component reconstruction") {
  const auto list = connected_classes(4);
  CHECK(list.size() == 1 + 1 + 3 + 5);
  std::mt19937_64 rng(31);
  for (int k = 0; k < 50; ++k) {
    ComponentMultiset parts;
    for (int t = 0; t < 3; ++t) ++parts[list[rng() % list.size()]];
    if (total_support(parts) > kMaxVertices) continue;
    const LabeledGraph host = disjoint_union_graph(parts);
    const auto mult = reconstruct_components(host, list);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto it = parts.find(list[i]);
      CHECK(mult[i] == (it == parts.end() ? 0 : it->second));
    }
  }
  const std::vector<IsoClass> short_list{G("0-1"), G("0-1,0-2")};
  CHECK_THROWS_AS(reconstruct_components(parse_edge_list("0-1,0-2,1-2"), short_list), Error);
}

TEST_CASE("connected class counts") {
  const auto f = connected_counts(6).f;
  const std::vector<int> expected = {0, 1, 1, 3, 5, 12, 30};
  for (int d = 1; d <= 6; ++d) {
    CHECK(f[static_cast<std::size_t>(d)] == expected[static_cast<std::size_t>(d)]);
    CHECK(connected_classes(d).size() == connected_classes(d - 1).size() + static_cast<std::size_t>(expected[static_cast<std::size_t>(d)]));
  }
}

TEST_CASE("half-degree system recovers the upper rows") {
  for (int n = 2; n <= 5; ++n) CHECK(half_degree_system_check(n).ok);
}

TEST_CASE("derived relations hold") {
  const GPoset p = build_full_poset(4);
  const std::vector<std::pair<std::string, IsoClass>> basis = {
      {"g1", G("0-1")}, {"g3", G("0-1,0-2")}, {"g5", G("0-1,0-2,0-3")}};
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(derive_relation(p[i], basis, p).holds);
}
