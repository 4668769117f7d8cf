#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "core/graph.hpp"

namespace testing {

inline gia::IsoClass G(const char* edges) { return gia::canonicalize(gia::parse_edge_list(edges)); }

inline gia::LabeledGraph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  gia::LabeledGraph h(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) h.add_edge(i, j);
  return h;
}

/// Applies vertex map p (old -> new) to an edge bitset on n vertices.
inline gia::EdgeBits relabel_bits(const gia::LabeledGraph& g, const std::vector<int>& p) {
  gia::EdgeBits out = 0;
  for (auto [i, j] : g.edges()) out |= gia::slot_bit(gia::pair_slot(p[i], p[j]));
  return out;
}

/// Smallest packed bitset over all relabelings of the non-isolated part.
inline gia::EdgeBits brute_min_bits(const gia::LabeledGraph& g) {
  const gia::LabeledGraph p = g.packed();
  std::vector<int> perm(static_cast<std::size_t>(p.order()));
  std::iota(perm.begin(), perm.end(), 0);
  gia::EdgeBits best = ~gia::EdgeBits{0};
  do best = std::min(best, relabel_bits(p, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Edge subsets of host of the right size that are isomorphic to pattern, by exhaustive subset scan.
inline std::uint64_t brute_subgraph_count(const gia::IsoClass& pattern, const gia::LabeledGraph& host) {
  const auto edges = host.edges();
  const int m = static_cast<int>(edges.size());
  const int k = pattern.degree();
  if (k > m) return 0;
  if (k == 0) return 1;
  std::vector<bool> pick(static_cast<std::size_t>(m), false);
  std::fill(pick.end() - k, pick.end(), true);
  std::uint64_t count = 0;
  const gia::EdgeBits target = brute_min_bits(pattern.canon());
  do {
    gia::LabeledGraph sub(host.order());
    for (int e = 0; e < m; ++e)
      if (pick[static_cast<std::size_t>(e)]) sub.add_edge(edges[static_cast<std::size_t>(e)].first, edges[static_cast<std::size_t>(e)].second);
    if (sub.packed().order() == pattern.cv() && brute_min_bits(sub) == target) ++count;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

}  // namespace testing
