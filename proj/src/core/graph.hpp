#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perm.hpp"

namespace gia {

/// Edge bitset over the C(16,2) = 120 pair slots; slot of (i,j), i<j, is j(j-1)/2 + i.
using EdgeBits = unsigned __int128;

inline constexpr int kMaxVertices = 16;
inline constexpr int kMaxAutomorphismSupport = 10;
inline constexpr int kMaxPairSlots = kMaxVertices * (kMaxVertices - 1) / 2;

constexpr int pair_slot(int i, int j) { return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j; }
constexpr EdgeBits slot_bit(int slot) { return EdgeBits{1} << slot; }
/// Endpoints (i,j), i<j, of a pair slot.
std::pair<int, int> slot_pair(int slot);

int popcount(EdgeBits bits);
int lowest_slot(EdgeBits bits);
/// Mask of the C(n,2) slots of K_n.
EdgeBits complete_bits(int n);

/// Simple graph on the vertex set [0..n), n <= 16.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n);
  LabeledGraph(int n, EdgeBits bits);
  LabeledGraph(int n, std::span<const std::pair<int, int>> edges);
  LabeledGraph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  EdgeBits bits() const { return bits_; }
  int edge_count() const { return popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);
  void remove_edge(int i, int j);
  std::vector<std::pair<int, int>> edges() const;

  /// Vertices incident to at least one edge, as a bitmask.
  std::uint32_t support_mask() const;
  /// cv(g): number of vertices incident to an edge.
  int support_size() const;
  int max_support_vertex() const;
  int degree(int v) const;
  std::array<std::uint32_t, kMaxVertices> adjacency() const;

  LabeledGraph relabeled(const Permutation& p) const;
  /// Support vertices relabeled to [0..cv) in increasing order; isolated vertices dropped.
  LabeledGraph packed() const;
  /// Same edges on a different vertex count (must still contain the support).
  LabeledGraph with_order(int n) const;

  bool operator==(const LabeledGraph&) const = default;

 private:
  int n_ = 0;
  EdgeBits bits_ = 0;
};

/// Isomorphism class: canonical packed representative plus cached metadata.
class IsoClass {
 public:
  IsoClass() = default;

  const LabeledGraph& canon() const { return canon_; }
  EdgeBits bits() const { return canon_.bits(); }
  int degree() const { return canon_.edge_count(); }
  int cv() const { return canon_.order(); }
  /// Number of edge-preserving permutations of the support (memoized, cv <= 10).
  std::uint64_t aut_support() const;
  std::string graph6() const;

  friend bool operator==(const IsoClass& a, const IsoClass& b) { return a.bits() == b.bits(); }
  /// Degree-major, then canonical bitset ascending.
  friend std::strong_ordering operator<=>(const IsoClass& a, const IsoClass& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (a.bits() < b.bits()) return std::strong_ordering::less;
    if (a.bits() > b.bits()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  friend IsoClass canonicalize(const LabeledGraph& g);
  friend IsoClass iso_class_from_canonical(const LabeledGraph& canon);
  explicit IsoClass(LabeledGraph canon) : canon_(std::move(canon)) {}

  LabeledGraph canon_;
};

/// Vertex v goes to label result[v]; only support vertices are labeled, others get -1.
std::vector<int> canonical_labeling(const LabeledGraph& g);
IsoClass canonicalize(const LabeledGraph& g);
/// Wraps a graph already known to be in canonical form (checked).
IsoClass iso_class_from_canonical(const LabeledGraph& canon);
bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

/// Edge-preserving permutations of the support, by backtracking over vertex maps.
std::uint64_t support_automorphism_count(const LabeledGraph& g);
/// All automorphisms of the graph as permutations of [0..order()).
std::vector<Permutation> automorphisms(const LabeledGraph& g);

/// Number of edge subsets of host forming a copy of pattern (subset enumeration).
std::uint64_t count_subgraphs(const IsoClass& pattern, const LabeledGraph& host);
std::uint64_t count_subgraphs(const IsoClass& pattern, const IsoClass& host);
/// The copies themselves, as edge subsets of host.
std::vector<EdgeBits> subgraph_copies(const IsoClass& pattern, const LabeledGraph& host);
/// Injective edge-preserving maps of the pattern support into host.
std::uint64_t count_embeddings(const IsoClass& pattern, const LabeledGraph& host);
/// Second counting route: embeddings / aut_support.
std::uint64_t count_subgraphs_by_injection(const IsoClass& pattern, const LabeledGraph& host);

/// Edges of K_n missing from g.
LabeledGraph complement(const LabeledGraph& g, int n);

using ComponentMultiset = std::map<IsoClass, int>;

/// Parts placed on consecutive disjoint vertex ranges (not canonicalized).
LabeledGraph disjoint_union_graph(const ComponentMultiset& parts);
LabeledGraph disjoint_union_graph(std::span<const IsoClass> parts);
IsoClass disjoint_union(const ComponentMultiset& parts);
IsoClass disjoint_union(std::span<const IsoClass> parts);
int total_support(const ComponentMultiset& parts);
int total_degree(const ComponentMultiset& parts);

ComponentMultiset connected_components(const LabeledGraph& g);
/// Edge-connected with at least one edge.
bool is_connected(const LabeledGraph& g);

LabeledGraph parse_graph6(std::string_view text);
std::string emit_graph6(const LabeledGraph& g);
/// "i-j,i-j,..."; n defaults to one more than the largest endpoint.
LabeledGraph parse_edge_list(std::string_view text, int n = -1);
std::string emit_edge_list(const LabeledGraph& g);
/// graph6 or edge list, detected from the character set.
LabeledGraph parse_graph(std::string_view text);

}  // namespace gia
