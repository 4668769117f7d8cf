#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "error.hpp"

namespace gia {

namespace {

struct BitsHash {
  std::size_t operator()(EdgeBits b) const noexcept {
    const auto lo = static_cast<std::uint64_t>(b);
    const auto hi = static_cast<std::uint64_t>(b >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ull));
  }
};

/// Idempotent concurrent memo: identical keys always map to identical values.
template <class Value>
class Memo {
 public:
  bool find(EdgeBits key, Value& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void store(EdgeBits key, const Value& value) {
    std::unique_lock lock(mutex_);
    if (table_.size() >= kLimit) table_.clear();
    table_.emplace(key, value);
  }

 private:
  static constexpr std::size_t kLimit = std::size_t{1} << 21;
  mutable std::shared_mutex mutex_;
  std::unordered_map<EdgeBits, Value, BitsHash> table_;
};

Memo<EdgeBits>& canon_memo() {
  static Memo<EdgeBits> memo;
  return memo;
}

Memo<std::uint64_t>& aut_memo() {
  static Memo<std::uint64_t> memo;
  return memo;
}

struct SlotTable {
  std::array<std::pair<int, int>, kMaxPairSlots> pairs{};
  SlotTable() {
    for (int j = 1; j < kMaxVertices; ++j)
      for (int i = 0; i < j; ++i) pairs[static_cast<std::size_t>(pair_slot(i, j))] = {i, j};
  }
};

const SlotTable& slot_table() {
  static const SlotTable table;
  return table;
}

void check_vertex(int v, int n) {
  require(v >= 0 && v < n, ErrorCode::InvalidArgument,
          "vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
}

template <class F>
void for_each_slot(EdgeBits bits, F&& f) {
  while (bits) {
    const int s = lowest_slot(bits);
    f(s);
    bits &= bits - 1;
  }
}

constexpr std::size_t kCanonicalBranchBudget = 2'000'000;

/// Order of support vertices giving the row-major lexicographically least adjacency
/// matrix; reversing it yields the numerically least colex bitset.
std::vector<int> least_row_major_order(const std::array<std::uint32_t, kMaxVertices>& adj, int v) {
  struct Branch {
    std::vector<int> order;
    std::vector<std::uint32_t> cells;
  };
  if (v == 0) return {};
  std::vector<Branch> live;
  live.push_back({{}, {(std::uint32_t{1} << v) - 1}});
  std::size_t spent = 0;
  for (int k = 0; k < v; ++k) {
    std::vector<Branch> next;
    std::uint32_t best = UINT32_MAX;
    for (const Branch& b : live) {
      const std::uint32_t first = b.cells.front();
      std::uint32_t tried = 0;
      for (std::uint32_t rest = first; rest; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        const std::uint32_t ubit = std::uint32_t{1} << u;
        bool twin = false;
        for (std::uint32_t t = tried; t; t &= t - 1) {
          const int w = std::countr_zero(t);
          const std::uint32_t wbit = std::uint32_t{1} << w;
          if ((adj[static_cast<std::size_t>(u)] & ~wbit) == (adj[static_cast<std::size_t>(w)] & ~ubit)) {
            twin = true;
            break;
          }
        }
        tried |= ubit;
        if (twin) continue;
        const std::uint32_t nbrs = adj[static_cast<std::size_t>(u)];
        std::uint32_t row = 0;
        for (std::size_t c = 0; c < b.cells.size(); ++c) {
          const std::uint32_t cell = c == 0 ? (b.cells[c] & ~ubit) : b.cells[c];
          const int nn = std::popcount(cell & ~nbrs);
          const int nb = std::popcount(cell & nbrs);
          row = (row << (nn + nb)) | ((std::uint32_t{1} << nb) - 1);
        }
        if (row > best) continue;
        if (row < best) {
          best = row;
          next.clear();
        }
        Branch child;
        child.order = b.order;
        child.order.push_back(u);
        for (std::size_t c = 0; c < b.cells.size(); ++c) {
          const std::uint32_t cell = c == 0 ? (b.cells[c] & ~ubit) : b.cells[c];
          if (const std::uint32_t lo = cell & ~nbrs) child.cells.push_back(lo);
          if (const std::uint32_t hi = cell & nbrs) child.cells.push_back(hi);
        }
        next.push_back(std::move(child));
        require(++spent <= kCanonicalBranchBudget, ErrorCode::CapExceeded,
                "canonical form search exceeded its branch budget");
      }
    }
    live = std::move(next);
  }
  return live.front().order;
}

/// Enumerates |k|-edge subsets of host matching pattern's degree profile.
void enumerate_copies(const IsoClass& pattern, const LabeledGraph& host,
                      const std::function<void(EdgeBits)>& visit) {
  const int k = pattern.degree();
  if (k == 0) {
    visit(0);
    return;
  }
  const auto host_edges = host.edges();
  const int m = static_cast<int>(host_edges.size());
  if (k > m) return;
  const int cv = pattern.cv();
  std::vector<int> pattern_degrees;
  for (int v = 0; v < cv; ++v) pattern_degrees.push_back(pattern.canon().degree(v));
  std::sort(pattern_degrees.begin(), pattern_degrees.end());
  const int max_degree = pattern_degrees.back();

  std::array<int, kMaxVertices> deg{};
  int touched = 0;
  EdgeBits chosen = 0;
  const int n = host.order();

  std::function<void(int, int)> recurse = [&](int start, int left) {
    if (left == 0) {
      if (touched != cv) return;
      std::vector<int> seq;
      for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)]) seq.push_back(deg[static_cast<std::size_t>(v)]);
      std::sort(seq.begin(), seq.end());
      if (seq != pattern_degrees) return;
      if (canonicalize(LabeledGraph(n, chosen)).bits() == pattern.bits()) visit(chosen);
      return;
    }
    for (int e = start; e <= m - left; ++e) {
      const auto [a, b] = host_edges[static_cast<std::size_t>(e)];
      auto& da = deg[static_cast<std::size_t>(a)];
      auto& db = deg[static_cast<std::size_t>(b)];
      if (da == max_degree || db == max_degree) continue;
      const int fresh = (da == 0) + (db == 0);
      if (touched + fresh > cv) continue;
      ++da;
      ++db;
      touched += fresh;
      chosen |= slot_bit(pair_slot(a, b));
      recurse(e + 1, left - 1);
      chosen &= ~slot_bit(pair_slot(a, b));
      touched -= fresh;
      --da;
      --db;
    }
  };
  recurse(0, k);
}

template <class Visit>
void enumerate_vertex_maps(const LabeledGraph& g, bool automorphisms_only, Visit&& visit) {
  const LabeledGraph p = g.packed();
  const int v = p.order();
  const auto adj = p.adjacency();
  std::vector<int> image(static_cast<std::size_t>(v), -1);
  std::uint32_t used = 0;
  std::function<void(int)> recurse = [&](int u) {
    if (u == v) {
      visit(image);
      return;
    }
    for (int t = 0; t < v; ++t) {
      if (used & (std::uint32_t{1} << t)) continue;
      if (std::popcount(adj[static_cast<std::size_t>(u)]) != std::popcount(adj[static_cast<std::size_t>(t)])) continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w) {
        const bool a = adj[static_cast<std::size_t>(u)] & (std::uint32_t{1} << w);
        const bool b = adj[static_cast<std::size_t>(t)] & (std::uint32_t{1} << image[static_cast<std::size_t>(w)]);
        ok = a == b;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(u)] = t;
      used |= std::uint32_t{1} << t;
      recurse(u + 1);
      used &= ~(std::uint32_t{1} << t);
    }
  };
  (void)automorphisms_only;
  recurse(0);
}

}  // namespace

std::pair<int, int> slot_pair(int slot) {
  require(slot >= 0 && slot < kMaxPairSlots, ErrorCode::InvalidArgument, "pair slot out of range");
  return slot_table().pairs[static_cast<std::size_t>(slot)];
}

int popcount(EdgeBits bits) {
  return std::popcount(static_cast<std::uint64_t>(bits)) + std::popcount(static_cast<std::uint64_t>(bits >> 64));
}

int lowest_slot(EdgeBits bits) {
  const auto lo = static_cast<std::uint64_t>(bits);
  if (lo) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(bits >> 64));
}

EdgeBits complete_bits(int n) {
  const int slots = n * (n - 1) / 2;
  if (slots == 0) return 0;
  return slots >= 128 ? ~EdgeBits{0} : (EdgeBits{1} << slots) - 1;
}

LabeledGraph::LabeledGraph(int n) : n_(n) {
  require(n >= 0 && n <= kMaxVertices, ErrorCode::CapExceeded,
          "vertex count " + std::to_string(n) + " outside [0," + std::to_string(kMaxVertices) + "]");
}

LabeledGraph::LabeledGraph(int n, EdgeBits bits) : LabeledGraph(n) {
  require((bits & ~complete_bits(n)) == 0, ErrorCode::InvalidArgument, "edge bits outside K_n");
  bits_ = bits;
}

LabeledGraph::LabeledGraph(int n, std::span<const std::pair<int, int>> edges) : LabeledGraph(n) {
  for (auto [i, j] : edges) add_edge(i, j);
}

LabeledGraph::LabeledGraph(int n, std::initializer_list<std::pair<int, int>> edges)
    : LabeledGraph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

bool LabeledGraph::has_edge(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) return false;
  return (bits_ & slot_bit(pair_slot(i, j))) != 0;
}

void LabeledGraph::add_edge(int i, int j) {
  check_vertex(i, n_);
  check_vertex(j, n_);
  require(i != j, ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(i));
  bits_ |= slot_bit(pair_slot(i, j));
}

void LabeledGraph::remove_edge(int i, int j) {
  check_vertex(i, n_);
  check_vertex(j, n_);
  if (i != j) bits_ &= ~slot_bit(pair_slot(i, j));
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for_each_slot(bits_, [&](int s) { out.push_back(slot_pair(s)); });
  return out;
}

std::uint32_t LabeledGraph::support_mask() const {
  std::uint32_t mask = 0;
  for_each_slot(bits_, [&](int s) {
    auto [i, j] = slot_pair(s);
    mask |= (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
  });
  return mask;
}

int LabeledGraph::support_size() const { return std::popcount(support_mask()); }

int LabeledGraph::max_support_vertex() const {
  const std::uint32_t mask = support_mask();
  return mask ? 31 - std::countl_zero(mask) : -1;
}

int LabeledGraph::degree(int v) const { return std::popcount(adjacency()[static_cast<std::size_t>(v)]); }

std::array<std::uint32_t, kMaxVertices> LabeledGraph::adjacency() const {
  std::array<std::uint32_t, kMaxVertices> adj{};
  for_each_slot(bits_, [&](int s) {
    auto [i, j] = slot_pair(s);
    adj[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
    adj[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
  });
  return adj;
}

LabeledGraph LabeledGraph::relabeled(const Permutation& p) const {
  require(p.size() == n_, ErrorCode::InvalidArgument, "relabeling permutation has wrong degree");
  EdgeBits out = 0;
  for_each_slot(bits_, [&](int s) {
    auto [i, j] = slot_pair(s);
    out |= slot_bit(pair_slot(p(i), p(j)));
  });
  return LabeledGraph(n_, out);
}

LabeledGraph LabeledGraph::packed() const {
  const std::uint32_t mask = support_mask();
  std::array<int, kMaxVertices> label{};
  int next = 0;
  for (int v = 0; v < n_; ++v)
    if (mask & (std::uint32_t{1} << v)) label[static_cast<std::size_t>(v)] = next++;
  EdgeBits out = 0;
  for_each_slot(bits_, [&](int s) {
    auto [i, j] = slot_pair(s);
    out |= slot_bit(pair_slot(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]));
  });
  return LabeledGraph(next, out);
}

LabeledGraph LabeledGraph::with_order(int n) const {
  require(max_support_vertex() < n, ErrorCode::InvalidArgument,
          "graph uses vertex " + std::to_string(max_support_vertex()) + ", cannot live on " + std::to_string(n) +
              " vertices");
  return LabeledGraph(n, bits_);
}

std::uint64_t IsoClass::aut_support() const {
  std::uint64_t value = 0;
  if (aut_memo().find(bits(), value)) return value;
  value = support_automorphism_count(canon_);
  aut_memo().store(bits(), value);
  return value;
}

std::string IsoClass::graph6() const { return emit_graph6(canon_); }

std::vector<int> canonical_labeling(const LabeledGraph& g) {
  const std::uint32_t mask = g.support_mask();
  std::vector<int> support;
  for (int v = 0; v < g.order(); ++v)
    if (mask & (std::uint32_t{1} << v)) support.push_back(v);
  const LabeledGraph p = g.packed();
  const int v = p.order();
  const auto order = least_row_major_order(p.adjacency(), v);
  std::vector<int> labels(static_cast<std::size_t>(g.order()), -1);
  for (int k = 0; k < v; ++k) labels[static_cast<std::size_t>(support[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])])] = v - 1 - k;
  return labels;
}

IsoClass canonicalize(const LabeledGraph& g) {
  const LabeledGraph p = g.packed();
  EdgeBits canon = 0;
  if (canon_memo().find(p.bits(), canon)) return IsoClass(LabeledGraph(p.order(), canon));
  const int v = p.order();
  const auto order = least_row_major_order(p.adjacency(), v);
  std::array<int, kMaxVertices> label{};
  for (int k = 0; k < v; ++k) label[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = v - 1 - k;
  for_each_slot(p.bits(), [&](int s) {
    auto [i, j] = slot_pair(s);
    canon |= slot_bit(pair_slot(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]));
  });
  canon_memo().store(p.bits(), canon);
  return IsoClass(LabeledGraph(v, canon));
}

IsoClass iso_class_from_canonical(const LabeledGraph& canon) {
  IsoClass c = canonicalize(canon);
  require(c.canon() == canon, ErrorCode::InvalidArgument, "graph is not in canonical form");
  return c;
}

bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b) { return canonicalize(a) == canonicalize(b); }

std::uint64_t support_automorphism_count(const LabeledGraph& g) {
  require(g.support_size() <= kMaxAutomorphismSupport, ErrorCode::CapExceeded,
          "automorphism enumeration needs cv <= " + std::to_string(kMaxAutomorphismSupport));
  std::uint64_t count = 0;
  enumerate_vertex_maps(g, true, [&](const std::vector<int>&) { ++count; });
  return count;
}

std::vector<Permutation> automorphisms(const LabeledGraph& g) {
  require(g.support_size() <= kMaxAutomorphismSupport, ErrorCode::CapExceeded,
          "automorphism enumeration needs cv <= " + std::to_string(kMaxAutomorphismSupport));
  const std::uint32_t mask = g.support_mask();
  std::vector<int> support;
  for (int v = 0; v < g.order(); ++v)
    if (mask & (std::uint32_t{1} << v)) support.push_back(v);
  std::vector<Permutation> out;
  enumerate_vertex_maps(g, true, [&](const std::vector<int>& image) {
    auto p = Permutation::identity(g.order());
    std::vector<int> images(p.images().begin(), p.images().end());
    for (std::size_t k = 0; k < image.size(); ++k)
      images[static_cast<std::size_t>(support[k])] = support[static_cast<std::size_t>(image[k])];
    out.emplace_back(std::move(images));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_subgraphs(const IsoClass& pattern, const LabeledGraph& host) {
  std::uint64_t count = 0;
  enumerate_copies(pattern, host, [&](EdgeBits) { ++count; });
  return count;
}

std::uint64_t count_subgraphs(const IsoClass& pattern, const IsoClass& host) {
  return count_subgraphs(pattern, host.canon());
}

std::vector<EdgeBits> subgraph_copies(const IsoClass& pattern, const LabeledGraph& host) {
  std::vector<EdgeBits> out;
  enumerate_copies(pattern, host, [&](EdgeBits b) { out.push_back(b); });
  return out;
}

std::uint64_t count_embeddings(const IsoClass& pattern, const LabeledGraph& host) {
  const int cv = pattern.cv();
  if (cv == 0) return 1;
  const auto padj = pattern.canon().adjacency();
  const auto hadj = host.adjacency();
  const int n = host.order();
  // Visit pattern vertices so each (after the first) has an earlier neighbour when possible.
  std::vector<int> order;
  std::uint32_t placed = 0;
  while (static_cast<int>(order.size()) < cv) {
    int pick = -1;
    int best = -1;
    for (int u = 0; u < cv; ++u) {
      if (placed & (std::uint32_t{1} << u)) continue;
      const int score = std::popcount(padj[static_cast<std::size_t>(u)] & placed) * 32 +
                        std::popcount(padj[static_cast<std::size_t>(u)]);
      if (score > best) {
        best = score;
        pick = u;
      }
    }
    order.push_back(pick);
    placed |= std::uint32_t{1} << pick;
  }
  std::vector<int> image(static_cast<std::size_t>(cv), -1);
  std::uint32_t used = 0;
  std::uint64_t count = 0;
  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (depth == order.size()) {
      ++count;
      return;
    }
    const int u = order[depth];
    for (int t = 0; t < n; ++t) {
      if (used & (std::uint32_t{1} << t)) continue;
      if (std::popcount(hadj[static_cast<std::size_t>(t)]) < std::popcount(padj[static_cast<std::size_t>(u)])) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int w = order[d];
        if (padj[static_cast<std::size_t>(u)] & (std::uint32_t{1} << w))
          ok = (hadj[static_cast<std::size_t>(t)] >> image[static_cast<std::size_t>(w)]) & 1u;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(u)] = t;
      used |= std::uint32_t{1} << t;
      recurse(depth + 1);
      used &= ~(std::uint32_t{1} << t);
    }
  };
  recurse(0);
  return count;
}

std::uint64_t count_subgraphs_by_injection(const IsoClass& pattern, const LabeledGraph& host) {
  const std::uint64_t maps = count_embeddings(pattern, host);
  const std::uint64_t aut = pattern.aut_support();
  require(maps % aut == 0, ErrorCode::Internal, "embedding count not divisible by automorphism count");
  return maps / aut;
}

LabeledGraph complement(const LabeledGraph& g, int n) {
  require(n >= 0 && n <= kMaxVertices, ErrorCode::CapExceeded, "complement vertex count out of range");
  require(g.max_support_vertex() < n, ErrorCode::InvalidArgument,
          "graph uses vertex " + std::to_string(g.max_support_vertex()) + " outside K_" + std::to_string(n));
  return LabeledGraph(n, complete_bits(n) & ~g.bits());
}

int total_support(const ComponentMultiset& parts) {
  int total = 0;
  for (const auto& [part, mult] : parts) total += part.cv() * mult;
  return total;
}

int total_degree(const ComponentMultiset& parts) {
  int total = 0;
  for (const auto& [part, mult] : parts) total += part.degree() * mult;
  return total;
}

LabeledGraph disjoint_union_graph(const ComponentMultiset& parts) {
  std::vector<IsoClass> flat;
  for (const auto& [part, mult] : parts) {
    require(mult >= 0, ErrorCode::InvalidArgument, "negative multiplicity in disjoint union");
    for (int k = 0; k < mult; ++k) flat.push_back(part);
  }
  return disjoint_union_graph(flat);
}

LabeledGraph disjoint_union_graph(std::span<const IsoClass> parts) {
  int total = 0;
  for (const auto& part : parts) total += part.cv();
  require(total <= kMaxVertices, ErrorCode::CapExceeded,
          "disjoint union needs " + std::to_string(total) + " vertices, limit is " + std::to_string(kMaxVertices));
  LabeledGraph out(total);
  int offset = 0;
  for (const auto& part : parts) {
    for (auto [i, j] : part.canon().edges()) out.add_edge(i + offset, j + offset);
    offset += part.cv();
  }
  return out;
}

IsoClass disjoint_union(const ComponentMultiset& parts) { return canonicalize(disjoint_union_graph(parts)); }

IsoClass disjoint_union(std::span<const IsoClass> parts) { return canonicalize(disjoint_union_graph(parts)); }

ComponentMultiset connected_components(const LabeledGraph& g) {
  ComponentMultiset out;
  const auto adj = g.adjacency();
  std::uint32_t left = g.support_mask();
  while (left) {
    const int start = std::countr_zero(left);
    std::uint32_t comp = std::uint32_t{1} << start;
    std::uint32_t frontier = comp;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t fresh = adj[static_cast<std::size_t>(v)] & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    left &= ~comp;
    EdgeBits bits = 0;
    for_each_slot(g.bits(), [&](int s) {
      auto [i, j] = slot_pair(s);
      if (comp & (std::uint32_t{1} << i)) bits |= slot_bit(s);
      (void)j;
    });
    ++out[canonicalize(LabeledGraph(g.order(), bits))];
  }
  return out;
}

bool is_connected(const LabeledGraph& g) {
  if (g.empty()) return false;
  const auto comps = connected_components(g);
  return comps.size() == 1 && comps.begin()->second == 1;
}

LabeledGraph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  require(!text.empty(), ErrorCode::Parse, "empty graph6 string");
  for (char c : text)
    require(c >= 63 && c <= 126, ErrorCode::Parse,
            std::string("graph6 byte out of range: '") + c + "'");
  require(text[0] != 126, ErrorCode::CapExceeded, "graph6 graphs above 62 vertices are not supported");
  const int n = text[0] - 63;
  require(n <= kMaxVertices, ErrorCode::CapExceeded,
          "graph6 graph has " + std::to_string(n) + " vertices, limit is " + std::to_string(kMaxVertices));
  const int slots = n * (n - 1) / 2;
  const std::size_t expected = 1 + static_cast<std::size_t>((slots + 5) / 6);
  require(text.size() == expected, ErrorCode::Parse,
          "graph6 length " + std::to_string(text.size()) + " does not match n=" + std::to_string(n) + " (expected " +
              std::to_string(expected) + ")");
  EdgeBits bits = 0;
  for (int s = 0; s < static_cast<int>(expected - 1) * 6; ++s) {
    const int chunk = text[1 + static_cast<std::size_t>(s / 6)] - 63;
    const bool set = (chunk >> (5 - s % 6)) & 1;
    if (!set) continue;
    require(s < slots, ErrorCode::Parse, "graph6 padding bits must be zero");
    bits |= slot_bit(s);
  }
  return LabeledGraph(n, bits);
}

std::string emit_graph6(const LabeledGraph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  const int slots = n * (n - 1) / 2;
  for (int base = 0; base < slots; base += 6) {
    int chunk = 0;
    for (int b = 0; b < 6; ++b) {
      const int s = base + b;
      chunk <<= 1;
      if (s < slots && (g.bits() & slot_bit(s))) chunk |= 1;
    }
    out.push_back(static_cast<char>(63 + chunk));
  }
  return out;
}

LabeledGraph parse_edge_list(std::string_view text, int n) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const auto dash = token.find('-');
    require(dash != std::string::npos && dash > 0 && dash + 1 < token.size(), ErrorCode::Parse,
            "malformed edge '" + token + "', expected i-j");
    int i = 0;
    int j = 0;
    try {
      std::size_t used_i = 0;
      std::size_t used_j = 0;
      i = std::stoi(token.substr(0, dash), &used_i);
      j = std::stoi(token.substr(dash + 1), &used_j);
      require(used_i == dash && used_j == token.size() - dash - 1, ErrorCode::Parse, "malformed edge '" + token + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::Parse, "malformed edge '" + token + "'");
    }
    require(i >= 0 && j >= 0, ErrorCode::Parse, "negative vertex in edge '" + token + "'");
    require(i != j, ErrorCode::InvalidArgument, "loop in edge '" + token + "'");
    edges.emplace_back(i, j);
    max_vertex = std::max({max_vertex, i, j});
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c != ' ' && c != '\t' && c != '\n') {
      token.push_back(c);
    }
  }
  flush();
  if (n < 0) n = max_vertex + 1;
  require(max_vertex < n, ErrorCode::InvalidArgument, "edge endpoint exceeds the vertex count");
  return LabeledGraph(n, std::span<const std::pair<int, int>>(edges));
}

std::string emit_edge_list(const LabeledGraph& g) {
  std::string out;
  for (auto [i, j] : g.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i) + "-" + std::to_string(j);
  }
  return out;
}

LabeledGraph parse_graph(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n')) text.remove_suffix(1);
  if (text.empty()) return LabeledGraph(0);
  const bool edge_list = std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '-' || c == ',' || c == ' ';
  });
  return edge_list ? parse_edge_list(text) : parse_graph6(text);
}

}  // namespace gia
