#include "poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "error.hpp"

namespace gia {

GPoset::GPoset(std::vector<IsoClass> members, std::optional<int> ambient_n, bool complete)
    : members_(std::move(members)), ambient_n_(ambient_n), complete_(complete) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], i);
  if (ambient_n_)
    for (const auto& m : members_)
      require(m.cv() <= *ambient_n_, ErrorCode::InvalidArgument,
              "member " + m.graph6() + " does not fit on " + std::to_string(*ambient_n_) + " vertices");
}

std::optional<std::size_t> GPoset::index_of(const IsoClass& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> GPoset::degrees() const {
  std::vector<int> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.degree());
  return out;
}

LabeledGraph GPoset::host(std::size_t i) const {
  const auto& c = members_[i].canon();
  return ambient_n_ ? c.with_order(*ambient_n_) : c;
}

GPoset build_full_poset(int n, int max_degree, const MembershipPredicate& keep, std::size_t cap) {
  require(n >= 0 && n <= kMaxVertices, ErrorCode::CapExceeded, "poset vertex count out of range");
  const int full = n * (n - 1) / 2;
  if (max_degree < 0 || max_degree > full) max_degree = full;
  std::vector<IsoClass> all;
  std::vector<IsoClass> level{canonicalize(LabeledGraph(0))};
  if (keep && !keep(level.front())) level.clear();
  all.insert(all.end(), level.begin(), level.end());
  for (int d = 1; d <= max_degree && !level.empty(); ++d) {
    std::set<IsoClass> next;
    for (const auto& g : level) {
      const int span = std::min(n, g.cv() + 2);
      const LabeledGraph base = g.canon().with_order(span);
      for (int j = 1; j < span; ++j)
        for (int i = 0; i < j; ++i) {
          if (base.has_edge(i, j)) continue;
          if (i >= g.cv() && i != g.cv()) continue;
          LabeledGraph h = base;
          h.add_edge(i, j);
          if (h.support_size() > n) continue;
          IsoClass c = canonicalize(h);
          if (keep && !keep(c)) continue;
          next.insert(c);
        }
    }
    level.assign(next.begin(), next.end());
    all.insert(all.end(), level.begin(), level.end());
    require(all.size() <= cap, ErrorCode::CapExceeded,
            "poset exceeds " + std::to_string(cap) + " members at degree " + std::to_string(d));
  }
  return GPoset(std::move(all), n, true);
}

GPoset build_span_poset(std::span<const IsoClass> generators, int max_degree) {
  std::vector<IsoClass> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens)
    require(is_connected(g.canon()), ErrorCode::InvalidArgument, "span generator " + g.graph6() + " is not connected");
  std::vector<IsoClass> out;
  ComponentMultiset current;
  auto recurse = [&](auto& self, std::size_t k, int budget) -> void {
    if (k == gens.size()) {
      out.push_back(disjoint_union(current));
      return;
    }
    const int deg = gens[k].degree();
    for (int mult = 0; mult * deg <= budget; ++mult) {
      if (mult) current[gens[k]] = mult;
      self(self, k + 1, budget - mult * deg);
    }
    current.erase(gens[k]);
  };
  recurse(recurse, 0, max_degree);
  return GPoset(std::move(out), std::nullopt, false);
}

std::vector<IsoClass> connected_members(const GPoset& p) {
  std::vector<IsoClass> out;
  for (const auto& m : p.members())
    if (is_connected(m.canon())) out.push_back(m);
  return out;
}

bool verify_subgraph_complete(const GPoset& p) {
  for (const auto& m : p.members())
    for (auto [i, j] : m.canon().edges()) {
      LabeledGraph h = m.canon();
      h.remove_edge(i, j);
      if (!p.contains(canonicalize(h))) return false;
    }
  return true;
}

std::string write_poset(const GPoset& p) {
  std::string out;
  for (const auto& m : p.members()) out += m.graph6() + "\n";
  return out;
}

GPoset read_poset(std::string_view text, std::optional<int> ambient_n, bool complete) {
  std::vector<IsoClass> members;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    members.push_back(canonicalize(parse_graph6(line)));
  }
  return GPoset(std::move(members), ambient_n, complete);
}

}  // namespace gia
