#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace gia {

/// Degree-sorted isomorphism classes, ordered so that I(g_j)(g_i) = 0 for i < j.
class GPoset {
 public:
  GPoset() = default;
  GPoset(std::vector<IsoClass> members, std::optional<int> ambient_n, bool complete);

  std::size_t size() const { return members_.size(); }
  const IsoClass& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<IsoClass>& members() const { return members_; }
  std::optional<std::size_t> index_of(const IsoClass& g) const;
  bool contains(const IsoClass& g) const { return index_of(g).has_value(); }

  std::optional<int> ambient_n() const { return ambient_n_; }
  bool complete() const { return complete_; }
  int max_degree() const { return members_.empty() ? -1 : members_.back().degree(); }
  std::vector<int> degrees() const;
  /// Members as graphs on the ambient vertex set (or on their own support).
  LabeledGraph host(std::size_t i) const;

 private:
  std::vector<IsoClass> members_;
  std::map<IsoClass, std::size_t> index_;
  std::optional<int> ambient_n_;
  bool complete_ = false;
};

using MembershipPredicate = std::function<bool(const IsoClass&)>;

inline constexpr std::size_t kDefaultPosetCap = 500'000;

/// E(n, max_degree): all classes with cv <= n and degree <= max_degree (negative = unbounded).
/// The predicate, when given, must be closed under taking subgraphs.
GPoset build_full_poset(int n, int max_degree = -1, const MembershipPredicate& keep = {},
                        std::size_t cap = kDefaultPosetCap);

/// All disjoint unions of the connected generators with total degree <= max_degree, including ∅.
GPoset build_span_poset(std::span<const IsoClass> generators, int max_degree);

std::vector<IsoClass> connected_members(const GPoset& p);

/// True when every one-edge-deleted subgraph of every member is a member.
bool verify_subgraph_complete(const GPoset& p);

/// One graph6 line per member, in order.
std::string write_poset(const GPoset& p);
GPoset read_poset(std::string_view text, std::optional<int> ambient_n, bool complete);

}  // namespace gia
