#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "numeric.hpp"
#include "poset.hpp"

namespace gia {

/// Names usable inside a relation, each bound to a basic invariant.
using InvariantBindings = std::map<std::string, IsoClass>;

/// Polynomial expression over basic invariants: + - * / ^ (integer exponent), rational
/// literals, bound names, "[graph6]" literals, and g<k> / g_<k> for poset member k.
class Relation {
 public:
  static Relation parse(std::string_view text, const InvariantBindings& bindings, const GPoset& p);

  /// lhs - rhs at a host whose basic invariant values are given by value_of.
  Rational residual(const std::vector<Rational>& invariant_values) const;
  const std::vector<IsoClass>& invariants() const { return invariants_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::vector<IsoClass> invariants_;
};

struct RelationReport {
  bool holds = true;
  std::optional<std::size_t> first_failure;
  Rational residual;
};

/// Evaluates the identity exactly at every poset member.
RelationReport verify_relation(std::string_view text, const InvariantBindings& bindings, const GPoset& p);

}  // namespace gia
