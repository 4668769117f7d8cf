#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lincomb.hpp"
#include "matrix.hpp"
#include "poset.hpp"
#include "relation.hpp"

namespace gia {

struct SeparatorReport {
  bool is_separator = true;
  /// Two members with identical value vectors.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::vector<std::uint64_t> witness_values;
};

SeparatorReport is_separator(std::span<const IsoClass> invariants, const GPoset& p);

struct MinimalSeparators {
  std::size_t size = 0;
  std::vector<std::vector<IsoClass>> sets;
  std::size_t subsets_tested = 0;
};

inline constexpr std::size_t kSeparatorPoolCap = 20;

/// All smallest separating subsets of the pool (connected members when the pool is empty).
MinimalSeparators minimal_separators(const GPoset& p, std::vector<IsoClass> pool = {});

/// Component multiplicities of host over connected_list (sorted by degree), largest first.
std::vector<long> reconstruct_components(const LabeledGraph& host, std::span<const IsoClass> connected_list);

/// Connected classes with 1..max_degree edges.
std::vector<IsoClass> connected_classes(int max_degree);

struct InseparablePair {
  int d = 0;
  IsoClass next_generator;
  GPoset span;
  std::vector<BigInt> coefficients;
  ComponentMultiset t_parts;
  ComponentMultiset u_parts;
  /// Assembled graphs, when they fit in the vertex limit.
  std::optional<LabeledGraph> t_graph;
  std::optional<LabeledGraph> u_graph;
  int degree = 0;
  BigInt degree_bound;
  std::vector<IsoClass> checked_invariants;
};

/// T and U agreeing on every connected invariant with <= d edges; all properties asserted.
InseparablePair inseparable_pair(int d, std::optional<IsoClass> next_generator = std::nullopt);

/// Σ_{Δ=1}^{d} (-1)^Δ C(d, Δ-1) 2^(Δ-1).
BigInt s_sum(int d);
/// S(1) = -1, S(d+1) = -S(d) + (-1)^(d+1) 2^d.
BigInt s_recursive(int d);
BigInt s_closed(int d);

struct HalfDegreeStep {
  int from_degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  bool recovered = false;
};

struct HalfDegreeReport {
  int n = 0;
  int half = 0;
  bool ok = true;
  std::vector<HalfDegreeStep> steps;
  std::string failure;
};

/// Recovers all invariants above half degree from those at or below it, on every member of E(n).
HalfDegreeReport half_degree_system_check(int n);

struct DerivedRelation {
  IsoClass target;
  /// Relation text "target = polynomial" in the bound names.
  std::string text;
  bool holds = false;
};

/// Interpolates target as a polynomial in the basis invariants over p.
DerivedRelation derive_relation(const IsoClass& target, const std::vector<std::pair<std::string, IsoClass>>& basis,
                                const GPoset& p, int max_total_degree = 7);

}  // namespace gia
