#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gia {

class LabeledGraph;

/// Cycle counts of a permutation: counts[k-1] is the number of k-cycles.
struct CycleType {
  std::vector<int> counts;

  int degree() const;
  auto operator<=>(const CycleType&) const = default;
};

/// A bijection of [0..n), stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  static Permutation cycle(int n, std::span<const int> points);
  /// Parses "p(0) p(1) ... p(n-1)".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return images_; }

  /// (this ∘ q)(i) = this(q(i)).
  Permutation compose(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;
  CycleType cycle_type() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Explicit element list of a permutation group, lexicographically sorted.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

 private:
  int degree_ = 0;
  std::vector<Permutation> elements_;
};

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

PermGroup close_generators(int n, std::span<const Permutation> generators,
                           std::size_t cap = kDefaultGroupCap);
PermGroup symmetric_group(int n);
PermGroup trivial_group(int n);

/// Image of the unordered pair {i, j}, returned sorted.
std::pair<int, int> pair_action(const Permutation& p, int i, int j);

std::uint64_t factorial(int n);

/// |Stab(g)| inside S_n: (n - cv)! times the edge-preserving permutations of the support.
std::uint64_t stabilizer_order(const LabeledGraph& g, int n);

}  // namespace gia
