#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace gia {

/// Σ coeff · Π s_k^e_k; key e is indexed from s_1.
struct CyclePolynomial {
  std::map<std::vector<int>, Rational> terms;

  Rational substitute_all(const Rational& value) const;
  /// Coefficients of x^d after s_k := 1 + x^k.
  std::vector<BigInt> edge_series() const;
  std::string to_string() const;
};

/// Cycle index of S_n acting on unordered pairs, summed over cycle types of S_n.
CyclePolynomial pair_group_cycle_index(int n);

/// h_n(d) for d = 0..C(n,2).
std::vector<BigInt> graph_counts(int n);
BigInt graph_count(int n, int d);

struct UlamTable {
  int min_n = 4;
  int max_n = 12;
  int min_d = 2;
  int max_d = 12;
  /// -h_n(d) + h_{n-1}(d) + h_n(d-1) for printed cells (d <= floor(C(n,2)/2)).
  std::map<std::pair<int, int>, BigInt> cells;  // (n, d)
};

UlamTable ulam_difference_table(int max_n = 12, int max_d = 12);
/// Rows d, columns n; cells beyond half degree left blank.
std::string ulam_table_csv(const UlamTable& t);
std::string ulam_table_text(const UlamTable& t);

struct UlamCheck {
  int n = 0;
  int d = 0;
  BigInt lhs;  // h_{n+1}(d) - h_{n+1}(d-1)
  BigInt rhs;  // h_n(d)
  bool inequality = false;
  bool in_range = false;  // d <= floor(C(n+1,2)/2)
  struct MinorRank {
    int v = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
  };
  std::optional<MinorRank> minor;
};

/// Counting inequality for (n, d); with v set (<= 5), also the rank of the minor of degree-d classes
/// with cv = v over degree-(d-1) classes with cv <= v.
UlamCheck ulam_condition_check(int n, int d, std::optional<int> v = std::nullopt);

struct ConnectedCounts {
  std::vector<BigInt> f;  // f[d], d >= 1 (f[0] = 0)
  std::vector<BigInt> cumulative;
};

ConnectedCounts connected_counts(int max_d);

}  // namespace gia
