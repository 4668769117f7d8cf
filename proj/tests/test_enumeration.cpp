#include <doctest.h>

#include <map>

#include "core/enumeration.hpp"
#include "core/error.hpp"
#include "core/perm.hpp"
#include "core/poset.hpp"

using namespace gia;

namespace {

// average over S_n of the cycle type of the induced action on pairs
std::map<std::vector<int>, Rational> brute_cycle_index(int n) {
  std::map<std::vector<int>, Rational> out;
  const int slots = n * (n - 1) / 2;
  const PermGroup s = symmetric_group(n);
  for (const auto& rho : s) {
    std::vector<int> counts(static_cast<std::size_t>(slots + 1), 0);
    std::vector<bool> seen(static_cast<std::size_t>(slots), false);
    for (int start = 0; start < slots; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      int len = 0;
      for (int cur = start; !seen[static_cast<std::size_t>(cur)];) {
        seen[static_cast<std::size_t>(cur)] = true;
        ++len;
        const auto [i, j] = slot_pair(cur);
        const auto [a, b] = pair_action(rho, i, j);
        cur = pair_slot(a, b);
      }
      ++counts[static_cast<std::size_t>(len)];
    }
    out[counts] += Rational(1, static_cast<unsigned long>(s.order()));
  }
  return out;
}

Rational evaluate_at(const std::map<std::vector<int>, Rational>& terms, const Rational& x) {
  Rational total = 0;
  for (const auto& [counts, c] : terms) {
    Rational t = c;
    for (std::size_t k = 1; k < counts.size(); ++k)
      for (int r = 0; r < counts[k]; ++r) t *= x;
    total += t;
  }
  return total;
}

}  // namespace

TEST_CASE("cycle index against permutation enumeration") {
  for (int n = 2; n <= 6; ++n) {
    const CyclePolynomial z = pair_group_cycle_index(n);
    const auto brute = brute_cycle_index(n);
    for (int x = 0; x <= 4; ++x) CHECK(z.substitute_all(Rational(x)) == evaluate_at(brute, Rational(x)));
    Rational sum = 0;
    for (const auto& [k, c] : z.terms) sum += c;
    CHECK(sum == 1);
  }
}

TEST_CASE("graph counts") {
  const std::vector<long> totals = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) {
    BigInt s = 0;
    for (const auto& c : graph_counts(n)) s += c;
    CHECK(s == totals[static_cast<std::size_t>(n)]);
  }
  CHECK(graph_count(6, 7) == 24);
  for (int n = 2; n <= 12; ++n) {
    const auto c = graph_counts(n);
    for (std::size_t d = 0; d < c.size(); ++d) CHECK(c[d] == c[c.size() - 1 - d]);
  }
}

TEST_CASE("Ulam table shape and corner values") {
  const UlamTable t = ulam_difference_table(12, 12);
  CHECK(t.cells.at({7, 8}) == -8);
  CHECK(t.cells.at({12, 12}) == 1779);
  CHECK(t.cells.at({5, 5}) == 1);
  CHECK(t.cells.count({4, 4}) == 0);
  for (const auto& [key, v] : t.cells) {
    const auto [n, d] = key;
    CHECK(v == -graph_count(n, d) + graph_count(n - 1, d) + graph_count(n, d - 1));
  }
  const std::string csv = ulam_table_csv(t);
  CHECK(csv.rfind("d\\n,4,5,6,7,8,9,10,11,12\n", 0) == 0);
  CHECK(csv.find("\n12,,,,,-201,-1431,-3018,-2237,1779\n") != std::string::npos);
}

TEST_CASE("Ulam condition is the sign of the table cell") {
  const UlamTable t = ulam_difference_table(12, 12);
  for (const auto& [key, v] : t.cells) {
    const auto [n, d] = key;
    const UlamCheck c = ulam_condition_check(n - 1, d);
    CHECK(c.rhs - c.lhs == v);
    CHECK(c.inequality == (v >= 0));
  }
  const UlamCheck c = ulam_condition_check(5, 3, 4);
  REQUIRE(c.minor);
  CHECK(c.minor->rank <= std::min(c.minor->rows, c.minor->cols));
}

TEST_CASE("connected counts") {
  const auto c = connected_counts(8);
  const std::vector<long> f = {0, 1, 1, 3, 5, 12, 30, 79, 227};
  for (std::size_t d = 1; d < f.size(); ++d) CHECK(c.f[d] == f[d]);
  CHECK_THROWS_AS(connected_counts(9), Error);
}
