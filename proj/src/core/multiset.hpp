#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "matrix.hpp"
#include "numeric.hpp"
#include "perm.hpp"

namespace gia {

/// Exponent vector (m_1..m_N) of the monomial x_1^m_1 ... x_N^m_N.
using Exponents = std::vector<int>;

/// (ρ·m)_i = m_ρ(i).
Exponents act(const Permutation& rho, const Exponents& m);
/// Distinct images of m under the group, sorted.
std::vector<Exponents> orbit(const Exponents& m, const PermGroup& g);
/// Lexicographically greatest element of the orbit.
Exponents orbit_representative(const Exponents& m, const PermGroup& g);

/// Σ over the orbit of m of Π C(w_i, m'_i).
BigInt multiset_invariant(const Exponents& m, const Exponents& w, const PermGroup& g);
/// a^+ at b: Σ over the orbit of a of Π b_i^a'_i.
BigInt orbit_sum_value(const Exponents& a, const Exponents& b, const PermGroup& g);
/// c_k = Σ_j (-1)^(k-j) C(k,j) j^a for k = 0..k_max.
std::vector<BigInt> binomial_transform_coeffs(int a, int k_max);

/// Orbit representatives with entries <= cap, degree-major then lexicographically descending.
class MultisetPoset {
 public:
  MultisetPoset(PermGroup group, int cap, int max_degree = -1, std::size_t member_cap = 5000);

  const PermGroup& group() const { return group_; }
  int cap() const { return cap_; }
  std::size_t size() const { return members_.size(); }
  const Exponents& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Exponents>& members() const { return members_; }
  std::vector<int> degrees() const;
  std::size_t index_of(const Exponents& m) const;

 private:
  PermGroup group_;
  int cap_ = 1;
  std::vector<Exponents> members_;
};

IntMatrix build_general_mtransform(const MultisetPoset& p);

/// Coefficients c over the poset members with a^+ = Σ c_k I(m_k), from E c = (a^+(m_i))_i.
std::vector<Rational> express_orbit_sum(const Exponents& a, const MultisetPoset& p, const IntMatrix& e);

/// The literal product-of-binomial-transforms reading: Σ_k Π_h c_{k_h}^{a_h} I(x^k)(w) over
/// all k in {0..cap}^N. Differs from a^+ on symmetric exponent patterns.
BigInt literal_orbit_sum_value(const Exponents& a, const Exponents& w, const PermGroup& g, int cap);

/// S_n acting on the C(n,2) pair slots in colex order.
PermGroup pair_group(int n);

/// "trivial", "S<k>" (on the first k of N points), "pairs<n>", or generators "0 1 2;1 0 2".
PermGroup parse_group(std::string_view spec, int degree);

}  // namespace gia
