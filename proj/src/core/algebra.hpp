#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lincomb.hpp"
#include "matrix.hpp"
#include "poset.hpp"

namespace gia {

/// Classes of A ∪ ρB over all overlays with cv <= max_cv, in poset order.
std::vector<IsoClass> union_candidates(const IsoClass& a, const IsoClass& b, int max_cv);

struct CoveringPair {
  EdgeBits a_copy = 0;
  EdgeBits b_copy = 0;
};

/// Ordered pairs of copies (C of A, D of B) in the canonical representative whose union is every edge.
std::vector<CoveringPair> covering_pairs(const IsoClass& a, const IsoClass& b, const IsoClass& target);

/// Product by pair counting over union candidates with cv <= max_cv.
LinComb product_kocay(const IsoClass& a, const IsoClass& b, int max_cv);
/// Product inside a poset: candidates limited to the ambient vertex count, all of them required in p.
LinComb product_kocay(const IsoClass& a, const IsoClass& b, const GPoset& p);

/// An orbit of covering pairs under the automorphisms of the union graph.
struct ColoringClass {
  IsoClass underlying;
  EdgeBits only_a = 0;
  EdgeBits only_b = 0;
  EdgeBits shared = 0;
  std::uint64_t pair_count = 0;
  /// |Stab(U)| / |{π : πC = C, πD = D}| in S_n, when the group check ran.
  std::optional<std::uint64_t> stabilizer_quotient;
};

/// Pairs from the Kocay count split into coloring orbits. With group_check_n set (<= 7), each
/// class coefficient is also computed from stabilizers by enumerating S_n.
std::vector<ColoringClass> product_fleischmann(const IsoClass& a, const IsoClass& b, int max_cv,
                                               std::optional<int> group_check_n = std::nullopt);
LinComb fleischmann_totals(const std::vector<ColoringClass>& classes);

/// c^k_ij = Σ_h (-1)^(deg k - deg h) e_kh e_hi e_hj for all k.
std::vector<BigInt> mtransform_product_coefficients(std::size_t i, std::size_t j, const IntMatrix& e,
                                                    const std::vector<int>& degrees);

struct MTransformProduct {
  LinComb product;
  /// cv(A) + cv(B) <= n, so the identity holds for all graphs.
  bool general = false;
};
MTransformProduct product_mtransform(const IsoClass& a, const IsoClass& b, const GPoset& p, const IntMatrix& e);

/// Product valid on every simple graph (candidates with cv <= cv(A) + cv(B) <= 10).
LinComb general_product(const IsoClass& a, const IsoClass& b);

/// c with E c = values.
std::vector<Rational> express_invariant(const std::vector<Rational>& values, const IntMatrix& e);
LinComb express_invariant(const std::vector<Rational>& values, const GPoset& p, const IntMatrix& e);

struct DegreeIdentityReport {
  bool holds = true;
  /// Right-hand side of I(g) Σ_{|h|=D} I(h) = Σ_d C(|g|, |g|+D-d) Σ_{|g_k|=d} e_ki I(g_k).
  LinComb rhs;
  std::optional<std::size_t> violating_host;
};
DegreeIdentityReport degree_sum_identity_check(std::size_t i, int degree_d, const GPoset& p, const IntMatrix& e);

}  // namespace gia
