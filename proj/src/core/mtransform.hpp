#pragma once

#include <optional>
#include <vector>

#include "lincomb.hpp"
#include "matrix.hpp"
#include "poset.hpp"

namespace gia {

/// e_ij = I(g_j)(g_i); rows computed in parallel.
IntMatrix build_mtransform(const GPoset& p);

/// Entries k^(deg_i - deg_j) e_ij, with 0^0 = 1.
IntMatrix mnukhin_power(const IntMatrix& e, const std::vector<int>& degrees, long k);
/// Same, refusing posets not flagged complete.
IntMatrix mnukhin_power(const GPoset& p, const IntMatrix& e, long k);

/// Inverse by the closed form when the poset is complete, cross-checked against elimination.
IntMatrix mtransform_inverse(const GPoset& p, const IntMatrix& e);

/// L with L(h) = I(g)(K_n \ h) for every graph h on n vertices.
LinComb complement_invariant_expansion(const IsoClass& g, const GPoset& p, int n);

/// Index of the member isomorphic to the complement of member i in K_n.
std::vector<std::size_t> complement_pairing(const GPoset& p);

/// Fills the rows above half degree of E(n) from the rows of degree <= floor(C(n,2)/2).
/// Entries of the upper rows in the input are ignored.
IntMatrix solve_upper_half(const GPoset& p, const IntMatrix& lower);

/// Rows of degree high, columns of degree low.
IntMatrix degree_minor(const IntMatrix& e, const std::vector<int>& degrees, int low, int high);

/// Inclusion minor of k-subsets (rows, size high) over j-subsets (columns, size low) of n points,
/// both in colex order, built directly.
IntMatrix trivial_minor_direct(int n, int low, int high);
/// The same matrix assembled from the three (n-1)-blocks.
IntMatrix trivial_minor_recursive(int n, int low, int high);

}  // namespace gia
