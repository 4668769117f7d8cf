#include "mtransform.hpp"

#include <algorithm>

#include "error.hpp"
#include "parallel.hpp"

namespace gia {

IntMatrix build_mtransform(const GPoset& p) {
  const std::size_t n = p.size();
  IntMatrix e(n, n);
  std::vector<std::vector<std::uint64_t>> rows(n);
  parallel_for(n, [&](std::size_t i) {
    rows[i].assign(i + 1, 0);
    const LabeledGraph host = p[i].canon();
    for (std::size_t j = 0; j <= i; ++j) rows[i][j] = count_subgraphs(p[j], host);
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) e(i, j) = from_uint64(rows[i][j]);
  return e;
}

IntMatrix mnukhin_power(const IntMatrix& e, const std::vector<int>& degrees, long k) {
  require(e.rows() == e.cols() && degrees.size() == e.rows(), ErrorCode::InvalidArgument,
          "degree list does not match the matrix");
  IntMatrix out(e.rows(), e.cols());
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j) {
      if (e(i, j) == 0) continue;
      const int gap = degrees[i] - degrees[j];
      require(gap >= 0, ErrorCode::Precondition, "nonzero entry above the degree order");
      out(i, j) = power(BigInt(k), static_cast<unsigned long>(gap)) * e(i, j);
    }
  return out;
}

IntMatrix mnukhin_power(const GPoset& p, const IntMatrix& e, long k) {
  require(p.complete(), ErrorCode::Precondition, "closed-form powers need a complete poset");
  return mnukhin_power(e, p.degrees(), k);
}

IntMatrix mtransform_inverse(const GPoset& p, const IntMatrix& e) {
  IntMatrix eliminated = unitriangular_inverse(e);
  if (!p.complete()) return eliminated;
  IntMatrix closed = mnukhin_power(p, e, -1);
  require(closed == eliminated, ErrorCode::Internal, "closed-form inverse disagrees with elimination");
  return closed;
}

LinComb complement_invariant_expansion(const IsoClass& g, const GPoset& p, int n) {
  require(g.cv() <= n, ErrorCode::InvalidArgument, "graph does not fit on " + std::to_string(n) + " vertices");
  const BigInt stab_g = from_uint64(stabilizer_order(g.canon(), n));
  LinComb out;
  for (const auto& a : p.members()) {
    if (a.degree() > g.degree()) break;
    const std::uint64_t inside = count_subgraphs(a, g.canon());
    if (inside == 0) continue;
    const BigInt stab_a = from_uint64(stabilizer_order(a.canon(), n));
    Rational coeff(from_uint64(inside) * stab_a, stab_g);
    coeff.canonicalize();
    if (a.degree() % 2) coeff = -coeff;
    out.add(a, coeff);
  }
  // every subgraph class of g must be present
  for (auto [i, j] : g.canon().edges()) {
    LabeledGraph h = g.canon();
    h.remove_edge(i, j);
    require(p.contains(canonicalize(h)), ErrorCode::Precondition,
            "poset is missing subgraph " + canonicalize(h).graph6() + " of " + g.graph6());
  }
  return out;
}

std::vector<std::size_t> complement_pairing(const GPoset& p) {
  require(p.ambient_n().has_value(), ErrorCode::Precondition, "complement pairing needs an ambient vertex count");
  const int n = *p.ambient_n();
  std::vector<std::size_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto idx = p.index_of(canonicalize(complement(p.host(i), n)));
    require(idx.has_value(), ErrorCode::Precondition, "poset is not closed under complement");
    out[i] = *idx;
  }
  return out;
}

IntMatrix solve_upper_half(const GPoset& p, const IntMatrix& lower) {
  require(p.complete() && p.ambient_n(), ErrorCode::Precondition, "upper-half recursion needs E(n)");
  const int n = *p.ambient_n();
  const int half = n * (n - 1) / 2 / 2;
  const std::size_t size = p.size();
  require(lower.rows() == size && lower.cols() == size, ErrorCode::InvalidArgument, "partial matrix has wrong shape");
  const auto pair = complement_pairing(p);
  const auto deg = p.degrees();
  IntMatrix e(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    if (deg[i] > half) continue;
    for (std::size_t j = 0; j < size; ++j) {
      e(i, j) = lower(i, j);
      const bool ok = j > i ? lower(i, j) == 0 : (j == i ? lower(i, j) == 1 : true);
      require(ok, ErrorCode::InvalidArgument, "partial matrix is not lower unitriangular in row " + std::to_string(i));
    }
  }
  std::vector<BigInt> stab(size);
  for (std::size_t k = 0; k < size; ++k) stab[k] = from_uint64(stabilizer_order(p[k].canon(), n));
  for (std::size_t i = 0; i < size; ++i) {
    if (deg[i] <= half) continue;
    const std::size_t partner = pair[i];
    require(deg[partner] <= half, ErrorCode::Internal, "complement of an upper row is not known");
    for (std::size_t j = 0; j < size; ++j) {
      if (j == i) {
        e(i, j) = 1;
        continue;
      }
      if (deg[j] >= deg[i]) continue;
      Rational acc = 0;
      for (std::size_t k = 0; k <= j; ++k) {
        if (e(j, k) == 0 || e(partner, k) == 0) continue;
        Rational term(e(j, k) * stab[k] * e(partner, k), stab[j]);
        term.canonicalize();
        acc += deg[k] % 2 ? -term : term;
      }
      require(acc.get_den() == 1 && acc >= 0, ErrorCode::InvalidArgument,
              "partial data is inconsistent at entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      e(i, j) = acc.get_num();
    }
  }
  return e;
}

IntMatrix degree_minor(const IntMatrix& e, const std::vector<int>& degrees, int low, int high) {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] == high) rows.push_back(i);
    if (degrees[i] == low) cols.push_back(i);
  }
  return e.select(rows, cols);
}

namespace {

/// k-subsets of [0..n) as bitmasks in colex order.
std::vector<std::uint32_t> colex_subsets(int n, int k) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {0};
  auto without = colex_subsets(n - 1, k);
  auto with = colex_subsets(n - 1, k - 1);
  out = std::move(without);
  for (auto s : with) out.push_back(s | (std::uint32_t{1} << (n - 1)));
  return out;
}

std::size_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  return static_cast<std::size_t>(binomial(n, k).get_ui());
}

}  // namespace

IntMatrix trivial_minor_direct(int n, int low, int high) {
  require(n >= 0 && n <= 24, ErrorCode::CapExceeded, "variable count out of range");
  const auto rows = colex_subsets(n, high);
  const auto cols = colex_subsets(n, low);
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (cols[j] & ~rows[i]) == 0 ? 1 : 0;
  return m;
}

IntMatrix trivial_minor_recursive(int n, int low, int high) {
  const std::size_t r = choose(n, high);
  const std::size_t c = choose(n, low);
  if (r == 0 || c == 0 || low > high) return IntMatrix(r, c);
  if (low == high) return IntMatrix::identity(r);
  if (low == 0) {
    IntMatrix ones(r, 1);
    for (std::size_t i = 0; i < r; ++i) ones(i, 0) = 1;
    return ones;
  }
  const IntMatrix top_left = trivial_minor_recursive(n - 1, low, high);
  const IntMatrix bottom_left = trivial_minor_recursive(n - 1, low, high - 1);
  const IntMatrix bottom_right = trivial_minor_recursive(n - 1, low - 1, high - 1);
  IntMatrix m(r, c);
  const std::size_t r0 = choose(n - 1, high);
  const std::size_t c0 = choose(n - 1, low);
  for (std::size_t i = 0; i < top_left.rows(); ++i)
    for (std::size_t j = 0; j < top_left.cols(); ++j) m(i, j) = top_left(i, j);
  for (std::size_t i = 0; i < bottom_left.rows(); ++i)
    for (std::size_t j = 0; j < bottom_left.cols(); ++j) m(r0 + i, j) = bottom_left(i, j);
  for (std::size_t i = 0; i < bottom_right.rows(); ++i)
    for (std::size_t j = 0; j < bottom_right.cols(); ++j) m(r0 + i, c0 + j) = bottom_right(i, j);
  return m;
}

}  // namespace gia
