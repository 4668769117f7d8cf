#include "algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "error.hpp"
#include "parallel.hpp"

namespace gia {

namespace {

EdgeBits relabel_bits(EdgeBits bits, std::span<const int> image) {
  EdgeBits out = 0;
  while (bits) {
    const auto [i, j] = slot_pair(lowest_slot(bits));
    out |= slot_bit(pair_slot(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]));
    bits &= bits - 1;
  }
  return out;
}

}  // namespace

std::vector<IsoClass> union_candidates(const IsoClass& a, const IsoClass& b, int max_cv) {
  const int na = a.cv();
  const int nb = b.cv();
  require(na + nb <= kMaxVertices, ErrorCode::CapExceeded, "union candidates exceed the vertex limit");
  const auto b_edges = b.canon().edges();
  std::set<EdgeBits> labeled;
  std::vector<int> image(static_cast<std::size_t>(nb), -1);
  std::uint32_t used = 0;
  auto recurse = [&](auto& self, int v, int fresh) -> void {
    if (na + fresh > max_cv) return;
    if (v == nb) {
      EdgeBits bits = a.bits();
      for (auto [i, j] : b_edges)
        bits |= slot_bit(pair_slot(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]));
      labeled.insert(bits);
      return;
    }
    for (int t = 0; t < na; ++t) {
      if (used & (std::uint32_t{1} << t)) continue;
      used |= std::uint32_t{1} << t;
      image[static_cast<std::size_t>(v)] = t;
      self(self, v + 1, fresh);
      used &= ~(std::uint32_t{1} << t);
    }
    image[static_cast<std::size_t>(v)] = na + fresh;
    self(self, v + 1, fresh + 1);
  };
  recurse(recurse, 0, 0);
  std::set<IsoClass> classes;
  for (EdgeBits bits : labeled) classes.insert(canonicalize(LabeledGraph(na + nb, bits)));
  return {classes.begin(), classes.end()};
}

std::vector<CoveringPair> covering_pairs(const IsoClass& a, const IsoClass& b, const IsoClass& target) {
  const auto copies_a = subgraph_copies(a, target.canon());
  const auto copies_b = subgraph_copies(b, target.canon());
  std::vector<CoveringPair> out;
  for (EdgeBits c : copies_a)
    for (EdgeBits d : copies_b)
      if ((c | d) == target.bits()) out.push_back({c, d});
  return out;
}

LinComb product_kocay(const IsoClass& a, const IsoClass& b, int max_cv) {
  const auto candidates = union_candidates(a, b, max_cv);
  std::vector<std::size_t> counts(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t k) { counts[k] = covering_pairs(a, b, candidates[k]).size(); });
  LinComb out;
  for (std::size_t k = 0; k < candidates.size(); ++k) out.add(candidates[k], Rational(from_uint64(counts[k])));
  return out;
}

LinComb product_kocay(const IsoClass& a, const IsoClass& b, const GPoset& p) {
  const int max_cv = p.ambient_n().value_or(a.cv() + b.cv());
  LinComb out = product_kocay(a, b, max_cv);
  for (const auto& [g, c] : out.terms())
    require(p.contains(g), ErrorCode::Precondition,
            "poset is missing the union class " + g.graph6() + " of " + a.graph6() + " and " + b.graph6());
  return out;
}

std::vector<ColoringClass> product_fleischmann(const IsoClass& a, const IsoClass& b, int max_cv,
                                               std::optional<int> group_check_n) {
  if (group_check_n)
    require(*group_check_n <= 7, ErrorCode::CapExceeded, "stabilizer check enumerates S_n and needs n <= 7");
  const auto candidates = union_candidates(a, b, max_cv);
  std::vector<std::vector<ColoringClass>> per(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t k) {
    const IsoClass& u = candidates[k];
    const auto pairs = covering_pairs(a, b, u);
    const auto auts = automorphisms(u.canon());
    std::map<std::tuple<EdgeBits, EdgeBits, EdgeBits>, std::uint64_t> orbits;
    for (const auto& pr : pairs) {
      std::tuple<EdgeBits, EdgeBits, EdgeBits> key{~EdgeBits{0}, ~EdgeBits{0}, ~EdgeBits{0}};
      for (const auto& g : auts) {
        const auto img = g.images();
        std::tuple<EdgeBits, EdgeBits, EdgeBits> t{relabel_bits(pr.a_copy & ~pr.b_copy, img),
                                                   relabel_bits(pr.b_copy & ~pr.a_copy, img),
                                                   relabel_bits(pr.a_copy & pr.b_copy, img)};
        key = std::min(key, t);
      }
      ++orbits[key];
    }
    for (const auto& [key, count] : orbits) {
      ColoringClass cls;
      cls.underlying = u;
      std::tie(cls.only_a, cls.only_b, cls.shared) = key;
      cls.pair_count = count;
      per[k].push_back(cls);
    }
    if (!group_check_n) return;
    const int n = std::max(*group_check_n, u.cv());
    require(n <= 7, ErrorCode::CapExceeded, "stabilizer check enumerates S_n and needs n <= 7");
    const std::uint64_t stab_u = stabilizer_order(u.canon(), n);
    const PermGroup sn = symmetric_group(n);
    for (auto& cls : per[k]) {
      const LabeledGraph c(n, cls.only_a | cls.shared);
      const LabeledGraph d(n, cls.only_b | cls.shared);
      std::uint64_t both = 0;
      for (const auto& pi : sn)
        if (c.relabeled(pi) == c && d.relabeled(pi) == d) ++both;
      cls.stabilizer_quotient = stab_u / both;
      require(stab_u % both == 0, ErrorCode::Internal, "stabilizer intersection does not divide the stabilizer");
    }
  });
  std::vector<ColoringClass> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

LinComb fleischmann_totals(const std::vector<ColoringClass>& classes) {
  LinComb out;
  for (const auto& c : classes) out.add(c.underlying, Rational(from_uint64(c.pair_count)));
  return out;
}

std::vector<BigInt> mtransform_product_coefficients(std::size_t i, std::size_t j, const IntMatrix& e,
                                                    const std::vector<int>& degrees) {
  const std::size_t n = e.rows();
  std::vector<BigInt> c(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t h = 0; h <= k; ++h) {
      if (e(k, h) == 0 || e(h, i) == 0 || e(h, j) == 0) continue;
      const BigInt term = e(k, h) * e(h, i) * e(h, j);
      if ((degrees[k] - degrees[h]) % 2)
        c[k] -= term;
      else
        c[k] += term;
    }
  return c;
}

MTransformProduct product_mtransform(const IsoClass& a, const IsoClass& b, const GPoset& p, const IntMatrix& e) {
  require(p.complete(), ErrorCode::Precondition, "the M-transform product needs a complete poset");
  const auto i = p.index_of(a);
  const auto j = p.index_of(b);
  require(i && j, ErrorCode::Precondition, "factor is not a poset member");
  require(a.degree() + b.degree() <= p.max_degree() ||
              (p.ambient_n() && p.max_degree() == *p.ambient_n() * (*p.ambient_n() - 1) / 2),
          ErrorCode::Precondition, "poset max degree is below |A| + |B|");
  const auto c = mtransform_product_coefficients(*i, *j, e, p.degrees());
  MTransformProduct out;
  for (std::size_t k = 0; k < c.size(); ++k) out.product.add(p[k], Rational(c[k]));
  out.general = p.ambient_n() && a.cv() + b.cv() <= *p.ambient_n();
  return out;
}

LinComb general_product(const IsoClass& a, const IsoClass& b) {
  require(a.cv() + b.cv() <= kMaxAutomorphismSupport, ErrorCode::CapExceeded, "general product needs cv(A)+cv(B) <= 10");
  return product_kocay(a, b, a.cv() + b.cv());
}

std::vector<Rational> express_invariant(const std::vector<Rational>& values, const IntMatrix& e) {
  return solve_lower_unitriangular(e, values);
}

LinComb express_invariant(const std::vector<Rational>& values, const GPoset& p, const IntMatrix& e) {
  require(values.size() == p.size(), ErrorCode::InvalidArgument, "need one value per poset member");
  const auto c = express_invariant(values, e);
  LinComb out;
  for (std::size_t k = 0; k < c.size(); ++k) out.add(p[k], c[k]);
  return out;
}

DegreeIdentityReport degree_sum_identity_check(std::size_t i, int degree_d, const GPoset& p, const IntMatrix& e) {
  require(p.complete(), ErrorCode::Precondition, "degree identity needs a complete poset");
  require(i < p.size(), ErrorCode::InvalidArgument, "member index out of range");
  const auto deg = p.degrees();
  const int gi = deg[i];
  const bool full = p.ambient_n() && p.max_degree() == *p.ambient_n() * (*p.ambient_n() - 1) / 2;
  require(full || p.max_degree() >= gi + degree_d, ErrorCode::Precondition, "poset stops below degree D + |g_i|");
  DegreeIdentityReport report;
  std::vector<BigInt> weight(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    const int d = deg[k];
    if (d < std::max(degree_d, gi) || d > degree_d + gi) continue;
    weight[k] = binomial(gi, gi + degree_d - d) * e(k, i);
    report.rhs.add(p[k], Rational(weight[k]));
  }
  for (std::size_t h = 0; h < p.size(); ++h) {
    BigInt level = 0;
    for (std::size_t k = 0; k < p.size(); ++k)
      if (deg[k] == degree_d) level += e(h, k);
    const BigInt lhs = e(h, i) * level;
    BigInt rhs = 0;
    for (std::size_t k = 0; k < p.size(); ++k)
      if (weight[k] != 0) rhs += weight[k] * e(h, k);
    if (lhs != rhs) {
      report.holds = false;
      report.violating_host = h;
      break;
    }
  }
  return report;
}

}  // namespace gia
