#include <doctest.h>

#include "core/error.hpp"
#include "core/matrix.hpp"
#include "core/multiset.hpp"
#include "core/poset.hpp"
#include "support.hpp"

using namespace gia;

namespace {

// (1/m!) d^m x^w at x = 1, one variable at a time
Rational hasse_at_one(const Exponents& m, const Exponents& w) {
  Rational out = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    BigInt falling = 1, fact = 1;
    for (int t = 0; t < m[i]; ++t) {
      falling *= w[i] - t;
      fact *= t + 1;
    }
    out *= Rational(falling, fact);
  }
  out.canonicalize();
  return out;
}

// sum over group elements divided by the stabilizer size of m
Rational invariant_by_group_average(const Exponents& m, const Exponents& w, const PermGroup& g) {
  Rational total = 0;
  long stab = 0;
  for (const auto& rho : g) {
    Exponents img(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) img[static_cast<std::size_t>(rho(static_cast<int>(i)))] = m[i];
    total += hasse_at_one(img, w);
    if (img == m) ++stab;
  }
  return total / stab;
}

Exponents random_exponents(std::mt19937_64& rng, std::size_t n, int cap) {
  Exponents out(n);
  for (auto& x : out) x = static_cast<int>(rng() % static_cast<unsigned>(cap + 1));
  return out;
}

}  // namespace

TEST_CASE("multiset invariant against the Hasse-derivative oracle") {
  std::mt19937_64 rng(41);
  const std::vector<PermGroup> groups = {trivial_group(3), parse_group("S3", 3), parse_group("1 0 2", 3),
                                         parse_group("1 2 3 0", 4), symmetric_group(4)};
  for (const auto& g : groups)
    for (int k = 0; k < 60; ++k) {
      const Exponents m = random_exponents(rng, static_cast<std::size_t>(g.degree()), 3);
      const Exponents w = random_exponents(rng, static_cast<std::size_t>(g.degree()), 4);
      CHECK(Rational(multiset_invariant(m, w, g)) == invariant_by_group_average(m, w, g));
    }
}

TEST_CASE("published small values") {
  const PermGroup s2 = parse_group("S2", 2);
  CHECK(multiset_invariant({1, 2}, {1, 2}, s2) == 1);
  CHECK(multiset_invariant({1, 2}, {2, 2}, s2) == 4);
  CHECK(orbit_representative({0, 1}, s2) == Exponents{1, 0});
  CHECK(orbit({1, 2}, s2).size() == 2);
}

TEST_CASE("pair group reproduces subgraph counts") {
  const int n = 4;
  const PermGroup g = pair_group(n);
  CHECK(g.order() == 24);
  CHECK(g.degree() == 6);
  const GPoset p = build_full_poset(n);
  auto indicator = [&](const LabeledGraph& h) {
    Exponents out(6, 0);
    for (auto [i, j] : h.edges()) out[static_cast<std::size_t>(pair_slot(i, j))] = 1;
    return out;
  };
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      CHECK(multiset_invariant(indicator(p.host(a)), indicator(p.host(b)), g) ==
            BigInt(static_cast<unsigned long>(count_subgraphs(p[a], p.host(b)))));
}

TEST_CASE("multilinear coincidence") {
  std::mt19937_64 rng(42);
  const std::vector<PermGroup> groups = {parse_group("S2", 2), parse_group("S3", 3), trivial_group(4)};
  for (int k = 0; k < 100; ++k) {
    const PermGroup& g = groups[static_cast<std::size_t>(k) % groups.size()];
    const Exponents m = random_exponents(rng, static_cast<std::size_t>(g.degree()), 1);
    const Exponents w = random_exponents(rng, static_cast<std::size_t>(g.degree()), 5);
    CHECK(multiset_invariant(m, w, g) == orbit_sum_value(m, w, g));
  }
}

TEST_CASE("multiset poset and its transform") {
  const MultisetPoset t(trivial_group(3), 1);
  CHECK(t.size() == 8);
  CHECK(t[0] == Exponents{0, 0, 0});
  const IntMatrix e = build_general_mtransform(t);
  CHECK(e.is_lower_unitriangular());
  const MultisetPoset s(parse_group("S2", 2), 2);
  CHECK(s.size() == 6);
  CHECK(s.index_of({0, 1}) == s.index_of({1, 0}));
  CHECK_THROWS_AS(MultisetPoset(symmetric_group(6), 3, -1, 10), Error);
}

TEST_CASE("orbit sums through invariants") {
  std::mt19937_64 rng(43);
  for (const char* spec : {"trivial", "S3", "1 0 2"}) {
    const PermGroup g = parse_group(spec, 3);
    const MultisetPoset p(g, 3);
    const IntMatrix e = build_general_mtransform(p);
    for (int k = 0; k < 10; ++k) {
      const Exponents a = random_exponents(rng, 3, 3);
      const auto c = express_orbit_sum(a, p, e);
      for (int t = 0; t < 10; ++t) {
        const Exponents w = random_exponents(rng, 3, 6);
        Rational total = 0;
        for (std::size_t i = 0; i < p.size(); ++i) total += c[i] * Rational(multiset_invariant(p[i], w, g));
        CHECK(total == Rational(orbit_sum_value(a, w, g)));
      }
    }
  }
}

TEST_CASE("binomial transform of powers") {
  for (int a = 0; a <= 5; ++a) {
    const auto c = binomial_transform_coeffs(a, 6);
    for (int x = 0; x <= 7; ++x) {
      BigInt total = 0;
      for (int k = 0; k <= 6; ++k) total += c[static_cast<std::size_t>(k)] * binomial(x, k);
      CHECK(total == power(BigInt(x), static_cast<unsigned long>(a)));
    }
  }
}

TEST_CASE("group parsing") {
  CHECK(parse_group("S3", 3).order() == 6);
  CHECK(parse_group("pairs4", 6).order() == 24);
  CHECK(parse_group("1 0 2;0 2 1", 3).order() == 6);
  CHECK_THROWS_AS(parse_group("S4", 3), Error);
  CHECK_THROWS_AS(parse_group("nonsense", 3), Error);
}
