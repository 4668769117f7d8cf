#include <doctest.h>

#include "core/algebra.hpp"
#include "core/error.hpp"
#include "core/mtransform.hpp"
#include "core/relation.hpp"
#include "support.hpp"

using namespace gia;
using testing::G;

namespace {

Rational product_value(const IsoClass& a, const IsoClass& b, const LabeledGraph& h) {
  return Rational(from_uint64(count_subgraphs(a, h))) * Rational(from_uint64(count_subgraphs(b, h)));
}

}  // namespace

TEST_CASE("products evaluate to the product of values") {
  const GPoset p = build_full_poset(5);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> pick(1, p.size() - 1);
  for (int k = 0; k < 30; ++k) {
    const IsoClass a = p[pick(rng)], b = p[pick(rng)];
    if (a.cv() + b.cv() > 9) continue;
    const LinComb c = general_product(a, b);
    CHECK(c.integral());
    for (int t = 0; t < 5; ++t) {
      const LabeledGraph h = testing::random_graph(rng, 6 + t % 3);
      CHECK(c.evaluate(h) == product_value(a, b, h));
    }
  }
}

TEST_CASE("three product routes agree on E(5)") {
  const GPoset p = build_full_poset(5);
  const IntMatrix e = build_mtransform(p);
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
  for (int k = 0; k < 40; ++k) {
    const IsoClass a = p[pick(rng)], b = p[pick(rng)];
    const LinComb kocay = product_kocay(a, b, p);
    CHECK(kocay == fleischmann_totals(product_fleischmann(a, b, 5)));
    CHECK(kocay == product_mtransform(a, b, p, e).product);
    for (std::size_t h = 0; h < p.size(); ++h) CHECK(kocay.evaluate(p.host(h)) == product_value(a, b, p.host(h)));
  }
}

TEST_CASE("coloring classes refine the product") {
  const IsoClass p3 = G("0-1,0-2");
  const auto classes = product_fleischmann(p3, p3, 4, 4);
  std::uint64_t paw = 0;
  for (const auto& c : classes) {
    CHECK((c.only_a | c.shared) != 0);
    CHECK((c.only_a & c.only_b) == 0);
    CHECK((c.only_a | c.only_b | c.shared) == c.underlying.canon().bits());
    REQUIRE(c.stabilizer_quotient);
    CHECK(*c.stabilizer_quotient == c.pair_count);
    if (c.underlying == G("0-1,1-2,1-3,2-3")) paw += c.pair_count;
  }
  CHECK(paw == 4);
}

TEST_CASE("union candidates and covering pairs") {
  const IsoClass k2 = G("0-1"), p3 = G("0-1,0-2");
  const auto cands = union_candidates(k2, p3, 5);
  CHECK(cands.size() == 5);
  CHECK(covering_pairs(k2, p3, G("0-1,0-2,1-2")).size() == 3);
  CHECK(covering_pairs(p3, p3, p3).size() == 1);
}

TEST_CASE("M-transform product needs a closed poset") {
  const GPoset p = build_full_poset(3);
  const IntMatrix e = build_mtransform(p);
  CHECK_THROWS_AS(product_kocay(G("0-1,0-2"), G("0-1,0-2"), build_full_poset(3, 2)), Error);
  const auto r = product_mtransform(G("0-1"), G("0-1"), p, e);
  CHECK(r.product == product_kocay(G("0-1"), G("0-1"), p));
}

TEST_CASE("express a function through invariants") {
  const GPoset p = build_full_poset(4);
  const IntMatrix e = build_mtransform(p);
  std::vector<Rational> values;
  for (std::size_t h = 0; h < p.size(); ++h) values.push_back(product_value(G("0-1"), G("0-1,0-2"), p.host(h)));
  const LinComb c = express_invariant(values, p, e);
  CHECK(c == product_kocay(G("0-1"), G("0-1,0-2"), p));
  // the number of edges squared
  std::vector<Rational> sq;
  for (std::size_t h = 0; h < p.size(); ++h) sq.push_back(Rational(p[h].degree() * p[h].degree()));
  const LinComb s = express_invariant(sq, p, e);
  for (std::size_t h = 0; h < p.size(); ++h) CHECK(s.evaluate(p.host(h)) == sq[h]);
}

TEST_CASE("degree-sum identity") {
  const GPoset p = build_full_poset(4);
  const IntMatrix e = build_mtransform(p);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int d = 0; d <= 6; ++d) CHECK(degree_sum_identity_check(i, d, p, e).holds);
}

TEST_CASE("relation parser") {
  const GPoset p = build_full_poset(4);
  const InvariantBindings b = {{"g1", G("0-1")}, {"g3", G("0-1,0-2")}};
  CHECK(verify_relation("[0-1,2-3] = 1/2g1^2 - 1/2g1 - g3", b, p).holds);
  CHECK(verify_relation("[CK] = (g1*g1 - g1)/2 - g_3", b, p).holds);
  CHECK(verify_relation("[C]] = [C]]", b, p).holds);
  CHECK(verify_relation("2g1g3 = g1 g3 + g_1g_3", b, p).holds);
  CHECK_FALSE(verify_relation("g1 = g3", b, p).holds);
  CHECK_THROWS_AS(verify_relation("g1 = (g3", b, p), Error);
  CHECK_THROWS_AS(verify_relation("g1 + ", b, p), Error);
  CHECK_THROWS_AS(verify_relation("g1 = 1/0", b, p), Error);
}
