#include <doctest.h>

#include "core/error.hpp"
#include "core/perm.hpp"
#include "support.hpp"

using namespace gia;
using testing::G;

TEST_CASE("canonical form is the least relabeled bitset") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    const LabeledGraph g = testing::random_graph(rng, 2 + k % 6, 0.45);
    CHECK(canonicalize(g).canon().bits() == testing::brute_min_bits(g));
  }
}

TEST_CASE("isomorphic relabelings share a class") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    const int n = 3 + k % 9;
    const LabeledGraph g = testing::random_graph(rng, n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const LabeledGraph h(n, testing::relabel_bits(g, perm));
    CHECK(canonicalize(g) == canonicalize(h));
  }
  CHECK_FALSE(is_isomorphic(parse_edge_list("0-1,1-2,2-3"), parse_edge_list("0-1,0-2,0-3")));
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 1000; ++k) {
    const LabeledGraph g = testing::random_graph(rng, static_cast<int>(rng() % 17));
    const std::string s = emit_graph6(g);
    CHECK(parse_graph6(s) == g);
  }
  CHECK(emit_graph6(LabeledGraph(2, {{0, 1}})) == "A_");
  CHECK(emit_graph6(LabeledGraph(0)) == "?");
  CHECK(parse_graph6(">>graph6<<Bw\n") == parse_edge_list("0-1,0-2,1-2"));
  CHECK_THROWS_AS(parse_graph6("A`"), Error);  // padding bit set
  CHECK_THROWS_AS(parse_graph6("Bww"), Error);
  CHECK_THROWS_AS(parse_graph6("R"), Error);  // 19 vertices
}

TEST_CASE("subgraph counts agree with subset enumeration") {
  std::mt19937_64 rng(14);
  const std::vector<IsoClass> patterns = {G("0-1"), G("0-1,0-2"), G("0-1,2-3"), G("0-1,0-2,1-2"),
                                          G("0-1,1-2,2-3"), G("0-1,1-2,2-3,0-3"), G("0-1,1-2,1-3,2-3")};
  for (int k = 0; k < 40; ++k) {
    const LabeledGraph h = testing::random_graph(rng, 4 + k % 3);
    for (const auto& p : patterns) {
      const auto brute = testing::brute_subgraph_count(p, h);
      CHECK(count_subgraphs(p, h) == brute);
      CHECK(count_subgraphs_by_injection(p, h) == brute);
    }
  }
}

TEST_CASE("published counts") {
  const LabeledGraph triangle = parse_edge_list("1-2,1-3,2-3");
  CHECK(count_subgraphs(G("0-1"), triangle) == 3);
  const LabeledGraph k4 = parse_edge_list("0-1,0-2,0-3,1-2,1-3,2-3");
  CHECK(count_subgraphs(G("0-1,0-2"), k4) == 12);
  CHECK(count_subgraphs(G("0-1,0-2,1-2"), k4) == 4);
  CHECK(count_subgraphs(G("0-1,2-3"), k4) == 3);
  CHECK(support_automorphism_count(k4) == 24);
  CHECK(support_automorphism_count(parse_edge_list("0-1,1-2,2-3")) == 2);
  CHECK(stabilizer_order(parse_edge_list("0-1"), 4) == 4);
}

TEST_CASE("complement, components, unions") {
  const LabeledGraph p4 = parse_edge_list("0-1,1-2,2-3");
  CHECK(is_isomorphic(complement(p4, 4), p4));
  const IsoClass k2 = G("0-1"), p3 = G("0-1,0-2");
  const ComponentMultiset parts = {{k2, 2}, {p3, 1}};
  const LabeledGraph u = disjoint_union_graph(parts);
  CHECK(u.edge_count() == 4);
  CHECK(connected_components(u) == parts);
  CHECK(total_support(parts) == 7);
  CHECK_FALSE(is_connected(u));
  CHECK(is_connected(p4));
}

TEST_CASE("edge list parsing") {
  CHECK(parse_graph("0-1, 1-2") == parse_edge_list("0-1,1-2"));
  CHECK(parse_edge_list("0-1", 5).order() == 5);
  CHECK_THROWS_AS(parse_edge_list("0-0"), Error);
  CHECK_THROWS_AS(parse_edge_list("0-16"), Error);
  CHECK(emit_edge_list(parse_edge_list("2-0,1-2")) == "0-2,1-2");
}

TEST_CASE("permutations") {
  const Permutation a = Permutation::cycle(4, std::vector<int>{0, 1, 2});
  CHECK(a.compose(a.inverse()).is_identity());
  CHECK(symmetric_group(4).order() == 24);
  CHECK(trivial_group(3).order() == 1);
  CHECK(factorial(9) == 362880);
  const Permutation t = Permutation::transposition(4, 0, 3);
  const std::vector<Permutation> gens{a, t};
  CHECK(close_generators(4, gens).order() == 24);
  CHECK(pair_action(t, 0, 1) == std::pair<int, int>{1, 3});
}
