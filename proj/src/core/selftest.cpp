#include "selftest.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "algebra.hpp"
#include "cache.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "mtransform.hpp"
#include "multiset.hpp"
#include "relation.hpp"

namespace gia {

namespace {

IsoClass G(const char* edges) { return canonicalize(parse_edge_list(edges)); }

/// Accumulates failed expectations; keeps the first few messages.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_ < 4) messages_ += (messages_.empty() ? "" : "; ") + what;
    ++failures_;
  }
  void note(const std::string& what) { notes_ += (notes_.empty() ? "" : "; ") + what; }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    std::string out;
    if (failures_) out = std::to_string(failures_) + " mismatch(es): " + messages_;
    if (!notes_.empty()) out += (out.empty() ? "" : " | ") + notes_;
    return out;
  }

 private:
  int failures_ = 0;
  std::string messages_;
  std::string notes_;
};

using Terms = std::vector<std::pair<long, IsoClass>>;

LinComb combo(const Terms& terms) {
  LinComb out;
  for (const auto& [c, g] : terms) out.add(g, Rational(c));
  return out;
}

/// Named labels g0..g10 for E(4).
struct TextLabels {
  std::vector<IsoClass> g;
  TextLabels()
      : g{canonicalize(LabeledGraph(0)), G("0-1"),           G("0-1,2-3"),         G("0-1,0-2"),
          G("0-1,1-2,2-3"),            G("0-1,0-2,0-3"),   G("0-1,0-2,1-2"),     G("0-1,1-2,2-3,0-3"),
          G("0-1,1-2,1-3,2-3"),        G("0-1,1-2,2-3,0-3,0-2"), G("0-1,0-2,0-3,1-2,1-3,2-3")} {}
  InvariantBindings bindings() const {
    InvariantBindings b;
    for (std::size_t k = 1; k < g.size(); ++k) b["g" + std::to_string(k)] = g[k];
    return b;
  }
  std::string name(const IsoClass& c) const {
    for (std::size_t k = 0; k < g.size(); ++k)
      if (g[k] == c) return "g" + std::to_string(k);
    return c.graph6();
  }
};

bool three_way(const IsoClass& a, const IsoClass& b, const GPoset& p, const IntMatrix& e,
               const std::optional<LinComb>& expected,
               Checks& checks, const std::string& label, bool group_check) {
  const int n = *p.ambient_n();
  const LinComb kocay = product_kocay(a, b, p);
  const auto classes = product_fleischmann(a, b, n, group_check ? std::optional<int>(n) : std::nullopt);
  const LinComb fleischmann = fleischmann_totals(classes);
  const LinComb mt = product_mtransform(a, b, p, e).product;
  bool ok = kocay == fleischmann && kocay == mt;
  checks.expect(kocay == fleischmann, label + ": Kocay " + kocay.to_string() + " vs Fleischmann " + fleischmann.to_string());
  checks.expect(kocay == mt, label + ": Kocay " + kocay.to_string() + " vs M-transform " + mt.to_string());
  if (group_check)
    for (const auto& c : classes) {
      const bool same = c.stabilizer_quotient && *c.stabilizer_quotient == c.pair_count;
      checks.expect(same, label + ": stabilizer quotient differs for a coloring of " + c.underlying.graph6());
      ok = ok && same;
    }
  if (expected) {
    checks.expect(kocay == *expected, label + ": got " + kocay.to_string() + ", expected " + expected->to_string());
    ok = ok && kocay == *expected;
  }
  return ok;
}

CriterionResult criterion_1() {
  Checks checks;
  const GPoset p = build_full_poset(3);
  const IntMatrix e = build_mtransform(p);
  const IsoClass g1 = G("0-1"), g2 = G("0-1,0-2"), g3 = G("0-1,0-2,1-2");
  const std::vector<std::tuple<IsoClass, IsoClass, Terms>> table = {
      {g1, g1, {{1, g1}, {2, g2}}}, {g1, g2, {{2, g2}, {3, g3}}}, {g1, g3, {{3, g3}}},
      {g2, g2, {{1, g2}, {6, g3}}}, {g2, g3, {{3, g3}}},          {g3, g3, {{1, g3}}},
  };
  int k = 0;
  for (const auto& [a, b, terms] : table) three_way(a, b, p, e, combo(terms), checks, "cell " + std::to_string(++k), true);
  return {1, "n=3 multiplication table, three product methods", checks.ok(), 0, 1, checks.detail()};
}

CriterionResult criterion_2() {
  Checks checks;
  const TextLabels t;
  const auto& g = t.g;
  const GPoset p = build_full_poset(4);
  const IntMatrix e = build_mtransform(p);
  const std::vector<Terms> rows = {
      {},
      {{1, g[1]}, {2, g[2]}, {2, g[3]}},
      {{2, g[2]}, {1, g[4]}},
      {{2, g[3]}, {2, g[4]}, {3, g[6]}, {3, g[5]}},
      {{3, g[4]}, {4, g[7]}, {2, g[8]}},
      {{3, g[5]}, {1, g[8]}},
      {{3, g[6]}, {1, g[8]}},
      {{4, g[7]}, {1, g[9]}},
      {{4, g[8]}, {4, g[9]}},
      {{5, g[9]}, {6, g[10]}},
      {{6, g[10]}},
  };
  for (std::size_t i = 1; i <= 10; ++i)
    three_way(g[1], g[i], p, e, combo(rows[i]), checks, "g1*g" + std::to_string(i), false);
  return {2, "n=4 first column of the multiplication table", checks.ok(), 0, 5, checks.detail()};
}

const std::vector<std::vector<long>> kPrintedE4Matrix = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},   {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},  {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0},   {1, 3, 0, 3, 1, 0, 0, 0, 0, 0, 0},  {1, 3, 1, 2, 0, 1, 0, 0, 0, 0, 0},
    {1, 3, 0, 3, 0, 0, 1, 0, 0, 0, 0},   {1, 4, 1, 5, 1, 2, 1, 1, 0, 0, 0},  {1, 4, 2, 4, 0, 4, 0, 0, 1, 0, 0},
    {1, 5, 2, 8, 2, 6, 2, 4, 1, 1, 0},   {1, 6, 3, 12, 4, 12, 4, 12, 3, 6, 1},
};

CriterionResult criterion_3() {
  Checks checks;
  const TextLabels t;
  const GPoset p = build_full_poset(4);
  const IntMatrix e = build_mtransform(p);
  const IntMatrix printed = IntMatrix::from_rows(kPrintedE4Matrix);
  const auto deg = p.degrees();
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == 0 || deg[i] != deg[i - 1]) groups.emplace_back();
    groups.back().push_back(i);
  }
  std::vector<std::string> matches;
  auto search = [&](auto& self, std::size_t k) -> void {
    if (k == groups.size()) {
      std::vector<std::size_t> order;
      for (const auto& grp : groups) order.insert(order.end(), grp.begin(), grp.end());
      if (e.select(order, order) == printed) {
        std::string s;
        for (std::size_t r = 0; r < order.size(); ++r) s += (r ? " " : "") + t.name(p[order[r]]);
        matches.push_back("[" + s + "]");
      }
      return;
    }
    auto& grp = groups[k];
    std::sort(grp.begin(), grp.end());
    do self(self, k + 1);
    while (std::next_permutation(grp.begin(), grp.end()));
  };
  search(search, 0);
  checks.expect(!matches.empty(), "no within-degree ordering reproduces the printed matrix");
  std::string found;
  for (const auto& m : matches) found += (found.empty() ? "" : ", ") + m;
  checks.note(std::to_string(matches.size()) + " matching ordering(s) in text labels: " + found);
  return {3, "E(4) M-transform matches the printed matrix", checks.ok(), 0, 5, checks.detail()};
}

bool mnukhin_matches(const IntMatrix& e, const std::vector<int>& degrees, Checks& checks, const std::string& label) {
  bool ok = true;
  for (long k = 0; k <= 3; ++k) {
    const bool same = mnukhin_power(e, degrees, k) == matrix_power(e, static_cast<unsigned>(k));
    checks.expect(same, label + ": power " + std::to_string(k));
    ok = ok && same;
  }
  const IntMatrix inv = mnukhin_power(e, degrees, -1);
  const IntMatrix id = IntMatrix::identity(e.rows());
  const bool inverse = inv * e == id && e * inv == id && inv == unitriangular_inverse(e);
  checks.expect(inverse, label + ": inverse");
  return ok && inverse;
}

CriterionResult criterion_4(const std::string& cache_dir) {
  Checks checks;
  for (int n = 3; n <= 5; ++n) {
    const GPoset p = cached_full_poset(n, -1, cache_dir);
    if (resolve_cache_dir(cache_dir)) {
      const GPoset fresh = build_full_poset(n);
      checks.expect(fresh.members() == p.members(), "cached E(" + std::to_string(n) + ") differs from a fresh build");
    }
    const IntMatrix e = build_mtransform(p);
    mnukhin_matches(e, p.degrees(), checks, "E(" + std::to_string(n) + ")");
  }
  const MultisetPoset ex8(trivial_group(3), 1);
  const MultisetPoset ex9(parse_group("S2", 3), 1);
  mnukhin_matches(build_general_mtransform(ex8), ex8.degrees(), checks, "trivial group, 3 variables");
  mnukhin_matches(build_general_mtransform(ex9), ex9.degrees(), checks, "S2 on x1,x2");
  return {4, "Mnukhin power and inverse laws", checks.ok(), 0, 30, checks.detail()};
}

CriterionResult criterion_5() {
  Checks checks;
  const TextLabels t;
  const auto& g = t.g;
  const GPoset p = build_full_poset(4);
  const IntMatrix e = build_mtransform(p);
  const IsoClass p3 = g[3];
  const LinComb expected = combo({{1, g[3]}, {6, g[5]}, {6, g[6]}, {2, g[4]}, {4, g[8]}, {4, g[7]}});
  const LinComb kocay = product_kocay(p3, p3, p);
  checks.expect(kocay == expected, "I(P3)^2 = " + kocay.to_string());
  const auto classes = product_fleischmann(p3, p3, 4, 4);
  std::vector<std::uint64_t> paw;
  std::vector<std::uint64_t> star;
  for (const auto& c : classes) {
    checks.expect(c.stabilizer_quotient && *c.stabilizer_quotient == c.pair_count,
                  "stabilizer quotient differs for " + c.underlying.graph6());
    if (c.underlying == g[8]) paw.push_back(c.pair_count);
    if (c.underlying == g[5]) star.push_back(c.pair_count);
  }
  checks.expect(paw == std::vector<std::uint64_t>{2, 2}, "paw colorings do not split 2+2");
  checks.expect(star == std::vector<std::uint64_t>{6}, "K1,3 is not one class of 6");
  const LinComb mt = product_mtransform(p3, p3, p, e).product;
  checks.expect(mt.coefficient(g[7]) == 4 && mt.coefficient(g[8]) == 4, "M-transform coefficients for C4/paw are not 4");
  checks.expect(mt == kocay, "M-transform route differs");
  return {5, "I(P3)^2 totals, coloring split, M-transform coefficients", checks.ok(), 0, 1, checks.detail()};
}

LabeledGraph random_graph(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> order(1, max_n);
  std::bernoulli_distribution coin(0.5);
  const int n = order(rng);
  LabeledGraph h(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) h.add_edge(i, j);
  return h;
}

CriterionResult criterion_6() {
  Checks checks;
  const IsoClass k2 = G("0-1"), p3 = G("0-1,0-2");
  const LinComb product = general_product(k2, p3);
  const LinComb expected = combo({{2, p3}, {2, G("0-1,1-2,2-3")}, {3, G("0-1,0-2,1-2")}, {3, G("0-1,0-2,0-3")},
                                  {1, G("0-1,0-2,3-4")}});
  checks.expect(product == expected, "K2*P3 = " + product.to_string());
  auto holds_at = [&](const LabeledGraph& h) {
    return product.evaluate(h) == Rational(from_uint64(count_subgraphs(k2, h) * count_subgraphs(p3, h)));
  };
  const GPoset e5 = build_full_poset(5);
  for (std::size_t i = 0; i < e5.size(); ++i) checks.expect(holds_at(e5.host(i)), "fails at " + e5[i].graph6());
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 100; ++k) {
    const LabeledGraph h = random_graph(rng, 8);
    checks.expect(holds_at(h), "fails at random graph " + emit_graph6(h));
  }
  checks.expect(9 * 15 == 2 * 15 + 2 * 16 + 3 * 4 + 3 * 3 + 52, "worked identity arithmetic");
  return {6, "general product K2*P3", checks.ok(), 0, 60, checks.detail()};
}

CriterionResult criterion_7() {
  Checks checks;
  const GPoset p = build_full_poset(4);
  const IntMatrix e = build_mtransform(p);
  int pairs = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i; j < p.size(); ++j) {
      ++pairs;
      const std::string label = p[i].graph6() + "*" + p[j].graph6();
      three_way(p[i], p[j], p, e, std::nullopt, checks, label, true);
      checks.expect(product_kocay(p[i], p[j], p) == product_kocay(p[j], p[i], p), label + " not commutative");
    }
  checks.note(std::to_string(pairs) + " pairs");
  return {7, "three-way product agreement on E(4)", checks.ok() && pairs == 66, 0, 30, checks.detail()};
}

const std::vector<std::vector<std::optional<long>>> kPrintedUlamTable = {
    // d = 2..12, columns n = 4..12
    {0, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 1, 2, 2, 2, 2, 2, 2},
    {std::nullopt, 0, 2, 4, 4, 5, 5, 5, 5},
    {std::nullopt, 1, 0, 4, 8, 10, 10, 11, 11},
    {std::nullopt, std::nullopt, 0, 1, 9, 18, 23, 25, 25},
    {std::nullopt, std::nullopt, 3, 0, 6, 30, 49, 60, 65},
    {std::nullopt, std::nullopt, std::nullopt, -8, -9, 24, 82, 133, 157},
    {std::nullopt, std::nullopt, std::nullopt, -13, -50, -24, 96, 265, 385},
    {std::nullopt, std::nullopt, std::nullopt, -2, -113, -203, -29, 410, 878},
    {std::nullopt, std::nullopt, std::nullopt, std::nullopt, -169, -635, -738, 173, 1678},
    {std::nullopt, std::nullopt, std::nullopt, std::nullopt, -201, -1431, -3018, -2237, 1779},
};

CriterionResult criterion_8() {
  Checks checks;
  const UlamTable t = ulam_difference_table(12, 12);
  int compared = 0;
  for (int d = 2; d <= 12; ++d)
    for (int n = 4; n <= 12; ++n) {
      const auto& printed = kPrintedUlamTable[static_cast<std::size_t>(d - 2)][static_cast<std::size_t>(n - 4)];
      const auto it = t.cells.find({n, d});
      checks.expect(printed.has_value() == (it != t.cells.end()),
                    "cell layout differs at d=" + std::to_string(d) + ", n=" + std::to_string(n));
      if (!printed || it == t.cells.end()) continue;
      ++compared;
      checks.expect(it->second == *printed, "d=" + std::to_string(d) + ", n=" + std::to_string(n) + ": printed " +
                                                std::to_string(*printed) + ", computed " + it->second.get_str());
    }
  checks.note(std::to_string(compared) + " printed cells compared");
  return {8, "Ulam difference table", checks.ok(), 0, 60, checks.detail()};
}

const std::vector<std::pair<int, std::string>> kPrintedRelations = {
    {2, "1/2g_1^2-1/2g_1-g_3"},
    {4, "1/2g_1^3-3/2g_1^2-g_11g_3+g_1+2g_3"},
    {6, "g_1g_3-2g_3-2/3g_1-g_5-1/3g_1^3+g_1^2"},
    {8, "g_1g_5-3g_5"},
    {7, "-3/4g_1^3-1/2g_1g_5+3/2g_5+1/8g_1^4-3/4g_1-1/4g_1^2g_3+11/8g_1^2+5/4g_1g_3-3/2g_3"},
    {10, "-47/12g_1g_5-5/2g_1-5g_3+5g_5+137/24g_1^2+77/12g_1g_3-75/16g_1^3-1/12g_1^3g_5+g_1^2g_5"
         "-1/24g_1^4g_3+7/12g_1^3g_3-71/24g_1^2g_3+85/48g_1^4-5/16g_1^5+1/48g_1^6"},
    {9, "-5/4g_1^4-1/2g_1^2g_5+7/2g_1g_5+1/8g_1^5-25/4g_1^2-1/4g_1^3g_3+35/8g_1^3+9/4g_1^2g_3"
        "-13/2g_1g_3-6g_5+3g_1+6g_3"},
};

CriterionResult criterion_9() {
  Checks checks;
  const TextLabels t;
  const GPoset p4 = build_full_poset(4);
  const InvariantBindings b4 = t.bindings();
  checks.expect(verify_relation("g1^7 - 21g1^6 + 175g1^5 - 735g1^4 + 1624g1^3 - 1764g1^2 + 720g1 = 0", b4, p4).holds,
                "degree-7 syzygy");
  const GPoset p3 = build_full_poset(3);
  const InvariantBindings b3 = {{"g1", G("0-1")}, {"g2", G("0-1,0-2")}, {"g3", G("0-1,0-2,1-2")}};
  checks.expect(verify_relation("g2 = (g1^2 - g1)/2", b3, p3).holds, "n=3 relation for g2");
  checks.expect(verify_relation("g3 = 1/6g1^3 - 1/2g1^2 + 1/3g1", b3, p3).holds, "n=3 relation for g3");
  const bool printed_g3 = verify_relation("g3 = 1/6g1^3 - 1/2g1^2 + g1", b3, p3).holds;
  checks.note(std::string("printed n=3 formula for g3 ") + (printed_g3 ? "holds" : "differs (linear term 1/3g1 holds)"));
  const std::vector<std::pair<std::string, IsoClass>> basis = {{"g1", t.g[1]}, {"g3", t.g[3]}, {"g5", t.g[5]}};
  std::string printed_status;
  for (const auto& [k, formula] : kPrintedRelations) {
    const DerivedRelation r = derive_relation(t.g[static_cast<std::size_t>(k)], basis, p4);
    checks.expect(r.holds, "no polynomial relation found for g" + std::to_string(k));
    std::string text = formula;
    for (std::size_t at; (at = text.find("g_11g_3")) != std::string::npos;) text.replace(at, 7, "g_1g_3");
    const bool printed_ok = verify_relation("g" + std::to_string(k) + " = " + text, b4, p4).holds;
    printed_status += (printed_status.empty() ? "" : " ") + ("g" + std::to_string(k)) + (printed_ok ? ":ok" : ":differs");
  }
  checks.note("printed formulas on E(4): " + printed_status);
  return {9, "syzygy and relations in g1, g3, g5", checks.ok(), 0, 5, checks.detail()};
}

CriterionResult criterion_10() {
  Checks checks;
  const GPoset p3 = build_full_poset(3);
  const GPoset p4 = build_full_poset(4);
  const IsoClass k2 = G("0-1"), p3g = G("0-1,0-2"), p4g = G("0-1,1-2,2-3"), twok2 = G("0-1,2-3");
  const std::vector<IsoClass> single{k2};
  checks.expect(is_separator(single, p3).is_separator, "{K2} does not separate E(3)");
  const std::vector<IsoClass> triple{k2, p3g, p4g};
  const SeparatorReport r = is_separator(triple, p4);
  std::string why;
  if (r.witness) why = " (witness " + p4[r.witness->first].graph6() + ", " + p4[r.witness->second].graph6() + ")";
  checks.expect(r.is_separator, "{K2, P3, P4} does not separate E(4)" + why);
  const SeparatorReport s = is_separator(single, p4);
  bool witness_ok = false;
  if (s.witness) {
    const IsoClass& a = p4[s.witness->first];
    const IsoClass& b = p4[s.witness->second];
    witness_ok = (a == twok2 && b == p3g) || (a == p3g && b == twok2);
  }
  checks.expect(!s.is_separator && witness_ok, "{K2} on E(4) lacks the (2K2, P3) witness");
  const MinimalSeparators m = minimal_separators(p4);
  std::string sets;
  for (const auto& set : m.sets) {
    std::string one;
    for (const auto& g : set) one += (one.empty() ? "" : ",") + g.graph6();
    sets += (sets.empty() ? "" : " ") + ("{" + one + "}");
  }
  checks.note("minimum separator size " + std::to_string(m.size) + ": " + sets);
  return {10, "separator sets of E(3) and E(4)", checks.ok(), 0, 60, checks.detail()};
}

CriterionResult criterion_11() {
  Checks checks;
  const IsoClass k2 = G("0-1"), p3 = G("0-1,0-2"), k3 = G("0-1,0-2,1-2");
  const InseparablePair one = inseparable_pair(1);
  checks.expect(one.t_parts == ComponentMultiset{{k2, 2}} && one.u_parts == ComponentMultiset{{p3, 1}},
                "d=1 pair is not (2K2, P3)");
  const InseparablePair two = inseparable_pair(2);
  checks.expect(two.next_generator == k3, "d=2 next generator is not K3");
  checks.expect(two.t_parts == ComponentMultiset{{p3, 3}} && two.u_parts == ComponentMultiset{{k3, 1}, {k2, 3}},
                "d=2 pair is not (3P3, K3+3K2)");
  checks.expect(two.degree == 6 && two.degree_bound == 9, "d=2 degree or bound");
  for (int d = 1; d <= 20; ++d)
    checks.expect(s_sum(d) == s_closed(d) && s_recursive(d) == s_closed(d), "S(" + std::to_string(d) + ")");
  return {11, "inseparable pairs and S(d)", checks.ok(), 0, 5, checks.detail()};
}

CriterionResult criterion_12() {
  Checks checks;
  const GPoset p = build_full_poset(4);
  for (const auto& g : p.members()) {
    const LinComb l = complement_invariant_expansion(g, p, 4);
    for (std::size_t h = 0; h < p.size(); ++h) {
      const Rational direct(from_uint64(count_subgraphs(g, complement(p.host(h), 4))));
      checks.expect(l.evaluate(p.host(h)) == direct, "complement expansion of " + g.graph6() + " at " + p[h].graph6());
    }
  }
  const IntMatrix e = build_mtransform(p);
  IntMatrix lower = e;
  const auto deg = p.degrees();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (deg[i] > 3)
      for (std::size_t j = 0; j < p.size(); ++j) lower(i, j) = 0;
  checks.expect(solve_upper_half(p, lower) == e, "upper-half reconstruction of E(4)");
  return {12, "complement expansion and upper-half recursion", checks.ok(), 0, 10, checks.detail()};
}

void check_minor_ranks(const IntMatrix& e, const std::vector<int>& deg, Checks& checks, const std::string& label) {
  const int top = *std::max_element(deg.begin(), deg.end());
  for (int low = 0; low <= top; ++low)
    for (int high = low; high <= top; ++high) {
      const IntMatrix m = degree_minor(e, deg, low, high);
      checks.expect(exact_rank(m) == std::min(m.rows(), m.cols()),
                    label + " minor " + std::to_string(low) + "/" + std::to_string(high));
    }
}

CriterionResult criterion_13() {
  Checks checks;
  for (int n = 2; n <= 5; ++n) {
    const GPoset p = build_full_poset(n);
    check_minor_ranks(build_mtransform(p), p.degrees(), checks, "E(" + std::to_string(n) + ")");
  }
  for (int vars = 1; vars <= 6; ++vars) {
    const MultisetPoset p(trivial_group(vars), 1);
    check_minor_ranks(build_general_mtransform(p), p.degrees(), checks, "trivial N=" + std::to_string(vars));
  }
  for (int n = 1; n <= 6; ++n)
    for (int high = 0; high <= n; ++high)
      for (int low = 0; low <= high; ++low) {
        const IntMatrix direct = trivial_minor_direct(n, low, high);
        checks.expect(trivial_minor_recursive(n, low, high) == direct,
                      "block recursion n=" + std::to_string(n) + " " + std::to_string(low) + "/" + std::to_string(high));
        checks.expect(exact_rank(direct) == std::min(direct.rows(), direct.cols()), "colex minor rank");
      }
  return {13, "minor ranks and block recursion", checks.ok(), 0, 60, checks.detail()};
}

std::vector<Exponents> grid(int vars, int cap) {
  std::vector<Exponents> out;
  Exponents e(static_cast<std::size_t>(vars), 0);
  for (;;) {
    out.push_back(e);
    int i = vars - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == cap) e[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return out;
    ++e[static_cast<std::size_t>(i)];
  }
}

CriterionResult criterion_14() {
  Checks checks;
  const PermGroup s2 = parse_group("S2", 2);
  checks.expect(multiset_invariant({1, 2}, {1, 2}, s2) == 1, "I(x1x2^2)(x1x2^2)");
  checks.expect(multiset_invariant({1, 2}, {2, 2}, s2) == 4, "I(x1x2^2)(x1^2x2^2)");
  std::mt19937_64 rng(7);
  const std::vector<PermGroup> groups = {s2, parse_group("S3", 3), trivial_group(1), trivial_group(2),
                                         trivial_group(3), trivial_group(4)};
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> entry(0, 3);
  for (int k = 0; k < 200; ++k) {
    const PermGroup& g = groups[pick(rng)];
    Exponents m(static_cast<std::size_t>(g.degree()));
    Exponents w(m.size());
    for (auto& x : m) x = bit(rng);
    for (auto& x : w) x = entry(rng);
    checks.expect(multiset_invariant(m, w, g) == orbit_sum_value(m, w, g), "multilinear coincidence");
  }
  for (int vars = 1; vars <= 4; ++vars)
    for (int cap = 1; cap <= 2; ++cap)
      for (const std::string& spec : std::vector<std::string>{"trivial", "S" + std::to_string(vars)}) {
        const PermGroup g = parse_group(spec, vars);
        const MultisetPoset p(g, cap);
        const IntMatrix e = build_general_mtransform(p);
        const auto points = grid(vars, cap);
        std::vector<std::vector<BigInt>> inv(points.size());
        for (std::size_t w = 0; w < points.size(); ++w)
          for (const auto& m : p.members()) inv[w].push_back(multiset_invariant(m, points[w], g));
        for (const auto& a : points) {
          const auto c = express_orbit_sum(a, p, e);
          for (std::size_t w = 0; w < points.size(); ++w) {
            Rational total = 0;
            for (std::size_t k = 0; k < c.size(); ++k) total += c[k] * Rational(inv[w][k]);
            if (total != Rational(orbit_sum_value(a, points[w], g))) {
              checks.expect(false, "round trip N=" + std::to_string(vars) + " cap=" + std::to_string(cap) + " " + spec);
              break;
            }
          }
        }
      }
  return {14, "multiset invariants and orbit-sum expression", checks.ok(), 0, 10, checks.detail()};
}

CriterionResult criterion_15() {
  Checks checks;
  const auto list = connected_classes(4);
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
  std::uniform_int_distribution<int> parts(1, 5);
  for (int k = 0; k < 100; ++k) {
    ComponentMultiset chosen;
    const int want = parts(rng);
    for (int t = 0; t < want; ++t) {
      const IsoClass& c = list[pick(rng)];
      if (total_degree(chosen) + c.degree() > 10 || total_support(chosen) + c.cv() > kMaxVertices) continue;
      ++chosen[c];
    }
    const LabeledGraph host = disjoint_union_graph(chosen);
    const auto mult = reconstruct_components(host, list);
    const ComponentMultiset direct = connected_components(host);
    ComponentMultiset recovered;
    for (std::size_t i = 0; i < list.size(); ++i)
      if (mult[i]) recovered[list[i]] = static_cast<int>(mult[i]);
    checks.expect(recovered == direct && direct == chosen, "component recovery for " + emit_graph6(host));
  }
  return {15, "component reconstruction", checks.ok(), 0, 10, checks.detail()};
}

}  // namespace

CriterionResult run_criterion(int id, const std::string& cache_dir) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = criterion_1(); break;
      case 2: r = criterion_2(); break;
      case 3: r = criterion_3(); break;
      case 4: r = criterion_4(cache_dir); break;
      case 5: r = criterion_5(); break;
      case 6: r = criterion_6(); break;
      case 7: r = criterion_7(); break;
      case 8: r = criterion_8(); break;
      case 9: r = criterion_9(); break;
      case 10: r = criterion_10(); break;
      case 11: r = criterion_11(); break;
      case 12: r = criterion_12(); break;
      case 13: r = criterion_13(); break;
      case 14: r = criterion_14(); break;
      case 15: r = criterion_15(); break;
      default: fail(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument && (id < 1 || id > kCriterionCount)) throw;
    r.id = id;
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
    r.passed = false;
    r.detail += (r.detail.empty() ? "" : " | ") + std::string("time limit exceeded");
  }
  return r;
}

std::vector<CriterionResult> run_selftest(const std::string& cache_dir, std::optional<int> only) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    if (!only || *only == id) out.push_back(run_criterion(id, cache_dir));
  return out;
}

}  // namespace gia
