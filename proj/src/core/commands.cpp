#include "commands.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "algebra.hpp"
#include "cache.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "mtransform.hpp"
#include "multiset.hpp"
#include "relation.hpp"
#include "selftest.hpp"

namespace gia {

namespace {

struct Output {
  Json json;
  std::string csv;
  std::string table;
  bool passed = true;
};

using Handler = std::function<Output(const Json&)>;

bool has(const Json& req, const char* key) { return req.contains(key) && !req[key].is_null(); }

int int_arg(const Json& req, const char* key, std::optional<int> fallback = std::nullopt) {
  if (!has(req, key)) {
    require(fallback.has_value(), ErrorCode::InvalidArgument, std::string("missing argument '") + key + "'");
    return *fallback;
  }
  const Json& v = req[key];
  if (v.is_string()) {
    try {
      std::size_t used = 0;
      const int out = std::stoi(v.get<std::string>(), &used);
      require(used == v.get<std::string>().size(), ErrorCode::Parse, std::string("argument '") + key + "' is not an integer");
      return out;
    } catch (const std::logic_error&) {
      fail(ErrorCode::Parse, std::string("argument '") + key + "' is not an integer");
    }
  }
  require(v.is_number_integer(), ErrorCode::InvalidArgument, std::string("argument '") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_arg(const Json& req, const char* key, std::optional<std::string> fallback = std::nullopt) {
  if (!has(req, key)) {
    require(fallback.has_value(), ErrorCode::InvalidArgument, std::string("missing argument '") + key + "'");
    return *fallback;
  }
  require(req[key].is_string(), ErrorCode::InvalidArgument, std::string("argument '") + key + "' must be a string");
  return req[key].get<std::string>();
}

LabeledGraph graph_arg(const Json& req, const char* key) { return parse_graph(string_arg(req, key)); }
IsoClass class_arg(const Json& req, const char* key) { return canonicalize(graph_arg(req, key)); }

Exponents exponents_arg(const Json& req, const char* key) {
  Exponents out;
  const Json& v = req.at(key);
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(x.get<int>());
  } else {
    std::stringstream in(string_arg(req, key));
    for (std::string part; std::getline(in, part, ',');) out.push_back(std::stoi(part));
  }
  for (int x : out) require(x >= 0, ErrorCode::InvalidArgument, "exponents must be non-negative");
  require(!out.empty(), ErrorCode::InvalidArgument, std::string("argument '") + key + "' is empty");
  return out;
}

std::string monomial_label(const Exponents& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += (out.empty() ? "" : "*") + ("x" + std::to_string(i + 1));
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Json exponents_json(const Exponents& m) {
  Json out = Json::array();
  for (int x : m) out.push_back(x);
  return out;
}

std::string cache_dir(const Json& req) { return string_arg(req, "cache_dir", std::string()); }

GPoset full_poset(const Json& req, const char* key = "n") {
  const int n = int_arg(req, key);
  require(n >= 0 && n <= kMaxVertices, ErrorCode::CapExceeded, "n must lie in 0.." + std::to_string(kMaxVertices));
  return cached_full_poset(n, int_arg(req, "d", -1), cache_dir(req));
}

/// Either E(n) or a multiset poset when a group is given.
struct AnyPoset {
  std::optional<GPoset> graphs;
  std::optional<MultisetPoset> multisets;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  IntMatrix e;
};

AnyPoset any_poset(const Json& req) {
  AnyPoset out;
  if (has(req, "group")) {
    const int vars = int_arg(req, "vars");
    out.multisets.emplace(parse_group(string_arg(req, "group"), vars), int_arg(req, "cap", 1), int_arg(req, "d", -1));
    for (const auto& m : out.multisets->members()) out.labels.push_back(monomial_label(m));
    out.degrees = out.multisets->degrees();
    out.e = build_general_mtransform(*out.multisets);
  } else {
    out.graphs = full_poset(req);
    out.labels = member_labels(*out.graphs);
    out.degrees = out.graphs->degrees();
    out.e = build_mtransform(*out.graphs);
  }
  return out;
}

Output matrix_output(const IntMatrix& m, const std::vector<std::string>& labels) {
  Output out;
  out.json = {{"labels", labels}, {"matrix", matrix_json(m)}};
  out.csv = m.to_csv(labels);
  std::ostringstream t;
  for (std::size_t i = 0; i < labels.size(); ++i) t << i << " " << labels[i] << "\n";
  out.table = t.str() + m.to_text();
  return out;
}

std::string lincomb_table(const LinComb& c) {
  std::ostringstream t;
  for (const auto& [g, coeff] : c.terms()) t << to_string(coeff) << "\t" << g.graph6() << "\n";
  return t.str();
}

std::string lincomb_csv(const LinComb& c) {
  std::string out = "coeff,graph6\n";
  for (const auto& [g, coeff] : c.terms()) out += to_string(coeff) + "," + g.graph6() + "\n";
  return out;
}

Json components_json(const ComponentMultiset& parts) {
  Json out = Json::array();
  for (const auto& [g, k] : parts) out.push_back({{"graph6", g.graph6()}, {"multiplicity", k}});
  return out;
}

Output cmd_enumerate(const Json& req) {
  const GPoset p = full_poset(req);
  Output out{poset_json(p), "index,graph6,degree\n", {}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::string row = std::to_string(i) + "," + p[i].graph6() + "," + std::to_string(p[i].degree()) + "\n";
    out.csv += row;
    out.table += std::to_string(i) + "\t" + p[i].graph6() + "\t" + std::to_string(p[i].degree()) + "\n";
  }
  return out;
}

Output cmd_mtransform(const Json& req) {
  const AnyPoset p = any_poset(req);
  if (has(req, "power")) return matrix_output(mnukhin_power(p.e, p.degrees, int_arg(req, "power")), p.labels);
  return matrix_output(p.e, p.labels);
}

Output cmd_invert(const Json& req) {
  const AnyPoset p = any_poset(req);
  const IntMatrix inv = p.graphs ? mtransform_inverse(*p.graphs, p.e) : mnukhin_power(p.e, p.degrees, -1);
  return matrix_output(inv, p.labels);
}

Output cmd_count(const Json& req) {
  const IsoClass pattern = class_arg(req, "pattern");
  const LabeledGraph host = graph_arg(req, "host");
  const std::uint64_t c = count_subgraphs(pattern, host);
  return {{{"pattern", pattern.graph6()}, {"host", emit_graph6(host)}, {"count", c}},
          "count\n" + std::to_string(c) + "\n", std::to_string(c) + "\n"};
}

Output cmd_product(const Json& req) {
  const IsoClass a = class_arg(req, "a"), b = class_arg(req, "b");
  const std::string method = string_arg(req, "method", std::string("kocay"));
  require(method == "kocay" || method == "fleischmann" || method == "mtransform" || method == "all",
          ErrorCode::InvalidArgument, "method must be kocay, fleischmann, mtransform or all");
  const bool need_poset = method == "mtransform" || method == "all" || has(req, "n");
  std::optional<GPoset> p;
  if (need_poset) p = full_poset(req);
  const int max_cv = p ? *p->ambient_n() : a.cv() + b.cv();
  require(max_cv <= kMaxVertices, ErrorCode::CapExceeded, "product support exceeds the vertex cap");
  Output out;
  out.json = {{"a", a.graph6()}, {"b", b.graph6()}, {"n", max_cv}};
  std::vector<LinComb> results;
  LinComb shown;
  if (method == "kocay" || method == "all") {
    shown = p ? product_kocay(a, b, *p) : product_kocay(a, b, max_cv);
    results.push_back(shown);
    out.json["kocay"] = lincomb_json(shown);
  }
  if (method == "fleischmann" || method == "all") {
    std::optional<int> group_n;
    if (req.value("group_check", false)) group_n = max_cv;
    const auto classes = product_fleischmann(a, b, max_cv, group_n);
    Json rows = Json::array();
    for (const auto& c : classes) {
      Json row = {{"graph6", c.underlying.graph6()},
                  {"only_a", emit_edge_list(LabeledGraph(c.underlying.cv(), c.only_a))},
                  {"only_b", emit_edge_list(LabeledGraph(c.underlying.cv(), c.only_b))},
                  {"shared", emit_edge_list(LabeledGraph(c.underlying.cv(), c.shared))},
                  {"coeff", c.pair_count}};
      if (c.stabilizer_quotient) row["stabilizer_quotient"] = *c.stabilizer_quotient;
      rows.push_back(std::move(row));
    }
    shown = fleischmann_totals(classes);
    results.push_back(shown);
    out.json["fleischmann"] = {{"classes", rows}, {"totals", lincomb_json(shown)}};
  }
  if (method == "mtransform" || method == "all") {
    const MTransformProduct r = product_mtransform(a, b, *p, build_mtransform(*p));
    shown = r.product;
    results.push_back(shown);
    out.json["mtransform"] = lincomb_json(shown);
  }
  bool agree = true;
  for (const auto& r : results) agree = agree && r == results.front();
  if (method == "all") out.json["agree"] = agree;
  out.json["product"] = lincomb_json(results.front());
  out.passed = agree;
  out.csv = lincomb_csv(results.front());
  out.table = lincomb_table(results.front());
  return out;
}

Output cmd_general_product(const Json& req) {
  const LinComb c = general_product(class_arg(req, "a"), class_arg(req, "b"));
  return {{{"product", lincomb_json(c)}}, lincomb_csv(c), lincomb_table(c)};
}

Output cmd_express(const Json& req) {
  LinComb c;
  Json head = Json::object();
  if (has(req, "monomial")) {
    const AnyPoset p = any_poset(req);
    require(p.multisets.has_value(), ErrorCode::InvalidArgument, "--monomial needs a group");
    const Exponents a = exponents_arg(req, "monomial");
    const auto coeffs = express_orbit_sum(a, *p.multisets, p.e);
    Json terms = Json::array();
    Output out;
    out.csv = "coeff,monomial\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      terms.push_back({{"coeff", number_json(coeffs[k])}, {"monomial", exponents_json((*p.multisets)[k])}});
      out.csv += to_string(coeffs[k]) + "," + p.labels[k] + "\n";
      out.table += to_string(coeffs[k]) + "\t" + p.labels[k] + "\n";
    }
    out.json = {{"monomial", exponents_json(a)}, {"terms", terms}};
    return out;
  }
  const GPoset p = full_poset(req);
  if (has(req, "complement_of")) {
    const IsoClass g = class_arg(req, "complement_of");
    c = complement_invariant_expansion(g, p, *p.ambient_n());
    head["complement_of"] = g.graph6();
  } else {
    require(has(req, "values") && req["values"].is_array(), ErrorCode::InvalidArgument,
            "express needs --values, --complement-of or --monomial");
    std::vector<Rational> values;
    for (const auto& v : req["values"]) values.push_back(rational_from_json(v));
    require(values.size() == p.size(), ErrorCode::InvalidArgument,
            "expected " + std::to_string(p.size()) + " values, one per poset member");
    c = express_invariant(values, p, build_mtransform(p));
  }
  head["expression"] = lincomb_json(c);
  return {head, lincomb_csv(c), lincomb_table(c)};
}

std::vector<IsoClass> class_list(const Json& req, const char* key) {
  std::vector<IsoClass> out;
  const Json& v = req.at(key);
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(canonicalize(parse_graph(x.get<std::string>())));
  } else {
    std::stringstream in(v.get<std::string>());
    for (std::string part; std::getline(in, part, ';');) out.push_back(canonicalize(parse_graph(part)));
  }
  return out;
}

Json class_names(const std::vector<IsoClass>& gs) {
  Json out = Json::array();
  for (const auto& g : gs) out.push_back(g.graph6());
  return out;
}

Output cmd_separators(const Json& req) {
  const GPoset p = full_poset(req);
  Output out;
  if (has(req, "invariants")) {
    const auto inv = class_list(req, "invariants");
    const SeparatorReport r = is_separator(inv, p);
    out.json = {{"n", *p.ambient_n()}, {"invariants", class_names(inv)}, {"is_separator", r.is_separator}};
    if (r.witness) {
      Json values = Json::array();
      for (auto v : r.witness_values) values.push_back(v);
      out.json["witness"] = {p[r.witness->first].graph6(), p[r.witness->second].graph6()};
      out.json["witness_values"] = values;
    }
    out.table = std::string(r.is_separator ? "separator" : "not a separator") +
                (r.witness ? " witness " + p[r.witness->first].graph6() + " " + p[r.witness->second].graph6() : "") + "\n";
    return out;
  }
  const MinimalSeparators m = minimal_separators(p);
  Json sets = Json::array();
  for (const auto& s : m.sets) {
    sets.push_back(class_names(s));
    std::string line;
    for (const auto& g : s) line += (line.empty() ? "" : " ") + g.graph6();
    out.table += line + "\n";
  }
  out.json = {{"n", *p.ambient_n()}, {"minimum_size", m.size}, {"sets", sets}, {"subsets_tested", m.subsets_tested}};
  return out;
}

Output cmd_reconstruct(const Json& req) {
  const LabeledGraph host = graph_arg(req, "host");
  const int max_d = int_arg(req, "d", std::min(popcount(host.bits()), 7));
  const auto list = connected_classes(max_d);
  const auto mult = reconstruct_components(host, list);
  ComponentMultiset recovered;
  for (std::size_t i = 0; i < list.size(); ++i)
    if (mult[i]) recovered[list[i]] = static_cast<int>(mult[i]);
  const bool agree = recovered == connected_components(host);
  Output out{{{"host", emit_graph6(host)}, {"components", components_json(recovered)}, {"agrees_with_direct", agree}},
             "graph6,multiplicity\n", {}};
  for (const auto& [g, k] : recovered) {
    out.csv += g.graph6() + "," + std::to_string(k) + "\n";
    out.table += std::to_string(k) + "\t" + g.graph6() + "\n";
  }
  out.passed = agree;
  return out;
}

Output cmd_inseparable(const Json& req) {
  std::optional<IsoClass> next;
  if (has(req, "next")) next = class_arg(req, "next");
  const InseparablePair r = inseparable_pair(int_arg(req, "d"), next);
  Json coeffs = Json::array();
  for (const auto& c : r.coefficients) coeffs.push_back(number_json(c));
  Json out = {{"d", r.d},
              {"next_generator", r.next_generator.graph6()},
              {"span", class_names(r.span.members())},
              {"coefficients", coeffs},
              {"T", {{"components", components_json(r.t_parts)}}},
              {"U", {{"components", components_json(r.u_parts)}}},
              {"degree", r.degree},
              {"degree_bound", number_json(r.degree_bound)},
              {"checked_invariants", r.checked_invariants.size()}};
  if (r.t_graph) out["T"]["graph6"] = emit_graph6(*r.t_graph);
  if (r.u_graph) out["U"]["graph6"] = emit_graph6(*r.u_graph);
  std::ostringstream t;
  t << "d=" << r.d << " degree " << r.degree << " bound " << r.degree_bound.get_str() << "\n";
  for (const auto& [g, k] : r.t_parts) t << "T " << k << "x" << g.graph6() << "\n";
  for (const auto& [g, k] : r.u_parts) t << "U " << k << "x" << g.graph6() << "\n";
  return {out, {}, t.str()};
}

Output cmd_complement_solve(const Json& req) {
  const GPoset p = full_poset(req);
  require(p.complete(), ErrorCode::Precondition, "complement-solve needs the full poset");
  const int n = *p.ambient_n();
  const IntMatrix e = build_mtransform(p);
  const auto deg = p.degrees();
  const int half = n * (n - 1) / 4;
  IntMatrix lower = e;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (deg[i] > half)
      for (std::size_t j = 0; j < p.size(); ++j) lower(i, j) = 0;
  const IntMatrix solved = solve_upper_half(p, lower);
  Output out = matrix_output(solved, member_labels(p));
  out.passed = solved == e;
  out.json["matches_direct"] = out.passed;
  out.json["given_up_to_degree"] = half;
  if (req.value("half_degree", false)) {
    const HalfDegreeReport r = half_degree_system_check(n);
    Json steps = Json::array();
    for (const auto& s : r.steps)
      steps.push_back({{"from_degree", s.from_degree}, {"rows", s.rows}, {"cols", s.cols}, {"rank", s.rank},
                       {"recovered", s.recovered}});
    out.json["half_degree"] = {{"ok", r.ok}, {"steps", steps}};
    if (!r.ok) out.json["half_degree"]["failure"] = r.failure;
    out.passed = out.passed && r.ok;
  }
  return out;
}

Output cmd_rank_minor(const Json& req) {
  const AnyPoset p = any_poset(req);
  const int top = p.degrees.empty() ? 0 : p.degrees.back();
  const int low = int_arg(req, "low", 0), high = int_arg(req, "high", top);
  const IntMatrix m = degree_minor(p.e, p.degrees, low, high);
  const std::size_t rank = exact_rank(m);
  const bool full = rank == std::min(m.rows(), m.cols());
  Output out{{{"low", low}, {"high", high}, {"rows", m.rows()}, {"cols", m.cols()}, {"rank", rank}, {"full_rank", full}},
             "rows,cols,rank\n" + std::to_string(m.rows()) + "," + std::to_string(m.cols()) + "," + std::to_string(rank) + "\n",
             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " rank " + std::to_string(rank) + "\n"};
  out.passed = full;
  return out;
}

Output cmd_ulam_table(const Json& req) {
  const UlamTable t = ulam_difference_table(int_arg(req, "max_n", 12), int_arg(req, "max_d", 12));
  Json cells = Json::array();
  for (const auto& [key, v] : t.cells) cells.push_back({{"n", key.first}, {"d", key.second}, {"value", number_json(v)}});
  return {{{"max_n", t.max_n}, {"max_d", t.max_d}, {"cells", cells}}, ulam_table_csv(t), ulam_table_text(t)};
}

Output cmd_ulam_check(const Json& req) {
  std::optional<int> v;
  if (has(req, "v")) v = int_arg(req, "v");
  const UlamCheck r = ulam_condition_check(int_arg(req, "n"), int_arg(req, "d"), v);
  Output out;
  out.json = {{"n", r.n},
              {"d", r.d},
              {"lhs", number_json(r.lhs)},
              {"rhs", number_json(r.rhs)},
              {"inequality", r.inequality},
              {"in_range", r.in_range}};
  if (r.minor)
    out.json["minor"] = {{"v", r.minor->v}, {"rows", r.minor->rows}, {"cols", r.minor->cols}, {"rank", r.minor->rank}};
  out.table = "h_{n+1}(d)-h_{n+1}(d-1) = " + r.lhs.get_str() + ", h_n(d) = " + r.rhs.get_str() +
              (r.inequality ? ", holds\n" : ", fails\n");
  return out;
}

Output cmd_multiset_eval(const Json& req) {
  const Exponents m = exponents_arg(req, "m"), w = exponents_arg(req, "w");
  require(m.size() == w.size(), ErrorCode::InvalidArgument, "m and w need the same number of variables");
  const PermGroup g = parse_group(string_arg(req, "group", std::string("trivial")), static_cast<int>(m.size()));
  const BigInt inv = multiset_invariant(m, w, g);
  const BigInt orb = orbit_sum_value(m, w, g);
  return {{{"m", exponents_json(m)}, {"w", exponents_json(w)}, {"invariant", number_json(inv)}, {"orbit_sum", number_json(orb)}},
          "invariant,orbit_sum\n" + inv.get_str() + "," + orb.get_str() + "\n",
          "I = " + inv.get_str() + "\norbit sum = " + orb.get_str() + "\n"};
}

Output cmd_verify_relation(const Json& req) {
  const GPoset p = full_poset(req);
  InvariantBindings bindings;
  if (has(req, "bindings")) {
    const Json& b = req["bindings"];
    if (b.is_object()) {
      for (const auto& [name, g] : b.items()) bindings[name] = canonicalize(parse_graph(g.get<std::string>()));
    } else {
      std::stringstream in(b.get<std::string>());
      for (std::string part; std::getline(in, part, ';');) {
        const auto eq = part.find('=');
        require(eq != std::string::npos, ErrorCode::Parse, "binding '" + part + "' lacks '='");
        bindings[part.substr(0, eq)] = canonicalize(parse_graph(part.substr(eq + 1)));
      }
    }
  }
  const RelationReport r = verify_relation(string_arg(req, "relation"), bindings, p);
  Output out;
  out.json = {{"holds", r.holds}};
  if (r.first_failure) {
    out.json["first_failure"] = p[*r.first_failure].graph6();
    out.json["residual"] = number_json(r.residual);
  }
  out.table = r.holds ? "holds\n" : "fails at " + p[*r.first_failure].graph6() + "\n";
  return out;
}

Output cmd_selftest(const Json& req) {
  std::optional<int> only;
  if (has(req, "criterion")) only = int_arg(req, "criterion");
  require(!only || (*only >= 1 && *only <= kCriterionCount), ErrorCode::InvalidArgument, "no such criterion");
  Output out;
  Json rows = Json::array();
  int passed = 0;
  for (const auto& r : run_selftest(cache_dir(req), only)) {
    rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds},
                    {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.seconds << "s of " << r.limit_seconds
         << "s) " << r.title;
    if (!r.detail.empty()) line << " -- " << r.detail;
    out.table += line.str() + "\n";
    passed += r.passed;
    out.passed = out.passed && r.passed;
  }
  out.json = {{"passed", passed}, {"total", rows.size()}, {"criteria", rows}};
  return out;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"enumerate", cmd_enumerate},
      {"mtransform", cmd_mtransform},
      {"invert", cmd_invert},
      {"count", cmd_count},
      {"product", cmd_product},
      {"general-product", cmd_general_product},
      {"express", cmd_express},
      {"separators", cmd_separators},
      {"reconstruct", cmd_reconstruct},
      {"inseparable", cmd_inseparable},
      {"complement-solve", cmd_complement_solve},
      {"rank-minor", cmd_rank_minor},
      {"ulam-table", cmd_ulam_table},
      {"ulam-check", cmd_ulam_check},
      {"multiset-eval", cmd_multiset_eval},
      {"verify-relation", cmd_verify_relation},
      {"selftest", cmd_selftest},
  };
  return table;
}

}  // namespace

CommandResult run_command(const std::string& name, const Json& request, const std::string& format) {
  const auto it = handlers().find(name);
  require(it != handlers().end(), ErrorCode::InvalidArgument, "unknown command '" + name + "'");
  require(request.is_object() || request.is_null(), ErrorCode::InvalidArgument, "request must be a JSON object");
  require(format == "json" || format == "csv" || format == "table", ErrorCode::InvalidArgument,
          "format must be json, csv or table");
  Output out = it->second(request.is_null() ? Json::object() : request);
  CommandResult result;
  result.passed = out.passed;
  if (format == "json") {
    result.text = out.json.dump(2) + "\n";
  } else {
    result.text = format == "csv" ? out.csv : out.table;
    require(!result.text.empty(), ErrorCode::InvalidArgument, "format " + format + " is not available for " + name);
  }
  return result;
}

}  // namespace gia
