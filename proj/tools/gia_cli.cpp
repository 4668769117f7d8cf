#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "gia/gia.h"

namespace {

struct Flag {
  const char* name;
  const char* key;
  const char* help;
};

struct Command {
  const char* name;
  const char* help;
  std::vector<Flag> options;
  std::vector<Flag> switches;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> list = {
      {"enumerate", "list the isomorphism classes of E(n)", {{"--n", "n", "vertices"}, {"--d", "d", "edge cap"}}, {}},
      {"mtransform", "M-transform of E(n) or of a multiset poset",
       {{"--n", "n", "vertices"}, {"--d", "d", "degree cap"}, {"--group", "group", "trivial, S<k>, pairs<n> or generators"},
        {"--vars", "vars", "number of variables"}, {"--cap", "cap", "exponent cap"}, {"--power", "power", "entries k^(deg gap) e_ij"}},
       {}},
      {"invert", "inverse M-transform",
       {{"--n", "n", "vertices"}, {"--d", "d", "degree cap"}, {"--group", "group", "permutation group"},
        {"--vars", "vars", "number of variables"}, {"--cap", "cap", "exponent cap"}},
       {}},
      {"count", "number of subgraphs of host isomorphic to pattern",
       {{"--pattern", "pattern", "graph6 or edge list"}, {"--host", "host", "graph6 or edge list"}}, {}},
      {"product", "product of two invariants",
       {{"--n", "n", "vertices"}, {"--a", "a", "first graph"}, {"--b", "b", "second graph"},
        {"--method", "method", "kocay, fleischmann, mtransform or all"}},
       {{"--group-check", "group_check", "cross-check coloring coefficients with stabilizers"}}},
      {"general-product", "product of invariants over unbounded n", {{"--a", "a", "first graph"}, {"--b", "b", "second graph"}}, {}},
      {"express", "write a function as a combination of invariants",
       {{"--n", "n", "vertices"}, {"--values", "values", "comma separated values on E(n) members"},
        {"--complement-of", "complement_of", "graph whose complement count is expanded"},
        {"--monomial", "monomial", "orbit sum exponents"}, {"--group", "group", "permutation group"},
        {"--vars", "vars", "number of variables"}, {"--cap", "cap", "exponent cap"}},
       {}},
      {"separators", "separator check or minimum separator search",
       {{"--n", "n", "vertices"}, {"--invariants", "invariants", "graphs separated by ';'"}}, {}},
      {"reconstruct", "connected components of a host from invariant values",
       {{"--host", "host", "graph6 or edge list"}, {"--d", "d", "largest component size in edges"}}, {}},
      {"inseparable", "pair of graphs agreeing on small connected invariants",
       {{"--d", "d", "edge bound"}, {"--next", "next", "next connected generator"}}, {}},
      {"complement-solve", "rebuild the upper half of the M-transform from the lower half", {{"--n", "n", "vertices"}},
       {{"--half-degree", "half_degree", "also run the degree-ladder solve"}}},
      {"rank-minor", "rank of a degree minor of the M-transform",
       {{"--n", "n", "vertices"}, {"--low", "low", "row degree"}, {"--high", "high", "column degree"},
        {"--group", "group", "permutation group"}, {"--vars", "vars", "number of variables"}, {"--cap", "cap", "exponent cap"}},
       {}},
      {"ulam-table", "table of Ulam differences", {{"--max-n", "max_n", "largest n"}, {"--max-d", "max_d", "largest d"}}, {}},
      {"ulam-check", "Ulam inequality at (n, d)",
       {{"--n", "n", "vertices"}, {"--d", "d", "edges"}, {"--v", "v", "minor size for the rank check"}}, {}},
      {"multiset-eval", "multiset invariant and orbit sum",
       {{"--m", "m", "exponents of the pattern"}, {"--w", "w", "exponents of the argument"},
        {"--group", "group", "permutation group"}},
       {}},
      {"verify-relation", "check a polynomial relation on all members of E(n)",
       {{"--n", "n", "vertices"}, {"--relation", "relation", "e.g. g2 = (g1^2 - g1)/2"},
        {"--bindings", "bindings", "name=graph pairs separated by ';'"}},
       {}},
      {"selftest", "run the acceptance criteria", {{"--criterion", "criterion", "run one criterion"}}, {}},
  };
  return list;
}

nlohmann::json request_value(const std::string& key, const std::string& text) {
  if (key != "values") return text;
  nlohmann::json out = nlohmann::json::array();
  std::string part;
  for (char c : text + ",") {
    if (c == ',') {
      out.push_back(part);
      part.clear();
    } else if (c != ' ') {
      part += c;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph invariant algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  int jobs = 1;
  std::string cache_dir;
  app.add_option("--format", format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--jobs", jobs, "worker threads; 0 uses every core");
  app.add_option("--cache-dir", cache_dir, "directory for cached posets");

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    subs[c.name] = sub;
    for (const auto& o : c.options) sub->add_option(o.name, values[c.name][o.key], o.help);
    for (const auto& s : c.switches) sub->add_flag(s.name, flags[c.name][s.key], s.help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string name;
  for (const auto& [n, sub] : subs)
    if (sub->parsed()) name = n;
  nlohmann::json request = nlohmann::json::object();
  for (const auto& c : commands()) {
    if (name != c.name) continue;
    for (const auto& o : c.options)
      if (subs[name]->count(o.name)) request[o.key] = request_value(o.key, values[name][o.key]);
    for (const auto& s : c.switches)
      if (flags[name][s.key]) request[s.key] = true;
  }
  if (!cache_dir.empty()) request["cache_dir"] = cache_dir;

  if (gia_set_parallelism(jobs) != GIA_OK) {
    std::cerr << "error: " << gia_last_error() << "\n";
    return 2;
  }
  char* out = nullptr;
  const gia_status status = gia_run(name.c_str(), request.dump().c_str(), format.c_str(), &out);
  if (out) {
    std::fputs(out, stdout);
    gia_string_free(out);
  }
  if (status == GIA_OK) return 0;
  std::cerr << "error: " << gia_last_error() << "\n";
  return status == GIA_ERR_CHECK_FAILED ? 1 : 2;
}
