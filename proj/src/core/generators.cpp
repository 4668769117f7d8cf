#include "generators.hpp"

#include <algorithm>
#include <map>

#include "algebra.hpp"
#include "error.hpp"
#include "mtransform.hpp"
#include "parallel.hpp"

namespace gia {

SeparatorReport is_separator(std::span<const IsoClass> invariants, const GPoset& p) {
  std::vector<std::vector<std::uint64_t>> vectors(p.size());
  parallel_for(p.size(), [&](std::size_t h) {
    for (const auto& g : invariants) vectors[h].push_back(count_subgraphs(g, p[h].canon()));
  });
  SeparatorReport report;
  std::map<std::vector<std::uint64_t>, std::size_t> seen;
  for (std::size_t h = 0; h < p.size(); ++h) {
    auto [it, fresh] = seen.emplace(vectors[h], h);
    if (fresh) continue;
    report.is_separator = false;
    report.witness = {it->second, h};
    report.witness_values = vectors[h];
    break;
  }
  return report;
}

MinimalSeparators minimal_separators(const GPoset& p, std::vector<IsoClass> pool) {
  if (pool.empty()) pool = connected_members(p);
  require(pool.size() <= kSeparatorPoolCap, ErrorCode::CapExceeded,
          "separator pool has " + std::to_string(pool.size()) + " candidates, limit is " +
              std::to_string(kSeparatorPoolCap));
  std::vector<std::vector<std::uint64_t>> value(pool.size(), std::vector<std::uint64_t>(p.size()));
  parallel_for(pool.size(), [&](std::size_t k) {
    for (std::size_t h = 0; h < p.size(); ++h) value[k][h] = count_subgraphs(pool[k], p[h].canon());
  });
  MinimalSeparators out;
  for (std::size_t size = 0; size <= pool.size(); ++size) {
    std::vector<std::vector<std::size_t>> combos;
    std::vector<std::size_t> pick;
    auto gen = [&](auto& self, std::size_t start) -> void {
      if (pick.size() == size) {
        combos.push_back(pick);
        return;
      }
      for (std::size_t k = start; k + (size - pick.size()) <= pool.size(); ++k) {
        pick.push_back(k);
        self(self, k + 1);
        pick.pop_back();
      }
    };
    gen(gen, 0);
    std::vector<char> separates(combos.size(), 0);
    parallel_for(combos.size(), [&](std::size_t c) {
      std::map<std::vector<std::uint64_t>, int> seen;
      for (std::size_t h = 0; h < p.size(); ++h) {
        std::vector<std::uint64_t> key;
        for (std::size_t k : combos[c]) key.push_back(value[k][h]);
        if (!seen.emplace(std::move(key), 0).second) return;
      }
      separates[c] = 1;
    });
    out.subsets_tested += combos.size();
    for (std::size_t c = 0; c < combos.size(); ++c) {
      if (!separates[c]) continue;
      std::vector<IsoClass> set;
      for (std::size_t k : combos[c]) set.push_back(pool[k]);
      out.sets.push_back(std::move(set));
    }
    if (!out.sets.empty()) {
      out.size = size;
      return out;
    }
  }
  fail(ErrorCode::Precondition, "no subset of the pool separates the poset");
}

std::vector<long> reconstruct_components(const LabeledGraph& host, std::span<const IsoClass> connected_list) {
  for (std::size_t k = 0; k < connected_list.size(); ++k) {
    require(is_connected(connected_list[k].canon()), ErrorCode::InvalidArgument,
            "list member " + connected_list[k].graph6() + " is not connected");
    if (k) require(connected_list[k - 1].degree() <= connected_list[k].degree(), ErrorCode::InvalidArgument,
                   "connected list must be sorted by degree");
  }
  const std::size_t r = connected_list.size();
  std::vector<long> mult(r, 0);
  for (std::size_t m = r; m-- > 0;) {
    long value = static_cast<long>(count_subgraphs(connected_list[m], host));
    for (std::size_t k = m + 1; k < r; ++k)
      if (mult[k]) value -= mult[k] * static_cast<long>(count_subgraphs(connected_list[m], connected_list[k].canon()));
    require(value >= 0, ErrorCode::Precondition,
            "negative multiplicity for " + connected_list[m].graph6() + ": the connected list is incomplete");
    mult[m] = value;
  }
  return mult;
}

std::vector<IsoClass> connected_classes(int max_degree) {
  require(max_degree >= 0 && max_degree <= 10, ErrorCode::CapExceeded, "connected class degree out of range");
  if (max_degree == 0) return {};
  return connected_members(build_full_poset(max_degree + 1, max_degree));
}

BigInt s_sum(int d) {
  BigInt total = 0;
  for (int k = 1; k <= d; ++k) {
    const BigInt term = binomial(d, k - 1) * power(2, static_cast<unsigned long>(k - 1));
    total += k % 2 ? -term : term;
  }
  return total;
}

BigInt s_recursive(int d) {
  require(d >= 1, ErrorCode::InvalidArgument, "S(d) needs d >= 1");
  BigInt s = -1;
  for (int k = 1; k < d; ++k) {
    const BigInt step = power(2, static_cast<unsigned long>(k));
    s = -s + ((k + 1) % 2 ? -step : step);
  }
  return s;
}

BigInt s_closed(int d) {
  const BigInt v = power(2, static_cast<unsigned long>(d)) - 1;
  return d % 2 ? BigInt(-v) : v;
}

namespace {

std::uint64_t count_in_parts(const IsoClass& connected, const ComponentMultiset& parts) {
  std::uint64_t total = 0;
  for (const auto& [part, mult] : parts) total += static_cast<std::uint64_t>(mult) * count_subgraphs(connected, part.canon());
  return total;
}

void add_components(ComponentMultiset& into, const IsoClass& g, long times) {
  if (times == 0) return;
  for (const auto& [part, mult] : connected_components(g.canon())) into[part] += static_cast<int>(mult * times);
}

}  // namespace

InseparablePair inseparable_pair(int d, std::optional<IsoClass> next_generator) {
  require(d >= 1 && d <= 3, ErrorCode::CapExceeded, "inseparable pairs are supported for 1 <= d <= 3");
  InseparablePair out;
  out.d = d;
  out.checked_invariants = connected_classes(d);
  out.span = build_span_poset(out.checked_invariants, d);
  if (next_generator) {
    require(is_connected(next_generator->canon()), ErrorCode::InvalidArgument, "next generator must be connected");
    require(!out.span.contains(*next_generator), ErrorCode::InvalidArgument, "next generator lies in the span");
    out.next_generator = *next_generator;
  } else {
    std::vector<IsoClass> candidates;
    for (const auto& g : connected_classes(d + 1))
      if (g.degree() == d + 1) candidates.push_back(g);
    out.next_generator = *std::min_element(candidates.begin(), candidates.end());
  }
  const IntMatrix e = build_mtransform(out.span);
  std::vector<Rational> v;
  for (const auto& g : out.span.members())
    v.emplace_back(from_uint64(count_subgraphs(g, out.next_generator.canon())));
  const auto c = solve_left_unitriangular(e, v);
  ComponentMultiset t;
  ComponentMultiset u;
  add_components(u, out.next_generator, 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    require(c[k].get_den() == 1, ErrorCode::Internal, "coefficient vector is not integral");
    out.coefficients.push_back(c[k].get_num());
    const long ck = c[k].get_num().get_si();
    if (ck > 0) add_components(t, out.span[k], ck);
    if (ck < 0) add_components(u, out.span[k], -ck);
  }
  out.t_parts = t;
  out.u_parts = u;
  for (const auto& g : out.checked_invariants)
    require(count_in_parts(g, t) == count_in_parts(g, u), ErrorCode::Internal,
            "T and U differ on " + g.graph6());
  require(t != u, ErrorCode::Internal, "T and U are isomorphic");
  out.degree = total_degree(t);
  require(out.degree == total_degree(u), ErrorCode::Internal, "T and U have different degrees");
  out.degree_bound = BigInt(out.next_generator.degree()) * (power(2, static_cast<unsigned long>(d)) - 1);
  require(out.degree <= out.degree_bound, ErrorCode::Internal, "degree bound violated");
  if (total_support(t) <= kMaxVertices && total_support(u) <= kMaxVertices) {
    out.t_graph = disjoint_union_graph(t);
    out.u_graph = disjoint_union_graph(u);
    for (const auto& g : out.checked_invariants)
      require(count_subgraphs(g, *out.t_graph) == count_subgraphs(g, *out.u_graph), ErrorCode::Internal,
              "assembled T and U differ on " + g.graph6());
    require(!(canonicalize(*out.t_graph) == canonicalize(*out.u_graph)), ErrorCode::Internal,
            "assembled T and U are isomorphic");
  }
  return out;
}

HalfDegreeReport half_degree_system_check(int n) {
  require(n >= 1 && n <= 5, ErrorCode::CapExceeded, "half-degree check supports n <= 5");
  HalfDegreeReport report;
  report.n = n;
  const int full = n * (n - 1) / 2;
  report.half = full / 2;
  const GPoset p = build_full_poset(n);
  const IntMatrix e = build_mtransform(p);
  const auto deg = p.degrees();
  // known[h][k]: value of I(g_k) at member h, filled for degrees <= start and then recovered
  const int start = std::max(report.half, 1);
  std::vector<std::vector<Rational>> known(p.size(), std::vector<Rational>(p.size()));
  for (std::size_t h = 0; h < p.size(); ++h)
    for (std::size_t k = 0; k < p.size(); ++k)
      if (deg[k] <= start) known[h][k] = Rational(e(h, k));
  for (int d = start; d < full; ++d) {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (deg[k] == d) rows.push_back(k);
      if (deg[k] == d + 1) cols.push_back(k);
    }
    HalfDegreeStep step;
    step.from_degree = d;
    step.rows = rows.size();
    step.cols = cols.size();
    IntMatrix m(rows.size(), cols.size());
    std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        m(r, c) = e(cols[c], rows[r]);
        a[r][c] = Rational(m(r, c));
      }
    step.rank = exact_rank(m);
    step.recovered = step.rank == cols.size();
    if (step.recovered) {
      for (std::size_t h = 0; h < p.size() && step.recovered; ++h) {
        std::vector<Rational> b;
        for (std::size_t r : rows) b.push_back(Rational(deg[h] - d) * known[h][r]);
        const auto x = solve_full_column_rank(a, b);
        if (!x) {
          step.recovered = false;
          break;
        }
        for (std::size_t c = 0; c < cols.size(); ++c) {
          known[h][cols[c]] = (*x)[c];
          if ((*x)[c] != Rational(e(h, cols[c]))) step.recovered = false;
        }
      }
    }
    report.steps.push_back(step);
    if (!step.recovered && report.ok) {
      report.ok = false;
      report.failure = "degree " + std::to_string(d + 1) + " not recovered from degree " + std::to_string(d);
    }
  }
  return report;
}

DerivedRelation derive_relation(const IsoClass& target, const std::vector<std::pair<std::string, IsoClass>>& basis,
                                const GPoset& p, int max_total_degree) {
  const std::size_t hosts = p.size();
  const std::size_t vars = basis.size();
  std::vector<std::vector<BigInt>> value(hosts, std::vector<BigInt>(vars));
  std::vector<Rational> target_values(hosts);
  for (std::size_t h = 0; h < hosts; ++h) {
    for (std::size_t t = 0; t < vars; ++t) value[h][t] = from_uint64(count_subgraphs(basis[t].second, p[h].canon()));
    target_values[h] = Rational(from_uint64(count_subgraphs(target, p[h].canon())));
  }
  std::vector<std::vector<int>> monomials;
  std::vector<int> expo(vars, 0);
  for (int total = 0; total <= max_total_degree; ++total) {
    auto gen = [&](auto& self, std::size_t t, int left) -> void {
      if (t + 1 == vars) {
        expo[t] = left;
        monomials.push_back(expo);
        return;
      }
      for (int k = left; k >= 0; --k) {
        expo[t] = k;
        self(self, t + 1, left - k);
      }
    };
    if (vars == 0) break;
    gen(gen, 0, total);
  }
  auto column = [&](const std::vector<int>& mono) {
    std::vector<BigInt> col(hosts);
    for (std::size_t h = 0; h < hosts; ++h) {
      BigInt v = 1;
      for (std::size_t t = 0; t < vars; ++t) v *= power(value[h][t], static_cast<unsigned long>(mono[t]));
      col[h] = v;
    }
    return col;
  };
  std::vector<std::vector<int>> chosen;
  std::vector<std::vector<BigInt>> columns;
  for (const auto& mono : monomials) {
    if (columns.size() == hosts) break;
    auto col = column(mono);
    IntMatrix m(hosts, columns.size() + 1);
    for (std::size_t h = 0; h < hosts; ++h) {
      for (std::size_t c = 0; c < columns.size(); ++c) m(h, c) = columns[c][h];
      m(h, columns.size()) = col[h];
    }
    if (exact_rank(m) == columns.size() + 1) {
      chosen.push_back(mono);
      columns.push_back(std::move(col));
    }
  }
  std::vector<std::vector<Rational>> a(hosts, std::vector<Rational>(columns.size()));
  for (std::size_t h = 0; h < hosts; ++h)
    for (std::size_t c = 0; c < columns.size(); ++c) a[h][c] = Rational(columns[c][h]);
  DerivedRelation out;
  out.target = target;
  const auto x = solve_full_column_rank(a, target_values);
  if (!x) return out;
  std::string poly;
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    if ((*x)[c] == 0) continue;
    Rational coeff = (*x)[c];
    poly += coeff < 0 ? " - " : (poly.empty() ? "" : " + ");
    if (coeff < 0) coeff = -coeff;
    poly += to_string(coeff);
    for (std::size_t t = 0; t < vars; ++t) {
      if (chosen[c][t] == 0) continue;
      poly += "*" + basis[t].first;
      if (chosen[c][t] > 1) poly += "^" + std::to_string(chosen[c][t]);
    }
  }
  if (poly.empty()) poly = "0";
  out.text = "[" + target.graph6() + "] = " + poly;
  InvariantBindings bindings(basis.begin(), basis.end());
  out.holds = verify_relation(out.text, bindings, p).holds;
  return out;
}

}  // namespace gia
