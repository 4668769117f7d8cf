#include "enumeration.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "error.hpp"
#include "generators.hpp"
#include "matrix.hpp"
#include "poset.hpp"

namespace gia {

Rational CyclePolynomial::substitute_all(const Rational& value) const {
  Rational total = 0;
  for (const auto& [e, c] : terms) {
    Rational term = c;
    for (int x : e)
      for (int i = 0; i < x; ++i) term *= value;
    total += term;
  }
  return total;
}

namespace {

using Poly = std::vector<BigInt>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// (1 + x^k)^e
Poly binomial_power(int k, int e) {
  Poly out(static_cast<std::size_t>(k * e) + 1);
  for (int i = 0; i <= e; ++i) out[static_cast<std::size_t>(i * k)] = binomial(e, i);
  return out;
}

void partitions(int n, int max_part, std::vector<int>& counts, const std::function<void()>& visit) {
  if (n == 0) {
    visit();
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    ++counts[static_cast<std::size_t>(k - 1)];
    partitions(n - k, k, counts, visit);
    --counts[static_cast<std::size_t>(k - 1)];
  }
}

}  // namespace

std::vector<BigInt> CyclePolynomial::edge_series() const {
  Poly total{0};
  BigInt denominator = 1;
  for (const auto& [e, c] : terms) denominator = lcm(denominator, BigInt(c.get_den()));
  for (const auto& [e, c] : terms) {
    Poly p{1};
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) p = multiply(p, binomial_power(static_cast<int>(k) + 1, e[k]));
    const BigInt weight = c.get_num() * (denominator / c.get_den());
    if (p.size() > total.size()) total.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) total[i] += weight * p[i];
  }
  for (auto& x : total) {
    require(mpz_divisible_p(x.get_mpz_t(), denominator.get_mpz_t()) != 0, ErrorCode::Internal,
            "cycle index series is not integral");
    x /= denominator;
  }
  return total;
}

std::string CyclePolynomial::to_string() const {
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += " + ";
    out += gia::to_string(c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) out += "*s" + std::to_string(k + 1) + (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
  }
  return out;
}

CyclePolynomial pair_group_cycle_index(int n) {
  require(n >= 0 && n <= 16, ErrorCode::CapExceeded, "pair cycle index supports n <= 16");
  CyclePolynomial out;
  const int slots = std::max(1, n * (n - 1) / 2);
  std::vector<int> counts(static_cast<std::size_t>(std::max(n, 1)), 0);
  partitions(n, n, counts, [&] {
    BigInt denom = 1;
    for (int k = 1; k <= n; ++k) {
      const int c = counts[static_cast<std::size_t>(k - 1)];
      for (int i = 0; i < c; ++i) denom *= k;
      for (int i = 2; i <= c; ++i) denom *= i;
    }
    std::vector<int> pair_cycles(static_cast<std::size_t>(slots), 0);
    auto add = [&](int len, long times) {
      if (times) pair_cycles[static_cast<std::size_t>(len - 1)] += static_cast<int>(times);
    };
    for (int k = 1; k <= n; ++k) {
      const long c = counts[static_cast<std::size_t>(k - 1)];
      if (!c) continue;
      if (k % 2) {
        add(k, c * (k - 1) / 2);
      } else {
        add(k, c * (k - 2) / 2);
        add(k / 2, c);
      }
      add(k, k * c * (c - 1) / 2);
      for (int l = k + 1; l <= n; ++l) {
        const long cl = counts[static_cast<std::size_t>(l - 1)];
        if (cl) add(std::lcm(k, l), c * cl * std::gcd(k, l));
      }
    }
    while (pair_cycles.size() > 1 && pair_cycles.back() == 0) pair_cycles.pop_back();
    Rational coeff(BigInt(1), denom);
    coeff.canonicalize();
    out.terms[pair_cycles] += coeff;
  });
  return out;
}

std::vector<BigInt> graph_counts(int n) {
  auto series = pair_group_cycle_index(n).edge_series();
  series.resize(static_cast<std::size_t>(n * (n - 1) / 2) + 1);
  return series;
}

BigInt graph_count(int n, int d) {
  if (d < 0 || d > n * (n - 1) / 2) return 0;
  return graph_counts(n)[static_cast<std::size_t>(d)];
}

UlamTable ulam_difference_table(int max_n, int max_d) {
  require(max_n >= 4 && max_n <= 16 && max_d >= 2, ErrorCode::InvalidArgument, "table range out of bounds");
  UlamTable t;
  t.max_n = max_n;
  t.max_d = max_d;
  std::vector<std::vector<BigInt>> h(static_cast<std::size_t>(max_n) + 1);
  for (int n = t.min_n - 1; n <= max_n; ++n) h[static_cast<std::size_t>(n)] = graph_counts(n);
  auto at = [&](int n, int d) -> BigInt {
    const auto& row = h[static_cast<std::size_t>(n)];
    return d >= 0 && static_cast<std::size_t>(d) < row.size() ? row[static_cast<std::size_t>(d)] : BigInt(0);
  };
  for (int n = t.min_n; n <= max_n; ++n)
    for (int d = t.min_d; d <= max_d && d <= n * (n - 1) / 4; ++d)
      t.cells[{n, d}] = -at(n, d) + at(n - 1, d) + at(n, d - 1);
  return t;
}

std::string ulam_table_csv(const UlamTable& t) {
  std::ostringstream out;
  out << "d\\n";
  for (int n = t.min_n; n <= t.max_n; ++n) out << "," << n;
  out << "\n";
  for (int d = t.min_d; d <= t.max_d; ++d) {
    out << d;
    for (int n = t.min_n; n <= t.max_n; ++n) {
      out << ",";
      if (auto it = t.cells.find({n, d}); it != t.cells.end()) out << it->second.get_str();
    }
    out << "\n";
  }
  return out.str();
}

std::string ulam_table_text(const UlamTable& t) {
  std::ostringstream out;
  auto cell = [&](const std::string& s) { out << std::string(s.size() < 7 ? 7 - s.size() : 1, ' ') << s; };
  cell("d\\n");
  for (int n = t.min_n; n <= t.max_n; ++n) cell(std::to_string(n));
  out << "\n";
  for (int d = t.min_d; d <= t.max_d; ++d) {
    cell(std::to_string(d));
    for (int n = t.min_n; n <= t.max_n; ++n) {
      auto it = t.cells.find({n, d});
      cell(it == t.cells.end() ? "" : it->second.get_str());
    }
    out << "\n";
  }
  return out.str();
}

UlamCheck ulam_condition_check(int n, int d, std::optional<int> v) {
  require(n >= 1 && n <= 11, ErrorCode::CapExceeded, "Ulam counting check supports n <= 11");
  require(d >= 1, ErrorCode::InvalidArgument, "degree must be positive");
  UlamCheck out;
  out.n = n;
  out.d = d;
  out.lhs = graph_count(n + 1, d) - graph_count(n + 1, d - 1);
  out.rhs = graph_count(n, d);
  out.inequality = out.lhs <= out.rhs;
  out.in_range = d <= (n + 1) * n / 4;
  if (v) {
    require(*v >= 2 && *v <= 5, ErrorCode::CapExceeded, "minor rank check supports v <= 5");
    const GPoset p = build_full_poset(*v, d);
    std::vector<IsoClass> rows;
    std::vector<IsoClass> cols;
    for (const auto& g : p.members()) {
      if (g.degree() == d && g.cv() == *v) rows.push_back(g);
      if (g.degree() == d - 1) cols.push_back(g);
    }
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = from_uint64(count_subgraphs(cols[j], rows[i].canon()));
    out.minor = UlamCheck::MinorRank{*v, rows.size(), cols.size(), exact_rank(m)};
  }
  return out;
}

ConnectedCounts connected_counts(int max_d) {
  require(max_d >= 0 && max_d <= 8, ErrorCode::CapExceeded, "connected counts support degree <= 8");
  ConnectedCounts out;
  out.f.assign(static_cast<std::size_t>(max_d) + 1, 0);
  for (const auto& g : connected_classes(max_d)) ++out.f[static_cast<std::size_t>(g.degree())];
  BigInt running = 0;
  for (const auto& x : out.f) {
    running += x;
    out.cumulative.push_back(running);
  }
  return out;
}

}  // namespace gia
