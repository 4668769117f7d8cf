#include "multiset.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "error.hpp"
#include "graph.hpp"

namespace gia {

Exponents act(const Permutation& rho, const Exponents& m) {
  require(static_cast<std::size_t>(rho.size()) == m.size(), ErrorCode::InvalidArgument,
          "permutation degree does not match the exponent vector");
  Exponents out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[static_cast<std::size_t>(rho(static_cast<int>(i)))];
  return out;
}

std::vector<Exponents> orbit(const Exponents& m, const PermGroup& g) {
  std::set<Exponents> seen;
  for (const auto& rho : g) seen.insert(act(rho, m));
  return {seen.begin(), seen.end()};
}

Exponents orbit_representative(const Exponents& m, const PermGroup& g) { return orbit(m, g).back(); }

namespace {

void check_dims(const Exponents& a, const Exponents& b, const PermGroup& g) {
  require(a.size() == b.size() && static_cast<int>(a.size()) == g.degree(), ErrorCode::InvalidArgument,
          "exponent vectors and group degree must match");
  for (int x : a) require(x >= 0, ErrorCode::InvalidArgument, "negative exponent");
  for (int x : b) require(x >= 0, ErrorCode::InvalidArgument, "negative exponent");
}

}  // namespace

BigInt multiset_invariant(const Exponents& m, const Exponents& w, const PermGroup& g) {
  check_dims(m, w, g);
  BigInt total = 0;
  for (const auto& img : orbit(m, g)) {
    BigInt term = 1;
    for (std::size_t i = 0; i < img.size() && term != 0; ++i) term *= binomial(w[i], img[i]);
    total += term;
  }
  return total;
}

BigInt orbit_sum_value(const Exponents& a, const Exponents& b, const PermGroup& g) {
  check_dims(a, b, g);
  BigInt total = 0;
  for (const auto& img : orbit(a, g)) {
    BigInt term = 1;
    for (std::size_t i = 0; i < img.size(); ++i) term *= power(BigInt(b[i]), static_cast<unsigned long>(img[i]));
    total += term;
  }
  return total;
}

std::vector<BigInt> binomial_transform_coeffs(int a, int k_max) {
  require(a >= 0 && k_max >= 0, ErrorCode::InvalidArgument, "binomial transform needs a, k_max >= 0");
  std::vector<BigInt> c(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k)
    for (int j = 0; j <= k; ++j) {
      const BigInt term = binomial(k, j) * power(BigInt(j), static_cast<unsigned long>(a));
      if ((k - j) % 2)
        c[static_cast<std::size_t>(k)] -= term;
      else
        c[static_cast<std::size_t>(k)] += term;
    }
  return c;
}

MultisetPoset::MultisetPoset(PermGroup group, int cap, int max_degree, std::size_t member_cap)
    : group_(std::move(group)), cap_(cap) {
  require(cap >= 0, ErrorCode::InvalidArgument, "exponent cap must be nonnegative");
  const int n = group_.degree();
  std::set<Exponents> reps;
  Exponents e(static_cast<std::size_t>(n), 0);
  double grid = 1;
  for (int i = 0; i < n; ++i) grid *= cap + 1;
  require(grid <= 2e6, ErrorCode::CapExceeded, "exponent grid too large");
  for (;;) {
    int deg = 0;
    for (int x : e) deg += x;
    if (max_degree < 0 || deg <= max_degree) {
      reps.insert(orbit_representative(e, group_));
      require(reps.size() <= member_cap, ErrorCode::CapExceeded, "multiset poset exceeds its member cap");
    }
    int i = n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == cap) e[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }
  members_.assign(reps.begin(), reps.end());
  auto degree = [](const Exponents& x) {
    int s = 0;
    for (int v : x) s += v;
    return s;
  };
  std::sort(members_.begin(), members_.end(), [&](const Exponents& x, const Exponents& y) {
    const int dx = degree(x);
    const int dy = degree(y);
    if (dx != dy) return dx < dy;
    return x > y;
  });
}

std::vector<int> MultisetPoset::degrees() const {
  std::vector<int> out;
  for (const auto& m : members_) {
    int s = 0;
    for (int v : m) s += v;
    out.push_back(s);
  }
  return out;
}

std::size_t MultisetPoset::index_of(const Exponents& m) const {
  const Exponents rep = orbit_representative(m, group_);
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] == rep) return i;
  fail(ErrorCode::InvalidArgument, "monomial is not in the poset");
}

IntMatrix build_general_mtransform(const MultisetPoset& p) {
  IntMatrix e(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) e(i, j) = multiset_invariant(p[j], p[i], p.group());
  require(e.is_lower_unitriangular(), ErrorCode::Internal, "general M-transform is not lower unitriangular");
  return e;
}

std::vector<Rational> express_orbit_sum(const Exponents& a, const MultisetPoset& p, const IntMatrix& e) {
  for (int x : a) require(x <= p.cap(), ErrorCode::Precondition, "poset cap is below the exponents of a");
  std::vector<Rational> v;
  for (const auto& m : p.members()) v.emplace_back(orbit_sum_value(a, m, p.group()));
  return solve_lower_unitriangular(e, v);
}

BigInt literal_orbit_sum_value(const Exponents& a, const Exponents& w, const PermGroup& g, int cap) {
  check_dims(a, w, g);
  const std::size_t n = a.size();
  std::vector<std::vector<BigInt>> coeff(n);
  for (std::size_t h = 0; h < n; ++h) coeff[h] = binomial_transform_coeffs(a[h], cap);
  BigInt total = 0;
  Exponents k(n, 0);
  for (;;) {
    BigInt c = 1;
    for (std::size_t h = 0; h < n && c != 0; ++h) c *= coeff[h][static_cast<std::size_t>(k[h])];
    if (c != 0) total += c * multiset_invariant(k, w, g);
    std::size_t i = n;
    while (i > 0 && k[i - 1] == cap) k[--i] = 0;
    if (i == 0) break;
    ++k[i - 1];
  }
  return total;
}

PermGroup pair_group(int n) {
  require(n >= 2 && n <= 8, ErrorCode::CapExceeded, "pair group supports 2 <= n <= 8");
  const int slots = n * (n - 1) / 2;
  std::vector<Permutation> elements;
  for (const auto& rho : symmetric_group(n)) {
    std::vector<int> images(static_cast<std::size_t>(slots));
    for (int s = 0; s < slots; ++s) {
      const auto [i, j] = slot_pair(s);
      const auto [a, b] = pair_action(rho, i, j);
      images[static_cast<std::size_t>(s)] = pair_slot(a, b);
    }
    elements.emplace_back(std::move(images));
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return PermGroup(slots, std::move(elements));
}

PermGroup parse_group(std::string_view spec, int degree) {
  const std::string s(spec);
  if (s.empty() || s == "trivial") return trivial_group(degree);
  if (s.rfind("pairs", 0) == 0) {
    const int n = std::stoi(s.substr(5));
    PermGroup g = pair_group(n);
    require(g.degree() == degree, ErrorCode::InvalidArgument,
            "pair group on " + std::to_string(n) + " vertices acts on " + std::to_string(g.degree()) + " points");
    return g;
  }
  if (s[0] == 'S' && s.size() > 1 && std::isdigit(static_cast<unsigned char>(s[1]))) {
    const int k = std::stoi(s.substr(1));
    require(k >= 1 && k <= degree, ErrorCode::InvalidArgument, "symmetric factor larger than the point count");
    std::vector<Permutation> gens;
    if (k >= 2) {
      std::vector<int> cyc(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) cyc[static_cast<std::size_t>(i)] = i;
      gens.push_back(Permutation::cycle(degree, cyc));
      gens.push_back(Permutation::transposition(degree, 0, 1));
    }
    return close_generators(degree, gens);
  }
  std::vector<Permutation> gens;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    Permutation p = Permutation::parse(part);
    require(p.size() == degree, ErrorCode::InvalidArgument, "generator degree does not match the point count");
    gens.push_back(std::move(p));
  }
  return close_generators(degree, gens);
}

}  // namespace gia
