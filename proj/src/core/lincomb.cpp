#include "lincomb.hpp"

namespace gia {

void LinComb::add(const IsoClass& g, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(g, coeff);
  if (fresh) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Rational LinComb::coefficient(const IsoClass& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LinComb::integral() const {
  for (const auto& [g, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Rational LinComb::evaluate(const LabeledGraph& host) const {
  Rational total = 0;
  for (const auto& [g, c] : terms_) {
    if (g.degree() > host.edge_count() || g.cv() > host.support_size()) continue;
    total += c * Rational(from_uint64(count_subgraphs(g, host)));
  }
  return total;
}

LinComb LinComb::scaled(const Rational& f) const {
  LinComb out;
  for (const auto& [g, c] : terms_) out.add(g, c * f);
  return out;
}

LinComb LinComb::operator+(const LinComb& other) const {
  LinComb out = *this;
  for (const auto& [g, c] : other.terms_) out.add(g, c);
  return out;
}

LinComb LinComb::operator-(const LinComb& other) const { return *this + other.scaled(-1); }

std::string LinComb::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += gia::to_string(c) + "*[" + g.graph6() + "]";
  }
  return out;
}

}  // namespace gia
