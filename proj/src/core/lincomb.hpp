#pragma once

#include <map>
#include <string>

#include "graph.hpp"
#include "numeric.hpp"

namespace gia {

/// Σ coeff · I(class); zero coefficients are never stored.
class LinComb {
 public:
  using Terms = std::map<IsoClass, Rational>;

  LinComb() = default;

  void add(const IsoClass& g, const Rational& coeff);
  Rational coefficient(const IsoClass& g) const;
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool integral() const;

  Rational evaluate(const LabeledGraph& host) const;
  LinComb scaled(const Rational& f) const;
  LinComb operator+(const LinComb& other) const;
  LinComb operator-(const LinComb& other) const;
  bool operator==(const LinComb& other) const { return terms_ == other.terms_; }

  /// e.g. "2*[Bo] + 3*[Bw]"
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace gia
