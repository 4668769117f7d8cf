#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lincomb.hpp"
#include "matrix.hpp"
#include "numeric.hpp"
#include "poset.hpp"

namespace gia {

using Json = nlohmann::ordered_json;

/// Integers that fit 64 bits become JSON numbers; everything else a decimal or "p/q" string.
Json number_json(const BigInt& v);
Json number_json(const Rational& v);
Rational rational_from_json(const Json& j);

/// [{"coeff": ..., "graph6": ...}] in poset order.
Json lincomb_json(const LinComb& c);
Json matrix_json(const IntMatrix& m);
std::vector<std::string> member_labels(const GPoset& p);
Json poset_json(const GPoset& p);

}  // namespace gia
