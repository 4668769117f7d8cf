#include "serialize.hpp"

#include "error.hpp"

namespace gia {

Json number_json(const BigInt& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

Json number_json(const Rational& v) {
  if (v.get_den() == 1) return number_json(BigInt(v.get_num()));
  return to_string(v);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  require(j.is_string(), ErrorCode::InvalidArgument, "expected an integer or a rational string");
  Rational r;
  require(r.set_str(j.get<std::string>(), 10) == 0, ErrorCode::Parse, "malformed rational '" + j.get<std::string>() + "'");
  require(r.get_den() != 0, ErrorCode::InvalidArgument, "zero denominator");
  r.canonicalize();
  return r;
}

Json lincomb_json(const LinComb& c) {
  Json out = Json::array();
  for (const auto& [g, coeff] : c.terms()) out.push_back({{"coeff", number_json(coeff)}, {"graph6", g.graph6()}});
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(number_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> member_labels(const GPoset& p) {
  std::vector<std::string> out;
  for (const auto& m : p.members()) out.push_back(m.graph6());
  return out;
}

Json poset_json(const GPoset& p) {
  Json members = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json m = {{"index", i}, {"graph6", p[i].graph6()}, {"degree", p[i].degree()}, {"cv", p[i].cv()}};
    if (p[i].cv() <= kMaxAutomorphismSupport) m["aut_support"] = p[i].aut_support();
    members.push_back(std::move(m));
  }
  Json out = {{"size", p.size()}, {"complete", p.complete()}, {"members", members}};
  if (p.ambient_n()) out["n"] = *p.ambient_n();
  return out;
}

}  // namespace gia
