#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "lattice2d.hpp"
#include "polyring.hpp"
#include "report.hpp"

namespace fanres {

using nlohmann::json;

inline json vec_to_json(LatticeVec v) { return json::array({v.x, v.y}); }

inline LatticeVec vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error(ErrorKind::InvalidInput, "expected an integer pair, got " + j.dump());
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

// Term: [coeff, [p exponents], [[y index, exponent], ...]] with 1-based Y indices.
inline json poly_to_json(const Poly& g) {
  json out = json::array();
  for (const Term& t : g.terms()) {
    json ys = json::array();
    for (std::size_t k = 0; k < t.y.size(); ++k)
      if (t.y.e[k] != 0) ys.push_back(json::array({k + 1, t.y.e[k]}));
    out.push_back(json::array({t.coeff, t.p.e, ys}));
  }
  return out;
}

inline Poly poly_from_json(const json& j, std::size_t M, std::size_t n) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "polynomial must be a term array");
  std::vector<Term> ts;
  for (const json& t : j) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::InvalidInput, "malformed term " + t.dump());
    Term u{t[0].get<std::int64_t>(), Monomial(t[1].get<std::vector<std::int32_t>>()), Monomial(M)};
    if (u.p.size() != n) throw Error(ErrorKind::DimensionMismatch, "p-exponent vector of wrong length");
    for (const json& ye : t[2]) {
      const auto idx = ye[0].get<std::size_t>();
      if (idx < 1 || idx > M) throw Error(ErrorKind::InvalidInput, "Y-index out of range");
      u.y.e[idx - 1] = ye[1].get<std::int32_t>();
    }
    ts.push_back(std::move(u));
  }
  return Poly::from_terms(std::move(ts));
}

}  // namespace fanres
