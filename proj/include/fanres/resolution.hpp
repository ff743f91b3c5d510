#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "fan.hpp"
#include "poly_io.hpp"
#include "polyring.hpp"
#include "presentation.hpp"
#include "rank.hpp"
#include "report.hpp"
#include "serialize.hpp"
#include "syzygy.hpp"

namespace fanres {

// 0 -> F_L -> ... -> F_1 -> F_0 = R[Y]. maps[s-1] holds phi_s: one row per bases[s] element, coordinates in bases[s-1].
struct ChainComplex {
  std::size_t M = 0, n = 0;
  SupportKind kind = SupportKind::Cone;
  std::vector<LatticeVec> H;
  std::vector<std::vector<std::int64_t>> gen_f;
  std::vector<std::vector<BasisTuple>> bases;
  std::vector<std::vector<ModElem>> maps;
  std::optional<PValues> specialization;
  bool binomial_closure = true;

  std::size_t length() const { return maps.size(); }

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (const auto& b : bases) r.push_back(b.size());
    return r;
  }

  LatticeVec degree(std::size_t pos, std::size_t idx) const { return tuple_degree(bases.at(pos).at(idx), H); }
};

inline ChainComplex resolve(const Presentation& P) {
  ChainComplex c;
  c.M = P.M();
  c.n = P.n;
  c.kind = P.kind;
  c.H = P.H;
  for (const Generator& g : P.generators) c.gen_f.push_back(g.f);
  c.specialization = P.specialization;
  c.bases.push_back({BasisTuple{}});
  if (P.kind == SupportKind::HalfLine || P.kind == SupportKind::Line) {
    if (!P.relations.empty()) {
      c.bases.push_back({BasisTuple{1, 2}});
      c.maps.push_back({ModElem::from_poly(P.relations[0].poly)});
    }
    return c;
  }
  const SyzygyTower T = build_tower(P);
  for (std::size_t s = 1; s <= T.top(); ++s) {
    if (T.families[s].empty()) break;
    c.bases.push_back(T.tuples[s]);
    c.maps.push_back(T.families[s]);
  }
  c.binomial_closure = T.binomial_closure;
  return c;
}

inline ChainComplex resolve(const Fan& fan, const FanLinearFamily& fam) { return resolve(presentation_ideal(fan, fam)); }

namespace detail {

// Y_k -> p^{f(v_k)} x^{v_k}, honoring fixed p-values.
inline LaurentElement phi0_from_generators(const Poly& g, const ChainComplex& c) {
  LaurentElement out;
  for (const Term& t : g.terms()) {
    Monomial p = t.p;
    std::int64_t coeff = t.coeff;
    for (std::size_t k = 0; k < t.y.size(); ++k)
      for (std::size_t q = 0; q < c.n; ++q) p.e[q] = static_cast<std::int32_t>(checked::add(p.e[q], checked::mul(t.y.e[k], c.gen_f[k][q])));
    if (c.specialization)
      for (std::size_t q = 0; q < c.n; ++q)
        if ((*c.specialization)[q]) {
          coeff = checked::mul(coeff, checked::pow(*(*c.specialization)[q], p.e[q]));
          p.e[q] = 0;
        }
    out.add(p, zz_degree(t.y, c.H), coeff);
  }
  return out;
}

inline bool has_constant_term(const Poly& g) {
  for (const Term& t : g.terms())
    if (t.y.is_one() && t.p.is_one()) return true;
  return false;
}

}  // namespace detail

inline ValidationReport verify_complex(const ChainComplex& c) {
  ValidationReport rep;
  {
    bool ok = true;
    std::string detail;
    if (c.length() >= 1)
      for (std::size_t r = 0; r < c.maps[0].size(); ++r)
        if (!detail::phi0_from_generators(c.maps[0][r].coord(0), c).is_zero() && ok) {
          ok = false;
          detail = "phi0 o phi1 nonzero at row " + std::to_string(r + 1);
        }
    for (std::size_t s = 2; s <= c.length() && ok; ++s)
      for (std::size_t r = 0; r < c.maps[s - 1].size(); ++r) {
        ModElem img;
        for (const auto& [b, coef] : c.maps[s - 1][r].coords()) img.add_scaled(c.maps[s - 2].at(b), coef);
        if (!img.is_zero()) {
          ok = false;
          detail = "phi" + std::to_string(s - 1) + " o phi" + std::to_string(s) + " nonzero at row (" + to_string(c.bases[s][r]) + ")";
          break;
        }
      }
    rep.add("composition zero", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t s = 1; s <= c.length(); ++s)
      for (std::size_t r = 0; r < c.maps[s - 1].size(); ++r)
        for (const auto& [b, coef] : c.maps[s - 1][r].coords()) {
          const auto d = zz_degree(coef, c.H);
          if ((!d || *d != c.degree(s, r) - c.degree(s - 1, b)) && ok) {
            ok = false;
            detail = "phi" + std::to_string(s) + " entry (" + to_string(c.bases[s][r]) + "; " + to_string(c.bases[s - 1][b]) + ")";
          }
        }
    rep.add("Z^2-graded homogeneity", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t s = 1; s <= c.length(); ++s)
      for (std::size_t r = 0; r < c.maps[s - 1].size(); ++r)
        for (const auto& [b, coef] : c.maps[s - 1][r].coords())
          if (detail::has_constant_term(coef) && ok) {
            ok = false;
            detail = "phi" + std::to_string(s) + " entry (" + to_string(c.bases[s][r]) + "; " + to_string(c.bases[s - 1][b]) +
                     ") = " + render(coef);
          }
    rep.add("minimality (no constant entries)", ok, detail);
  }
  return rep;
}

struct RankCertificate {
  ValidationReport report;
  std::vector<std::vector<std::size_t>> trial_ranks;  // per trial, rank of phi_1..phi_L
  std::vector<std::size_t> max_ranks;
  std::string method;
};

enum class RankMethod { Auto, Exact, Modular };

// Random nonzero integer specialization of p and Y; ranks by Bareiss or modulo a 61-bit prime.
inline RankCertificate verify_ranks(const ChainComplex& c, int trials, std::uint64_t seed, std::int64_t bound = 10000,
                                    RankMethod method = RankMethod::Auto) {
  RankCertificate cert;
  std::size_t biggest = 0;
  for (const auto& m : c.maps)
    if (!m.empty()) biggest = std::max(biggest, m.size() * m.size());
  const bool exact = method == RankMethod::Exact || (method == RankMethod::Auto && biggest <= 160 * 160);
  cert.method = exact ? "fraction-free elimination over Z" : "elimination modulo 2^61-1 (lower bound of the rational rank)";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound - 1);
  auto draw = [&]() {
    std::int64_t v = dist(rng);
    return v >= 0 ? v + 1 : v;  // nonzero, uniform on [-B,-1] u [1,B]
  };
  cert.max_ranks.assign(c.length(), 0);
  for (int t = 0; t < trials; ++t) {
    std::vector<std::int64_t> pv(c.n), yv(c.M);
    for (std::size_t q = 0; q < c.n; ++q) pv[q] = c.specialization && (*c.specialization)[q] ? *(*c.specialization)[q] : draw();
    for (std::size_t k = 0; k < c.M; ++k) yv[k] = draw();
    std::vector<std::size_t> ranks;
    for (std::size_t s = 1; s <= c.length(); ++s) {
      const auto& rows = c.maps[s - 1];
      const std::size_t cols = c.bases[s - 1].size();
      if (exact) {
        std::vector<std::vector<BigInt>> a(rows.size(), std::vector<BigInt>(cols));
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (const auto& [b, coef] : rows[r].coords()) {
            BigInt v = 0;
            for (const Term& term : coef.terms()) {
              BigInt x = term.coeff;
              for (std::size_t q = 0; q < c.n; ++q) x *= boost::multiprecision::pow(BigInt(pv[q]), static_cast<unsigned>(term.p.e[q]));
              for (std::size_t k = 0; k < c.M; ++k) x *= boost::multiprecision::pow(BigInt(yv[k]), static_cast<unsigned>(term.y.e[k]));
              v += x;
            }
            a[r][b] = v;
          }
        ranks.push_back(bareiss_rank(std::move(a)));
      } else {
        auto red = [](std::int64_t v) {
          const std::int64_t m = v % static_cast<std::int64_t>(kRankPrime);
          return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(kRankPrime) : m);
        };
        std::vector<std::uint64_t> pm(c.n), ym(c.M);
        for (std::size_t q = 0; q < c.n; ++q) pm[q] = red(pv[q]);
        for (std::size_t k = 0; k < c.M; ++k) ym[k] = red(yv[k]);
        std::vector<std::vector<std::uint64_t>> a(rows.size(), std::vector<std::uint64_t>(cols, 0));
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (const auto& [b, coef] : rows[r].coords()) {
            std::uint64_t v = 0;
            for (const Term& term : coef.terms()) {
              std::uint64_t x = red(term.coeff);
              for (std::size_t q = 0; q < c.n; ++q) x = mulmod(x, powmod(pm[q], term.p.e[q]));
              for (std::size_t k = 0; k < c.M; ++k)
                if (term.y.e[k]) x = mulmod(x, powmod(ym[k], term.y.e[k]));
              v = (v + x) % kRankPrime;
            }
            a[r][b] = v;
          }
        ranks.push_back(modular_rank(std::move(a)));
      }
    }
    for (std::size_t s = 0; s < ranks.size(); ++s) cert.max_ranks[s] = std::max(cert.max_ranks[s], ranks[s]);
    cert.trial_ranks.push_back(std::move(ranks));
  }
  auto fmt = [](const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
    return s + ")";
  };
  const auto& R = cert.max_ranks;
  const std::size_t L = c.length();
  if (L == 0) {
    cert.report.add("rank conditions", true, "length-0 complex");
    return cert;
  }
  cert.report.add("rank phi1 = 1", R[0] == 1, "max ranks " + fmt(R));
  for (std::size_t s = 1; s < L; ++s)
    cert.report.add("rank phi" + std::to_string(s) + " + rank phi" + std::to_string(s + 1) + " = " + std::to_string(c.bases[s].size()),
                    R[s - 1] + R[s] == c.bases[s].size(), std::to_string(R[s - 1]) + " + " + std::to_string(R[s]));
  cert.report.add("phi" + std::to_string(L) + " injective", R[L - 1] == c.bases[L].size(),
                  std::to_string(R[L - 1]) + " of " + std::to_string(c.bases[L].size()));
  return cert;
}

struct BettiTable {
  std::vector<std::size_t> total;
  std::vector<std::map<LatticeVec, std::size_t>> graded;
  std::vector<std::map<std::int64_t, std::size_t>> z_graded;
  bool minimal = true;
  std::string label;
};

inline BettiTable betti(const ChainComplex& c, std::optional<bool> minimal = std::nullopt) {
  BettiTable t;
  t.minimal = minimal ? *minimal : verify_complex(c).passed("minimality (no constant entries)");
  t.label = t.minimal ? "minimal graded Betti numbers" : "non-minimal ranks";
  for (std::size_t s = 0; s < c.bases.size(); ++s) {
    t.total.push_back(c.bases[s].size());
    std::map<LatticeVec, std::size_t> g;
    std::map<std::int64_t, std::size_t> z;
    for (std::size_t q = 0; q < c.bases[s].size(); ++q) {
      ++g[c.degree(s, q)];
      ++z[static_cast<std::int64_t>(c.bases[s][q].size())];
    }
    t.graded.push_back(std::move(g));
    t.z_graded.push_back(std::move(z));
  }
  return t;
}

// Expected totals (1, C(M-1,2), 2C(M-1,3), ..., M-2).
inline std::vector<std::size_t> betti_formula(std::size_t M) {
  std::vector<std::size_t> out{1};
  if (M < 3) return out;
  for (std::size_t i = 1; i + 2 <= M; ++i) out.push_back(i * binomial(M - 1, i + 1));
  return out;
}

enum class ExportFormat { Json, Text, M2 };

inline ExportFormat export_format_from_string(const std::string& s) {
  if (s == "json") return ExportFormat::Json;
  if (s == "text") return ExportFormat::Text;
  if (s == "m2") return ExportFormat::M2;
  throw Error(ErrorKind::UnsupportedFormat, "unknown export format '" + s + "'");
}

constexpr const char* kComplexSchema = "fanres.complex/1";

inline json complex_to_json(const ChainComplex& c) {
  json gens = json::array();
  for (std::size_t k = 0; k < c.M; ++k) gens.push_back({{"index", k + 1}, {"vector", vec_to_json(c.H[k])}, {"f", c.gen_f[k]}});
  json positions = json::array();
  for (std::size_t s = 0; s < c.bases.size(); ++s) {
    json basis = json::array(), degs = json::array();
    for (std::size_t q = 0; q < c.bases[s].size(); ++q) {
      basis.push_back(c.bases[s][q]);
      degs.push_back(vec_to_json(c.degree(s, q)));
    }
    positions.push_back({{"position", s}, {"rank", c.bases[s].size()}, {"basis", basis}, {"degrees", degs}});
  }
  json maps = json::array();
  for (std::size_t s = 1; s <= c.length(); ++s) {
    json rows = json::array();
    for (const ModElem& r : c.maps[s - 1]) {
      json row = json::array();
      for (const auto& [b, coef] : r.coords()) row.push_back(json::array({b, poly_to_json(coef)}));
      rows.push_back(std::move(row));
    }
    maps.push_back({{"name", "phi" + std::to_string(s)}, {"rows", std::move(rows)}});
  }
  json j{{"schema", kComplexSchema}, {"support_kind", to_string(c.kind)}, {"M", c.M},           {"n", c.n},
         {"generators", gens},      {"positions", positions},          {"maps", maps}};
  if (c.specialization) {
    json sp = json::array();
    for (const auto& v : *c.specialization) sp.push_back(v ? json(*v) : json(nullptr));
    j["specialization"] = sp;
  }
  j["binomial_closure"] = c.binomial_closure;
  return j;
}

inline ChainComplex complex_from_json(const json& j) {
  if (!j.contains("schema") || j["schema"] != kComplexSchema) throw Error(ErrorKind::UnsupportedFormat, "unknown complex schema");
  ChainComplex c;
  c.M = j.at("M").get<std::size_t>();
  c.n = j.at("n").get<std::size_t>();
  c.kind = support_kind_from_string(j.at("support_kind").get<std::string>());
  for (const json& g : j.at("generators")) {
    c.H.push_back(vec_from_json(g.at("vector")));
    c.gen_f.push_back(g.at("f").get<std::vector<std::int64_t>>());
  }
  for (const json& p : j.at("positions")) {
    std::vector<BasisTuple> b;
    for (const json& t : p.at("basis")) b.push_back(t.get<BasisTuple>());
    c.bases.push_back(std::move(b));
  }
  for (const json& m : j.at("maps")) {
    std::vector<ModElem> rows;
    for (const json& r : m.at("rows")) {
      ModElem e;
      for (const json& entry : r) e.add(entry[0].get<std::size_t>(), poly_from_json(entry[1], c.M, c.n));
      rows.push_back(std::move(e));
    }
    c.maps.push_back(std::move(rows));
  }
  if (j.contains("specialization")) {
    PValues v;
    for (const json& x : j["specialization"]) v.push_back(x.is_null() ? std::nullopt : std::optional<std::int64_t>(x.get<std::int64_t>()));
    c.specialization = v;
  }
  c.binomial_closure = j.value("binomial_closure", true);
  if (c.bases.size() != c.maps.size() + 1) throw Error(ErrorKind::InvalidInput, "positions and maps disagree");
  return c;
}

inline std::string matrix_text(const ChainComplex& c, std::size_t s) {
  const auto& rows = c.maps.at(s - 1);
  const auto& colb = c.bases.at(s - 1);
  std::vector<std::vector<std::string>> cells(rows.size(), std::vector<std::string>(colb.size(), "0"));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [b, coef] : rows[r].coords()) cells[r][b] = render(coef);
  std::vector<std::string> rlab, clab;
  for (const auto& t : c.bases[s]) rlab.push_back("s" + to_string(t));
  for (const auto& t : colb) clab.push_back(s == 1 ? "1" : "e" + to_string(t));
  std::size_t rw = 0;
  for (const auto& l : rlab) rw = std::max(rw, l.size());
  std::vector<std::size_t> cw(colb.size());
  for (std::size_t k = 0; k < colb.size(); ++k) {
    cw[k] = clab[k].size();
    for (const auto& row : cells) cw[k] = std::max(cw[k], row[k].size());
  }
  auto pad = [](const std::string& x, std::size_t w) { return x + std::string(w - x.size(), ' '); };
  std::ostringstream os;
  os << "phi" << s << ": " << rows.size() << " x " << colb.size() << "\n";
  os << pad("", rw) << " |";
  for (std::size_t k = 0; k < colb.size(); ++k) os << " " << pad(clab[k], cw[k]);
  os << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << pad(rlab[r], rw) << " |";
    for (std::size_t k = 0; k < colb.size(); ++k) os << " " << pad(cells[r][k], cw[k]);
    os << "\n";
  }
  return os.str();
}

inline std::string complex_text(const ChainComplex& c) {
  std::ostringstream os;
  os << "generators:";
  for (std::size_t k = 0; k < c.M; ++k) os << " Y(" << k + 1 << ")=" << to_string(c.H[k]);
  os << "\nranks:";
  for (std::size_t r : c.ranks()) os << " " << r;
  os << "\n";
  for (std::size_t s = 1; s <= c.length(); ++s) os << "\n" << matrix_text(c, s);
  return os.str();
}

inline std::string m2_poly(const Poly& g) {
  std::string s = render(g, RenderStyle{nullptr, false});
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += s[i];
    if ((s[i] == 'Y' || s[i] == 'p') && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) out += '_';
  }
  return out;
}

inline std::string complex_m2(const ChainComplex& c) {
  std::ostringstream os;
  os << "-- fanres export: resolution of R/I, I the presentation ideal\n";
  const bool graded = c.kind == SupportKind::Cone && c.M >= 2 && !c.specialization;
  std::vector<std::int64_t> deg;
  if (graded) {
    const LatticeVec v1 = c.H.front(), vN = c.H.back();
    for (std::size_t k = 0; k < c.M; ++k) {
      std::int64_t d = det2(c.H[k], v1) + det2(vN, c.H[k]);
      for (std::int64_t f : c.gen_f[k]) d += f;
      deg.push_back(d);
    }
  }
  os << "R = QQ[";
  bool first = true;
  auto var = [&](const std::string& v) {
    os << (first ? "" : ", ") << v;
    first = false;
  };
  for (std::size_t q = 0; q < c.n; ++q) var("p_" + std::to_string(q + 1));
  for (std::size_t k = 0; k < c.M; ++k) var("Y_" + std::to_string(k + 1));
  if (graded) {
    os << ", Degrees => {";
    for (std::size_t q = 0; q < c.n; ++q) os << (q ? ", " : "") << 1;
    for (std::size_t k = 0; k < c.M; ++k) os << (c.n + k ? ", " : "") << deg[k];
    os << "}";
  }
  os << "];\n";
  os << "I = ideal(";
  if (c.length() >= 1)
    for (std::size_t r = 0; r < c.maps[0].size(); ++r) os << (r ? ", " : "") << m2_poly(c.maps[0][r].coord(0));
  else
    os << "0_R";
  os << ");\n";
  os << "C = res I;\n";
  os << "assert(apply(length C + 1, i -> rank C_i) == {";
  const auto r = c.ranks();
  for (std::size_t k = 0; k < r.size(); ++k) os << (k ? ", " : "") << r[k];
  os << "});\n";
  return os.str();
}

inline std::string export_complex(const ChainComplex& c, ExportFormat f) {
  switch (f) {
    case ExportFormat::Json: return complex_to_json(c).dump(2) + "\n";
    case ExportFormat::Text: return complex_text(c);
    case ExportFormat::M2: return complex_m2(c);
  }
  throw Error(ErrorKind::UnsupportedFormat, "unknown export format");
}

inline std::string export_complex(const ChainComplex& c, const std::string& f) { return export_complex(c, export_format_from_string(f)); }

}  // namespace fanres
