#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "fan.hpp"
#include "hilbert.hpp"
#include "poly_io.hpp"
#include "polyring.hpp"
#include "report.hpp"

namespace fanres {

struct Generator {
  LatticeVec v;
  std::vector<std::int64_t> f;  // f_k(v)
};

// S_{i,j} = Y_i Y_j - p^gamma Y_w^alpha Y_w2^alpha2 (indices 1-based; w = 0 or w2 = 0 when absent).
struct Relation {
  std::size_t i = 0, j = 0;
  std::size_t w = 0, w2 = 0;
  std::int64_t alpha = 0, alpha2 = 0;
  std::vector<std::int64_t> gamma;
  Poly poly;
};

struct Presentation {
  SupportKind kind = SupportKind::Cone;
  std::vector<LatticeVec> H;
  std::size_t n = 0;
  std::vector<Generator> generators;
  std::vector<Relation> relations;  // lex by (i,j)
  std::optional<PValues> specialization;

  std::size_t M() const { return H.size(); }

  std::vector<Poly> polys() const {
    std::vector<Poly> out;
    for (const Relation& r : relations) out.push_back(r.poly);
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>> index_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const Relation& r : relations) out.emplace_back(r.i, r.j);
    return out;
  }

  std::optional<std::size_t> relation_index(std::size_t i, std::size_t j) const {
    for (std::size_t q = 0; q < relations.size(); ++q)
      if (relations[q].i == i && relations[q].j == j) return q;
    return std::nullopt;
  }
};

inline std::vector<LatticeVec> hilbert_union(const Fan& fan) {
  if (fan.kind() == SupportKind::Plane) throw plane_support_error();
  if (fan.degenerate()) return fan.rays();
  std::vector<LatticeVec> H;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    const auto [a, b] = fan.cone(c);
    const HilbertBasis h = hilbert_basis(a, b);
    for (std::size_t k = (c == 0 ? 0 : 1); k < h.size(); ++k) H.push_back(h.elements[k]);
  }
  for (std::size_t k = 0; k + 1 < H.size(); ++k)
    if (det2(H[k + 1], H[k]) != 1) throw Error(ErrorKind::Internal, "consecutive generators are not unimodular");
  return H;
}

namespace detail {

inline Poly relation_poly(std::size_t M, std::size_t n, std::size_t i, std::size_t j, const std::vector<std::int64_t>& gamma,
                          std::size_t w, std::int64_t alpha, std::size_t w2, std::int64_t alpha2) {
  Monomial lead(M);
  lead.e[i - 1] += 1;
  lead.e[j - 1] += 1;
  Monomial tail(M);
  if (w) tail.e[w - 1] += static_cast<std::int32_t>(alpha);
  if (w2) tail.e[w2 - 1] += static_cast<std::int32_t>(alpha2);
  Monomial p(n);
  for (std::size_t k = 0; k < n; ++k) p.e[k] = static_cast<std::int32_t>(gamma[k]);
  return Poly::term(1, Monomial(n), lead) - Poly::term(1, p, tail);
}

}  // namespace detail

inline Relation make_relation(const std::vector<LatticeVec>& H, const Fan& fan, const FanLinearFamily& fam, std::size_t i,
                              std::size_t j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > H.size() || i == j) throw Error(ErrorKind::InvalidInput, "relation indices out of range");
  if (j == i + 1) throw Error(ErrorKind::AdjacentPair, "Y" + std::to_string(i) + ", Y" + std::to_string(j) + " are adjacent");
  Relation r;
  r.i = i;
  r.j = j;
  const LatticeVec s = H[i - 1] + H[j - 1];
  r.gamma = gamma(fam, fan, H[i - 1], H[j - 1]);
  for (std::int64_t g : r.gamma)
    if (g < 0) throw Error(ErrorKind::InvalidInput, "family is not subadditive at " + to_string(H[i - 1]) + " + " + to_string(H[j - 1]));
  if (!is_zero(s)) {
    std::size_t lo = 1, hi = H.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (det2(H[mid], s) >= 0)
        hi = mid;
      else
        lo = mid + 1;
    }
    const std::size_t t = lo - 1;  // 0-based; s in cone(H[t], H[t+1])
    const std::int64_t a = det2(H[t + 1], s);
    const std::int64_t a2 = det2(s, H[t]);
    if (a < 0 || a2 < 0 || a * H[t] + a2 * H[t + 1] != s) throw Error(ErrorKind::Internal, "failed to locate " + to_string(s));
    if (a > 0) {
      r.w = t + 1;
      r.alpha = a;
    }
    if (a2 > 0) {
      if (r.w == 0) {
        r.w = t + 2;
        r.alpha = a2;
      } else {
        r.w2 = t + 2;
        r.alpha2 = a2;
      }
    }
  }
  r.poly = detail::relation_poly(H.size(), fam.n(), i, j, r.gamma, r.w, r.alpha, r.w2, r.alpha2);
  return r;
}

inline Presentation degenerate_presentation(const Fan& fan, const FanLinearFamily& fam) {
  check_dimensions(fan, fam);
  if (!fan.degenerate()) throw Error(ErrorKind::InvalidInput, "degenerate_presentation needs a half-line or line fan");
  Presentation P;
  P.kind = fan.kind();
  P.H = fan.rays();
  P.n = fam.n();
  for (std::size_t c = 0; c < P.H.size(); ++c) {
    Generator g{P.H[c], {}};
    for (const auto& fk : fam.forms) g.f.push_back(fk[c](P.H[c]));
    P.generators.push_back(g);
  }
  if (fan.kind() == SupportKind::Line) {
    Relation r;
    r.i = 1;
    r.j = 2;
    for (std::size_t k = 0; k < fam.n(); ++k) r.gamma.push_back(checked::add(P.generators[0].f[k], P.generators[1].f[k]));
    r.poly = detail::relation_poly(2, fam.n(), 1, 2, r.gamma, 0, 0, 0, 0);
    P.relations.push_back(r);
  }
  return P;
}

inline Presentation presentation_ideal(const Fan& fan, const FanLinearFamily& fam) {
  check_dimensions(fan, fam);
  if (fan.degenerate()) return degenerate_presentation(fan, fam);
  Presentation P;
  P.kind = fan.kind();
  P.H = hilbert_union(fan);
  P.n = fam.n();
  for (LatticeVec v : P.H) P.generators.push_back({v, eval_all(fam, fan, v)});
  const std::size_t M = P.M();
  for (std::size_t i = 1; i <= M; ++i)
    for (std::size_t j = i + 2; j <= M; ++j) P.relations.push_back(make_relation(P.H, fan, fam, i, j));
  return P;
}

inline Presentation specialize(const Presentation& P, const PValues& values) {
  if (values.size() != P.n) throw Error(ErrorKind::DimensionMismatch, "specialization needs one entry per p-variable");
  Presentation S = P;
  for (Relation& r : S.relations) r.poly = specialize(r.poly, values);
  S.specialization = values;
  return S;
}

// S-polynomial of two monic polynomials.
inline Poly spoly(const Poly& a, const Poly& b, const YOrder& ord = {}) {
  const Monomial la = lm(a, ord), lb = lm(b, ord);
  const Monomial L = lcm(la, lb);
  return a.mul_term(1, Monomial(), quotient(L, la)) - b.mul_term(1, Monomial(), quotient(L, lb));
}

inline ValidationReport verify_groebner(const Presentation& P) {
  ValidationReport rep;
  const std::vector<Poly> G = P.polys();
  const std::size_t M = P.M();
  bool monic = true;
  bool lt_ok = true;
  for (const Relation& r : P.relations) {
    const Leading l = leading(r.poly);
    if (!is_unit_one(l.lc)) monic = false;
    Monomial want(M);
    want.e[r.i - 1] += 1;
    want.e[r.j - 1] += 1;
    if (!(l.lm == want)) lt_ok = false;
  }
  rep.add("monic", monic);
  rep.add("leading terms Y_iY_j", lt_ok);
  if (!monic) return rep;
  {
    std::set<std::pair<std::size_t, std::size_t>> have;
    for (const Relation& r : P.relations) have.insert({r.i, r.j});
    std::set<std::pair<std::size_t, std::size_t>> want;
    if (P.kind != SupportKind::Line)
      for (std::size_t i = 1; i <= M; ++i)
        for (std::size_t j = i + 2; j <= M; ++j) want.insert({i, j});
    else
      want.insert({1, 2});
    rep.add("leading-term ideal generated by non-adjacent products", have == want,
            std::to_string(have.size()) + " leading terms, " + std::to_string(want.size()) + " expected");
  }
  {
    bool ok = true;
    std::size_t pairs = 0;
    std::string detail;
    for (std::size_t a = 0; a < G.size(); ++a)
      for (std::size_t b = a + 1; b < G.size(); ++b) {
        ++pairs;
        const DivisionResult d = divide(spoly(G[a], G[b]), G);
        if (!d.remainder.is_zero() && ok) {
          ok = false;
          detail = "S(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") leaves " + render(d.remainder);
        }
      }
    rep.add("S-polynomials reduce to zero", ok, ok ? std::to_string(pairs) + " pairs" : detail);
  }
  {
    bool ok = true;
    std::vector<Monomial> lms;
    for (const Poly& g : G) lms.push_back(lm(g));
    for (std::size_t a = 0; a < G.size(); ++a)
      for (const Term& t : G[a].terms())
        for (std::size_t b = 0; b < G.size(); ++b)
          if (b != a && divides(lms[b], t.y)) ok = false;
    rep.add("reduced", ok);
  }
  return rep;
}

// Kernel membership, homogeneity, shape and cardinality of the relations.
inline ValidationReport verify_relations(const Presentation& P, const Fan& fan, const FanLinearFamily& fam) {
  ValidationReport rep;
  const std::size_t M = P.M();
  if (P.kind == SupportKind::Cone || P.kind == SupportKind::HalfPlane) {
    const std::size_t want = M >= 2 ? (M - 1) * (M - 2) / 2 : 0;
    rep.add("cardinality C(M-1,2)", P.relations.size() == want,
            std::to_string(P.relations.size()) + " relations, M = " + std::to_string(M));
  }
  bool kernel = true, homogeneous = true, binomial = true;
  for (const Relation& r : P.relations) {
    if (!P.specialization && !phi0_eval(r.poly, P.H, fan, fam).is_zero()) kernel = false;
    const auto d = zz_degree(r.poly, P.H);
    if (!d || *d != P.H[r.i - 1] + P.H[r.j - 1]) homogeneous = false;
    if (!P.specialization && (r.poly.size() != 2 || !is_signed_p_monomial(terms_with_y(r.poly, r.poly.terms()[1].y))))
      binomial = false;
  }
  if (!P.specialization) rep.add("relations in ker(phi0)", kernel);
  rep.add("Z^2-homogeneous of degree v_i+v_j", homogeneous);
  if (!P.specialization) rep.add("binomial shape", binomial);
  return rep;
}

// S_P = sum coefficient * S_Q, certified by division.
struct RedundantRelation {
  std::size_t relation = 0;                                 // index into relations
  std::vector<std::pair<std::size_t, Poly>> combination;    // (relation index, coefficient)
  bool explicit_identity = false;                           // unit quotient was exactly +-1
};

struct MinimalityReport {
  ValidationReport report;
  bool generators_minimal = true;
  bool relations_minimal = true;
  std::vector<std::size_t> flagged_generator_relations;  // relations of the form Y_vY_v' - unit*Y_w
  std::vector<RedundantRelation> redundant;
};

namespace detail {

// The two relations paired for the admissible triple (i,j,k): (i,j) with (i,k) or (k,j).
inline std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> triple_pairs(std::size_t i, std::size_t j,
                                                                                                       std::size_t k) {
  if (j < k) return {{i, j}, {i, k}};
  return {{i, j}, {k, j}};
}

inline bool has_unit_constant(const Poly& q) {
  for (const Term& t : q.terms())
    if (t.y.is_one() && t.p.is_one() && (t.coeff == 1 || t.coeff == -1)) return true;
  return false;
}

}  // namespace detail

inline MinimalityReport check_minimal_generation(const Presentation& P, const FanLinearFamily& fam, const Fan& fan) {
  MinimalityReport out;
  auto& rep = out.report;
  // (a) relations Y_vY_v' - (unit)Y_w
  for (std::size_t q = 0; q < P.relations.size(); ++q) {
    const Poly& g = P.relations[q].poly;
    if (g.size() != 2) continue;
    const Term& t = g.terms()[1];
    if (t.y.degree() == 1 && t.p.is_one() && (t.coeff == 1 || t.coeff == -1)) out.flagged_generator_relations.push_back(q);
  }
  {
    std::string detail;
    for (std::size_t q : out.flagged_generator_relations)
      detail += (detail.empty() ? "" : "; ") + render(P.relations[q].poly);
    out.generators_minimal = out.flagged_generator_relations.empty();
    rep.add("no relation Y_vY_v' - Y_w", out.generators_minimal, detail);
  }
  // (b) strictness
  const Strictness st = is_strict(fan, fam);
  {
    std::string detail;
    for (std::size_t w = 0; w < st.wall_strict.size(); ++w) {
      detail += (w ? ", " : "") + std::string("wall ") + to_string(fan.rays()[w + 1]) + ": ";
      detail += st.distinguished[w] ? "strict (k=" + std::to_string(*st.distinguished[w] + 1) + ")" : "not strict";
    }
    rep.add("family strict", st.all_strict(), detail);
  }
  // (c) relation minimality: generic strict input, or re-division after specialization
  if (!P.specialization) {
    out.relations_minimal = st.all_strict() && out.generators_minimal;
    rep.add("relations minimal (generic coefficients)", out.relations_minimal);
    return out;
  }
  const std::vector<Poly> G = P.polys();
  const std::size_t M = P.M();
  std::set<std::size_t> seen;
  for (std::size_t i = 1; i <= M; ++i)
    for (std::size_t j = i + 2; j <= M; ++j)
      for (std::size_t k = i + 1; k <= M; ++k) {
        if (k == j || k == j - 1) continue;
        const auto [A, B] = detail::triple_pairs(i, j, k);
        const std::size_t a = *P.relation_index(A.first, A.second);
        const std::size_t b = *P.relation_index(B.first, B.second);
        const Monomial la = lm(G[a]), lb = lm(G[b]);
        const Monomial L = lcm(la, lb);
        const Monomial ma = quotient(L, la), mb = quotient(L, lb);
        const DivisionResult d = divide(spoly(G[a], G[b]), G);
        if (!d.remainder.is_zero()) throw Error(ErrorKind::Internal, "specialized relations are not a Groebner basis");
        for (std::size_t q = 0; q < G.size(); ++q) {
          if (q == a || q == b || seen.count(q) || !detail::has_unit_constant(d.quotients[q])) continue;
          seen.insert(q);
          RedundantRelation rr;
          rr.relation = q;
          const Poly& uq = d.quotients[q];
          rr.explicit_identity = uq.size() == 1;
          if (rr.explicit_identity) {
            const std::int64_t u = uq.terms()[0].coeff;
            std::map<std::size_t, Poly> c;
            c[a] += Poly::term(u, Monomial(P.n), ma);
            c[b] -= Poly::term(u, Monomial(P.n), mb);
            for (std::size_t o = 0; o < G.size(); ++o)
              if (o != q && !d.quotients[o].is_zero()) c[o] -= d.quotients[o].mul_term(u, Monomial(), Monomial());
            for (auto& [idx, poly] : c)
              if (!poly.is_zero()) rr.combination.emplace_back(idx, poly);
          }
          out.redundant.push_back(std::move(rr));
        }
      }
  out.relations_minimal = out.redundant.empty() && out.generators_minimal;
  std::string detail;
  for (const RedundantRelation& rr : out.redundant) {
    detail += (detail.empty() ? "" : "; ") + render(P.relations[rr.relation].poly);
    if (rr.explicit_identity) {
      detail += " = ";
      bool first = true;
      for (const auto& [idx, c] : rr.combination) {
        detail += (first ? "" : " + ") + std::string("(") + render(c) + ")(" + render(P.relations[idx].poly) + ")";
        first = false;
      }
    }
  }
  rep.add("relations minimal after specialization", out.relations_minimal, detail);
  return out;
}

}  // namespace fanres
