#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "poly_io.hpp"
#include "polyring.hpp"
#include "presentation.hpp"
#include "report.hpp"

namespace fanres {

// (i, j, k1, ..., k_{s-1}), 1-based; stage s = size - 1. The empty tuple is the basis of R[Y] itself.
using BasisTuple = std::vector<std::size_t>;

inline std::size_t stage_of(const BasisTuple& t) { return t.empty() ? 0 : t.size() - 1; }

inline std::string to_string(const BasisTuple& t) {
  std::string s;
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
  return s;
}

inline LatticeVec tuple_degree(const BasisTuple& t, const std::vector<LatticeVec>& H) {
  LatticeVec d{0, 0};
  for (std::size_t idx : t) d = d + H.at(idx - 1);
  return d;
}

// Admissible tuples (i, j, k1..ku) in lex order: i < j-1, i < k1 < ... < ku <= M, k_m not in {j-1, j}.
inline std::vector<BasisTuple> enumerate_admissible(std::size_t M, std::size_t u) {
  std::vector<BasisTuple> out;
  for (std::size_t i = 1; i <= M; ++i)
    for (std::size_t j = i + 2; j <= M; ++j) {
      std::vector<std::size_t> pool;
      for (std::size_t k = i + 1; k <= M; ++k)
        if (k != j - 1 && k != j) pool.push_back(k);
      if (pool.size() < u) continue;
      std::vector<std::size_t> sel(u);
      for (std::size_t q = 0; q < u; ++q) sel[q] = q;
      while (true) {
        BasisTuple t{i, j};
        for (std::size_t q : sel) t.push_back(pool[q]);
        out.push_back(std::move(t));
        std::size_t q = u;
        while (q > 0 && sel[q - 1] == pool.size() - u + q - 1) --q;
        if (q == 0) break;
        ++sel[q - 1];
        for (std::size_t r = q; r < u; ++r) sel[r] = sel[r - 1] + 1;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// Number of admissible (u+2)-tuples: (u+1) C(M-1, u+2).
inline std::uint64_t admissible_count(std::size_t M, std::size_t u) { return M == 0 ? 0 : (u + 1) * binomial(M - 1, u + 2); }

// sum_{j=1}^{N-u} j C(j+u, u), summed directly; equals (u+1) C(N+1, u+2).
inline std::uint64_t weighted_binomial_sum(std::size_t N, std::size_t u) {
  std::uint64_t s = 0;
  for (std::size_t j = 1; j + u <= N; ++j) s += j * binomial(j + u, u);
  return s;
}

// Sparse element of a free module; coordinates keyed by basis index, sorted, nonzero.
class ModElem {
 public:
  ModElem() = default;

  static ModElem from_poly(Poly g) {
    ModElem m;
    if (!g.is_zero()) m.c_.emplace_back(0, std::move(g));
    return m;
  }

  static ModElem basis(std::size_t idx, Poly coeff) {
    ModElem m;
    if (!coeff.is_zero()) m.c_.emplace_back(idx, std::move(coeff));
    return m;
  }

  bool is_zero() const { return c_.empty(); }
  const std::vector<std::pair<std::size_t, Poly>>& coords() const { return c_; }

  Poly coord(std::size_t idx) const {
    auto it = std::lower_bound(c_.begin(), c_.end(), idx, [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != c_.end() && it->first == idx) return it->second;
    return {};
  }

  // this += f * g
  void add_scaled(const ModElem& g, const Poly& f) {
    if (f.is_zero() || g.is_zero()) return;
    std::vector<std::pair<std::size_t, Poly>> out;
    out.reserve(c_.size() + g.c_.size());
    std::size_t i = 0, j = 0;
    while (i < c_.size() || j < g.c_.size()) {
      if (j == g.c_.size() || (i < c_.size() && c_[i].first < g.c_[j].first)) {
        out.push_back(std::move(c_[i++]));
      } else if (i == c_.size() || g.c_[j].first < c_[i].first) {
        Poly p = f * g.c_[j].second;
        if (!p.is_zero()) out.emplace_back(g.c_[j].first, std::move(p));
        ++j;
      } else {
        Poly p = c_[i].second + f * g.c_[j].second;
        if (!p.is_zero()) out.emplace_back(c_[i].first, std::move(p));
        ++i;
        ++j;
      }
    }
    c_ = std::move(out);
  }

  void add(std::size_t idx, const Poly& p) { add_scaled(basis(idx, p), Poly::constant(1, 0, 0)); }

  friend ModElem operator+(ModElem a, const ModElem& b) {
    a.add_scaled(b, Poly::constant(1, 0, 0));
    return a;
  }
  friend ModElem operator-(ModElem a, const ModElem& b) {
    a.add_scaled(b, Poly::constant(-1, 0, 0));
    return a;
  }
  friend bool operator==(const ModElem&, const ModElem&) = default;

 private:
  std::vector<std::pair<std::size_t, Poly>> c_;
};

// Induced order on a free module whose basis element t maps to a generator with lifted chain data.
struct SchreyerOrder {
  std::size_t stage = 0;
  std::vector<Monomial> chain_mono;                 // product of the leading Y-monomials down to R[Y]
  std::vector<std::vector<std::size_t>> chain_idx;  // basis indices along the chain, lowest level first

  static SchreyerOrder trivial() {
    SchreyerOrder so;
    so.chain_mono.push_back(Monomial());
    so.chain_idx.push_back({});
    return so;
  }

  std::size_t size() const { return chain_mono.size(); }

  // Y^ya e_a versus Y^yb e_b.
  int compare(const Monomial& ya, std::size_t a, const Monomial& yb, std::size_t b) const {
    const int c = lex_compare_products(ya, chain_mono[a], yb, chain_mono[b]);
    if (c != 0) return c;
    const auto& ia = chain_idx[a];
    const auto& ib = chain_idx[b];
    for (std::size_t l = 0; l < ia.size(); ++l)
      if (ia[l] != ib[l]) return ia[l] > ib[l] ? -1 : 1;
    return 0;
  }
};

struct ModuleMonomial {
  Monomial y;
  BasisTuple tuple;
};

// Comparison by tuples; resolves indices against the stage basis.
inline int schreyer_compare(const ModuleMonomial& a, const ModuleMonomial& b, const SchreyerOrder& so,
                            const std::vector<BasisTuple>& basis) {
  if (stage_of(a.tuple) != so.stage || stage_of(b.tuple) != so.stage)
    throw Error(ErrorKind::StageMismatch, "module monomials from stage " + std::to_string(stage_of(a.tuple)) + " and " +
                                              std::to_string(stage_of(b.tuple)) + " compared in stage " + std::to_string(so.stage));
  auto find = [&](const BasisTuple& t) {
    auto it = std::lower_bound(basis.begin(), basis.end(), t);
    if (it == basis.end() || *it != t) throw Error(ErrorKind::InvalidInput, "tuple (" + to_string(t) + ") not in basis");
    return static_cast<std::size_t>(it - basis.begin());
  };
  return so.compare(a.y, find(a.tuple), b.y, find(b.tuple));
}

struct ModuleLeading {
  Monomial y;
  std::size_t basis = 0;
  Poly coeff;  // element of Z[p]
};

inline ModuleLeading module_leading(const ModElem& v, const SchreyerOrder& so) {
  if (v.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading term of the zero module element");
  const auto& cs = v.coords();
  std::size_t best = 0;
  for (std::size_t q = 1; q < cs.size(); ++q)
    if (so.compare(cs[q].second.terms().front().y, cs[q].first, cs[best].second.terms().front().y, cs[best].first) > 0) best = q;
  const Poly& g = cs[best].second;
  const Monomial& m = g.terms().front().y;
  std::vector<Term> c;
  for (const Term& t : g.terms()) {
    if (!(t.y == m)) break;
    c.push_back({t.coeff, t.p, Monomial(m.size())});
  }
  return {m, cs[best].first, Poly::from_terms(std::move(c))};
}

struct SPair {
  ModElem value;
  Monomial m1, m2;  // value = m1*g1 - m2*g2
};

inline SPair module_spair(const ModElem& g1, const ModElem& g2, const SchreyerOrder& so) {
  const ModuleLeading a = module_leading(g1, so), b = module_leading(g2, so);
  if (!is_unit_one(a.coeff) || !is_unit_one(b.coeff)) throw Error(ErrorKind::NonMonicDivisor, "S-pair of non-monic elements");
  if (a.basis != b.basis) return {{}, {}, {}};
  const Monomial L = lcm(a.y, b.y);
  SPair s;
  s.m1 = quotient(L, a.y);
  s.m2 = quotient(L, b.y);
  const std::size_t n = g1.coords().front().second.terms().front().p.size();
  s.value.add_scaled(g1, Poly::term(1, Monomial(n), s.m1));
  s.value.add_scaled(g2, Poly::term(-1, Monomial(n), s.m2));
  return s;
}

// Leading data of a monic family, indexed for the maximal-index divisor search.
class DivisorIndex {
 public:
  DivisorIndex(const std::vector<ModElem>& G, const SchreyerOrder& so) : by_basis_(so.size()) {
    for (std::size_t q = 0; q < G.size(); ++q) {
      const ModuleLeading l = module_leading(G[q], so);
      if (!is_unit_one(l.coeff)) throw Error(ErrorKind::NonMonicDivisor, "family element " + std::to_string(q + 1) + " is not monic");
      by_basis_.at(l.basis).push_back({q, l.y});
    }
    for (auto& v : by_basis_) std::reverse(v.begin(), v.end());
  }

  std::optional<std::pair<std::size_t, Monomial>> find(const Monomial& m, std::size_t basis) const {
    for (const auto& [q, y] : by_basis_[basis])
      if (divides(y, m)) return std::make_pair(q, quotient(m, y));
    return std::nullopt;
  }

 private:
  std::vector<std::vector<std::pair<std::size_t, Monomial>>> by_basis_;
};

struct ModuleDivision {
  std::vector<Poly> quotients;
  ModElem remainder;
  bool binomial_closure = true;
};

inline ModuleDivision module_divide(const ModElem& v, const std::vector<ModElem>& G, const SchreyerOrder& so,
                                    const DivisorIndex& idx) {
  ModuleDivision res;
  res.quotients.resize(G.size());
  ModElem h = v;
  while (!h.is_zero()) {
    const ModuleLeading l = module_leading(h, so);
    if (!is_signed_p_monomial(l.coeff)) res.binomial_closure = false;
    if (const auto hit = idx.find(l.y, l.basis)) {
      const Poly q = l.coeff.mul_term(1, Monomial(), hit->second);
      res.quotients[hit->first] += q;
      h.add_scaled(G[hit->first], -q);
    } else {
      const ModElem t = ModElem::basis(l.basis, l.coeff.mul_term(1, Monomial(), l.y));
      res.remainder = res.remainder + t;
      h = h - t;
    }
  }
  return res;
}

inline ModuleDivision module_divide(const ModElem& v, const std::vector<ModElem>& G, const SchreyerOrder& so) {
  return module_divide(v, G, so, DivisorIndex(G, so));
}

// Stages 1..L of the syzygy tower. families[s] are elements of the free module on tuples[s-1].
struct SyzygyTower {
  std::size_t M = 0, n = 0;
  std::vector<LatticeVec> H;
  std::vector<std::vector<BasisTuple>> tuples;  // tuples[0] = {()}
  std::vector<std::vector<ModElem>> families;   // families[0] unused
  std::vector<SchreyerOrder> orders;            // orders[s] lives on the module with basis tuples[s]
  bool binomial_closure = true;
  bool complete = false;

  std::size_t top() const { return families.size() - 1; }

  std::size_t index_of(std::size_t s, const BasisTuple& t) const {
    const auto& b = tuples.at(s);
    auto it = std::lower_bound(b.begin(), b.end(), t);
    if (it == b.end() || *it != t) throw Error(ErrorKind::Internal, "tuple (" + to_string(t) + ") missing from stage " + std::to_string(s));
    return static_cast<std::size_t>(it - b.begin());
  }
};

namespace detail {

inline SchreyerOrder induced_order(const SyzygyTower& T, std::size_t s) {
  SchreyerOrder so;
  so.stage = s;
  const SchreyerOrder& below = T.orders.at(s - 1);
  for (const ModElem& g : T.families.at(s)) {
    const ModuleLeading l = module_leading(g, below);
    so.chain_mono.push_back(l.y * below.chain_mono[l.basis]);
    auto ci = below.chain_idx[l.basis];
    ci.push_back(so.chain_mono.size() - 1);
    so.chain_idx.push_back(std::move(ci));
  }
  return so;
}

}  // namespace detail

inline SyzygyTower start_tower(const Presentation& P) {
  if (P.kind == SupportKind::HalfLine || P.kind == SupportKind::Line)
    throw Error(ErrorKind::UnsupportedSupport, "syzygy towers need a cone or half-plane support");
  SyzygyTower T;
  T.M = P.M();
  T.n = P.n;
  T.H = P.H;
  T.tuples.push_back({BasisTuple{}});
  T.families.emplace_back();
  T.orders.push_back(SchreyerOrder::trivial());
  std::vector<BasisTuple> pairs;
  std::vector<ModElem> rels;
  for (const Relation& r : P.relations) {
    pairs.push_back({r.i, r.j});
    rels.push_back(ModElem::from_poly(r.poly));
  }
  T.tuples.push_back(std::move(pairs));
  T.families.push_back(std::move(rels));
  T.orders.push_back(detail::induced_order(T, 1));
  T.complete = T.families[1].empty();
  return T;
}

// Appends stage top()+1; returns false when no admissible tuple remains.
inline bool build_stage_next(SyzygyTower& T) {
  const std::size_t s = T.top();
  if (T.complete) return false;
  std::vector<BasisTuple> next = enumerate_admissible(T.M, s);
  if (next.empty()) {
    T.complete = true;
    return false;
  }
  const std::vector<ModElem>& fam = T.families[s];
  const SchreyerOrder& below = T.orders[s - 1];
  const DivisorIndex idx(fam, below);
  std::vector<ModElem> elems;
  elems.reserve(next.size());
  for (const BasisTuple& t : next) {
    BasisTuple A(t.begin(), t.end() - 1), B;
    if (s == 1) {
      const std::size_t i = t[0], j = t[1], k = t[2];
      B = j < k ? BasisTuple{i, k} : BasisTuple{k, j};
    } else {
      B = A;
      B.back() = t.back();
    }
    const std::size_t a = T.index_of(s, A), b = T.index_of(s, B);
    const SPair sp = module_spair(fam[a], fam[b], below);
    Monomial want = Monomial::var(T.M, t.back() - 1);
    if (!(sp.m1 == want)) throw Error(ErrorKind::Internal, "unexpected S-pair multiplier for (" + to_string(t) + ")");
    const ModuleDivision d = module_divide(sp.value, fam, below, idx);
    if (!d.remainder.is_zero()) throw Error(ErrorKind::Internal, "S-pair of (" + to_string(t) + ") does not reduce to zero");
    if (!d.binomial_closure) T.binomial_closure = false;
    ModElem e = ModElem::basis(a, Poly::term(1, Monomial(T.n), sp.m1));
    e.add(b, Poly::term(-1, Monomial(T.n), sp.m2));
    for (std::size_t q = 0; q < d.quotients.size(); ++q)
      if (!d.quotients[q].is_zero()) e.add(q, -d.quotients[q]);
    elems.push_back(std::move(e));
  }
  T.tuples.push_back(std::move(next));
  T.families.push_back(std::move(elems));
  T.orders.push_back(detail::induced_order(T, s + 1));
  // leading term Y_last * e_prefix, coefficient 1
  const SchreyerOrder& own = T.orders[s];
  for (std::size_t q = 0; q < T.families[s + 1].size(); ++q) {
    const BasisTuple& t = T.tuples[s + 1][q];
    const ModuleLeading l = module_leading(T.families[s + 1][q], own);
    const BasisTuple prefix(t.begin(), t.end() - 1);
    if (!is_unit_one(l.coeff) || !(l.y == Monomial::var(T.M, t.back() - 1)) || l.basis != T.index_of(s, prefix))
      throw Error(ErrorKind::Internal, "leading term of (" + to_string(t) + ") is not Y_" + std::to_string(t.back()) + " e_(" +
                                           to_string(prefix) + ")");
  }
  return true;
}

inline SyzygyTower build_stage2(const Presentation& P) {
  SyzygyTower T = start_tower(P);
  build_stage_next(T);
  return T;
}

inline SyzygyTower build_tower(const Presentation& P) {
  SyzygyTower T = start_tower(P);
  while (build_stage_next(T)) {
  }
  return T;
}

// Every S-pair within the stage family reduces to zero (pairs with distinct leading basis vanish).
inline ValidationReport verify_stage_groebner(const SyzygyTower& T, std::size_t s) {
  ValidationReport rep;
  const auto& fam = T.families.at(s);
  const SchreyerOrder& below = T.orders.at(s - 1);
  const DivisorIndex idx(fam, below);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t q = 0; q < fam.size(); ++q) groups[module_leading(fam[q], below).basis].push_back(q);
  std::size_t pairs = 0;
  bool ok = true;
  for (const auto& [basis, members] : groups)
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        ++pairs;
        const SPair sp = module_spair(fam[members[x]], fam[members[y]], below);
        if (!module_divide(sp.value, fam, below, idx).remainder.is_zero()) ok = false;
      }
  rep.add("stage " + std::to_string(s) + " Groebner property", ok, std::to_string(pairs) + " nontrivial S-pairs");
  return rep;
}

// Image of a stage-s element under the previous map: sum of coord * generator.
inline ModElem apply_previous(const SyzygyTower& T, std::size_t s, const ModElem& v) {
  ModElem out;
  for (const auto& [b, c] : v.coords()) out.add_scaled(T.families.at(s - 1).at(b), c);
  return out;
}

inline std::string render(const ModElem& v, const std::vector<BasisTuple>& basis, const RenderStyle& st = {}) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : v.coords()) {
    std::string label = "e" + to_string(basis.at(b));
    std::string body = render(c, st);
    if (c.size() == 1) {
      const bool neg = body[0] == '-';
      if (neg) body = body.substr(1);
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      out += (body == "1" ? "" : body + "*") + label;
    } else {
      out += (first ? "" : " + ") + ("(" + body + ")*" + label);
    }
    first = false;
  }
  return out;
}

}  // namespace fanres
