#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "error.hpp"
#include "fan.hpp"
#include "lattice2d.hpp"

namespace fanres {

// Dense exponent vector; used for both the Y-block and the p-block.
struct Monomial {
  std::vector<std::int32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t n) : e(n, 0) {}
  explicit Monomial(std::vector<std::int32_t> v) : e(std::move(v)) {}

  static Monomial var(std::size_t n, std::size_t idx, std::int32_t pow = 1) {
    Monomial m(n);
    m.e.at(idx) = pow;
    return m;
  }

  std::size_t size() const { return e.size(); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
  }
  std::int64_t degree() const {
    std::int64_t d = 0;
    for (std::int32_t x : e) d += x;
    return d;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.e.empty()) return b;
  if (b.e.empty()) return a;
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "monomials of different arity");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e[i] = checked::add32(a.e[i], b.e[i]);
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.e.empty()) return true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.e[i] > b.e.at(i)) return false;
  return true;
}

// b / a, assuming divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  if (a.e.empty()) return b;
  Monomial r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r.e[i] = b.e[i] - a.e[i];
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e[i] = std::max(a.e[i], b.e.at(i));
  return r;
}

// Lex comparison read from the last variable downward: -1, 0, 1.
inline int lex_compare(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = n; k-- > 0;) {
    const std::int32_t x = k < a.size() ? a.e[k] : 0;
    const std::int32_t y = k < b.size() ? b.e[k] : 0;
    if (x != y) return x > y ? 1 : -1;
  }
  return 0;
}

// Compares a*b with c*d without forming the products.
inline int lex_compare_products(const Monomial& a, const Monomial& b, const Monomial& c, const Monomial& d) {
  const std::size_t n = std::max({a.size(), b.size(), c.size(), d.size()});
  auto at = [](const Monomial& m, std::size_t k) -> std::int64_t { return k < m.size() ? m.e[k] : 0; };
  for (std::size_t k = n; k-- > 0;) {
    const std::int64_t x = at(a, k) + at(b, k);
    const std::int64_t y = at(c, k) + at(d, k);
    if (x != y) return x > y ? 1 : -1;
  }
  return 0;
}

// Order on Y-monomials. rank[v] = clockwise position of variable v (0-based); empty means identity.
struct YOrder {
  std::vector<std::size_t> rank;

  int compare(const Monomial& a, const Monomial& b) const {
    if (rank.empty()) return lex_compare(a, b);
    std::vector<std::size_t> by_rank(rank.size());
    for (std::size_t v = 0; v < rank.size(); ++v) by_rank.at(rank[v]) = v;
    for (std::size_t r = by_rank.size(); r-- > 0;) {
      const std::size_t v = by_rank[r];
      if (a.e.at(v) != b.e.at(v)) return a.e[v] > b.e[v] ? 1 : -1;
    }
    return 0;
  }
};

inline int compare(const Monomial& a, const Monomial& b, const YOrder& ord = {}) { return ord.compare(a, b); }

struct Term {
  std::int64_t coeff = 0;
  Monomial p;
  Monomial y;

  friend bool operator==(const Term&, const Term&) = default;
};

// Canonical storage order: Y-monomial descending in lex, then p-monomial descending.
inline bool term_before(const Term& a, const Term& b) {
  const int c = lex_compare(a.y, b.y);
  if (c != 0) return c > 0;
  return lex_compare(a.p, b.p) > 0;
}

inline bool same_monomials(const Term& a, const Term& b) { return a.y == b.y && a.p == b.p; }

class Poly {
 public:
  Poly() = default;

  static Poly from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), term_before);
    Poly r;
    for (Term& t : ts) {
      if (!r.t_.empty() && same_monomials(r.t_.back(), t))
        r.t_.back().coeff = checked::add(r.t_.back().coeff, t.coeff);
      else
        r.t_.push_back(std::move(t));
      if (r.t_.back().coeff == 0) r.t_.pop_back();
    }
    return r;
  }

  static Poly term(std::int64_t c, Monomial p, Monomial y) {
    Poly r;
    if (c != 0) r.t_.push_back({c, std::move(p), std::move(y)});
    return r;
  }

  static Poly constant(std::int64_t c, std::size_t n, std::size_t M) { return term(c, Monomial(n), Monomial(M)); }

  // Y_idx with idx 1-based.
  static Poly y_var(std::size_t idx, std::size_t n, std::size_t M, std::int32_t pow = 1) {
    return term(1, Monomial(n), Monomial::var(M, idx - 1, pow));
  }

  static Poly p_var(std::size_t idx, std::size_t n, std::size_t M, std::int32_t pow = 1) {
    return term(1, Monomial::var(n, idx - 1, pow), Monomial(M));
  }

  bool is_zero() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }

  friend bool operator==(const Poly&, const Poly&) = default;

  Poly operator-() const {
    Poly r = *this;
    for (Term& t : r.t_) t.coeff = checked::neg(t.coeff);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, 1); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, -1); }

  Poly& operator+=(const Poly& o) { return *this = merge(*this, o, 1); }
  Poly& operator-=(const Poly& o) { return *this = merge(*this, o, -1); }

  // Multiplication by a single term keeps the canonical order.
  Poly mul_term(std::int64_t c, const Monomial& p, const Monomial& y) const {
    Poly r;
    if (c == 0) return r;
    r.t_.reserve(t_.size());
    for (const Term& t : t_) r.t_.push_back({checked::mul(c, t.coeff), t.p * p, t.y * y});
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.size() == 1) return a.mul_term(b.t_[0].coeff, b.t_[0].p, b.t_[0].y);
    if (a.size() == 1) return b.mul_term(a.t_[0].coeff, a.t_[0].p, a.t_[0].y);
    std::vector<Term> ts;
    ts.reserve(a.size() * b.size());
    for (const Term& x : a.t_)
      for (const Term& y : b.t_) ts.push_back({checked::mul(x.coeff, y.coeff), x.p * y.p, x.y * y.y});
    return from_terms(std::move(ts));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

 private:
  static Poly merge(const Poly& a, const Poly& b, std::int64_t sign) {
    Poly r;
    r.t_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && term_before(a.t_[i], b.t_[j]))) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.size() || term_before(b.t_[j], a.t_[i])) {
        Term t = b.t_[j++];
        if (sign < 0) t.coeff = checked::neg(t.coeff);
        r.t_.push_back(std::move(t));
      } else {
        const std::int64_t c = sign < 0 ? checked::sub(a.t_[i].coeff, b.t_[j].coeff) : checked::add(a.t_[i].coeff, b.t_[j].coeff);
        if (c != 0) r.t_.push_back({c, a.t_[i].p, a.t_[i].y});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> t_;
};

// Leading Y-monomial and its full coefficient in Z[p] (a Poly with trivial Y-part).
struct Leading {
  Monomial lm;
  Poly lc;
};

inline Leading leading(const Poly& g, const YOrder& ord = {}) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading data of the zero polynomial");
  const auto& ts = g.terms();
  Monomial best = ts.front().y;
  if (!ord.rank.empty())
    for (const Term& t : ts)
      if (ord.compare(t.y, best) > 0) best = t.y;
  std::vector<Term> c;
  for (const Term& t : ts)
    if (t.y == best) c.push_back({t.coeff, t.p, Monomial(t.y.size())});
  return {best, Poly::from_terms(std::move(c))};
}

inline Monomial lm(const Poly& g, const YOrder& ord = {}) { return leading(g, ord).lm; }
inline Poly lc(const Poly& g, const YOrder& ord = {}) { return leading(g, ord).lc; }
inline Poly lt(const Poly& g, const YOrder& ord = {}) {
  Leading l = leading(g, ord);
  return l.lc.mul_term(1, Monomial(), l.lm);
}

// True iff c is the integer 1.
inline bool is_unit_one(const Poly& c) {
  return c.size() == 1 && c.terms()[0].coeff == 1 && c.terms()[0].p.is_one() && c.terms()[0].y.is_one();
}

// Coefficient of the form +-p^gamma.
inline bool is_signed_p_monomial(const Poly& c) {
  return c.size() == 1 && (c.terms()[0].coeff == 1 || c.terms()[0].coeff == -1);
}

// Terms of g whose Y-monomial is m, as a Poly in p times Y^m.
inline Poly terms_with_y(const Poly& g, const Monomial& m) {
  std::vector<Term> ts;
  for (const Term& t : g.terms())
    if (t.y == m) ts.push_back(t);
  return Poly::from_terms(std::move(ts));
}

struct DivisionResult {
  std::vector<Poly> quotients;
  Poly remainder;
  bool binomial_closure = true;  // every leading coefficient met was +-p^gamma
  std::size_t steps = 0;
};

inline DivisionResult divide(const Poly& g, const std::vector<Poly>& G, const YOrder& ord = {}) {
  std::vector<Monomial> lms;
  for (const Poly& d : G) {
    const Leading l = leading(d, ord);
    if (!is_unit_one(l.lc)) throw Error(ErrorKind::NonMonicDivisor, "divisor with non-unit leading coefficient");
    lms.push_back(l.lm);
  }
  DivisionResult res;
  res.quotients.resize(G.size());
  Poly h = g;
  while (!h.is_zero()) {
    ++res.steps;
    const Leading l = leading(h, ord);
    if (!is_signed_p_monomial(l.lc)) res.binomial_closure = false;
    std::optional<std::size_t> pick;
    for (std::size_t i = G.size(); i-- > 0;)
      if (divides(lms[i], l.lm)) {
        pick = i;
        break;
      }
    if (pick) {
      const Poly q = l.lc.mul_term(1, Monomial(), quotient(l.lm, lms[*pick]));
      res.quotients[*pick] += q;
      h -= q * G[*pick];
    } else {
      const Poly t = l.lc.mul_term(1, Monomial(), l.lm);
      res.remainder += t;
      h -= t;
    }
  }
  return res;
}

// g == sum q_i G_i + r with the leading-monomial bound.
inline bool check_division(const Poly& g, const std::vector<Poly>& G, const DivisionResult& r, const YOrder& ord = {}) {
  Poly s = r.remainder;
  for (std::size_t i = 0; i < G.size(); ++i) s += r.quotients[i] * G[i];
  if (!(s == g)) return false;
  if (g.is_zero()) return true;
  const Monomial top = lm(g, ord);
  for (std::size_t i = 0; i < G.size(); ++i)
    if (!r.quotients[i].is_zero() && ord.compare(lm(r.quotients[i], ord) * lm(G[i], ord), top) > 0) return false;
  if (!r.remainder.is_zero() && ord.compare(lm(r.remainder, ord), top) > 0) return false;
  for (const Term& t : r.remainder.terms())
    for (std::size_t i = 0; i < G.size(); ++i)
      if (divides(lm(G[i], ord), t.y)) return false;
  return true;
}

inline LatticeVec zz_degree(const Monomial& m, const std::vector<LatticeVec>& H) {
  LatticeVec d{0, 0};
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m.e[k] != 0) d = d + static_cast<std::int64_t>(m.e[k]) * H.at(k);
  return d;
}

// Common Z^2-degree of all terms, or nullopt when inhomogeneous (zero has every degree; returns (0,0)).
inline std::optional<LatticeVec> zz_degree(const Poly& g, const std::vector<LatticeVec>& H) {
  if (g.is_zero()) return LatticeVec{0, 0};
  const LatticeVec d = zz_degree(g.terms().front().y, H);
  for (const Term& t : g.terms())
    if (zz_degree(t.y, H) != d) return std::nullopt;
  return d;
}

// values[k] = nullopt keeps p_{k+1} symbolic.
using PValues = std::vector<std::optional<std::int64_t>>;

inline Poly specialize(const Poly& g, const PValues& values) {
  std::vector<Term> ts;
  for (const Term& t : g.terms()) {
    Term u = t;
    for (std::size_t k = 0; k < values.size() && k < u.p.size(); ++k)
      if (values[k]) {
        u.coeff = checked::mul(u.coeff, checked::pow(*values[k], u.p.e[k]));
        u.p.e[k] = 0;
      }
    ts.push_back(std::move(u));
  }
  return Poly::from_terms(std::move(ts));
}

// Substitutes p_k (1-based) by a polynomial in the p-block.
inline Poly substitute_p(const Poly& g, std::size_t k, const Poly& replacement) {
  Poly out;
  for (const Term& t : g.terms()) {
    Term base = t;
    const std::int32_t e = base.p.e.at(k - 1);
    base.p.e[k - 1] = 0;
    Poly piece = Poly::term(base.coeff, base.p, base.y);
    for (std::int32_t i = 0; i < e; ++i) piece *= replacement;
    out += piece;
  }
  return out;
}

// Element of Z[p][x1^+-1, x2^+-1]: (p-exponents, x-exponent) -> coefficient.
class LaurentElement {
 public:
  void add(const Monomial& p, LatticeVec x, std::int64_t c) {
    auto key = std::make_pair(p.e, x);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(std::move(key), c);
      return;
    }
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
  bool is_zero() const { return terms_.empty(); }
  const auto& terms() const { return terms_; }
  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

 private:
  std::map<std::pair<std::vector<std::int32_t>, LatticeVec>, std::int64_t> terms_;
};

// Y_v -> p^{f(v)} x^v.
inline LaurentElement phi0_eval(const Poly& g, const std::vector<LatticeVec>& H, const Fan& fan, const FanLinearFamily& fam) {
  std::vector<std::vector<std::int64_t>> fv;
  for (LatticeVec v : H) fv.push_back(eval_all(fam, fan, v));
  LaurentElement out;
  for (const Term& t : g.terms()) {
    Monomial p = t.p.e.empty() ? Monomial(fam.n()) : t.p;
    for (std::size_t k = 0; k < t.y.size(); ++k)
      for (std::size_t q = 0; q < fam.n(); ++q)
        p.e[q] = static_cast<std::int32_t>(checked::add(p.e[q], checked::mul(t.y.e[k], fv[k][q])));
    out.add(p, zz_degree(t.y, H), t.coeff);
  }
  return out;
}

}  // namespace fanres
