#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "fan.hpp"
#include "hilbert.hpp"
#include "lattice2d.hpp"
#include "poly_io.hpp"
#include "polyring.hpp"
#include "presentation.hpp"
#include "report.hpp"

// Brute-force cross-checks. Nothing here calls the Hilbert recursion, the relation builder or Fan::locate.
namespace fanres::oracle {

struct SpecializationPoint {
  std::vector<std::int64_t> p_values;
  std::optional<std::vector<std::int64_t>> y_values;
  std::uint64_t seed = 0;
};

inline SpecializationPoint random_point(std::size_t n, std::size_t M, std::uint64_t seed, std::int64_t bound = 10000) {
  if (bound < 1) throw Error(ErrorKind::NonPositiveInput, "sampling bound must be positive");
  SpecializationPoint pt;
  pt.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(1, bound);
  std::bernoulli_distribution sign(0.5);
  auto draw = [&] { return sign(rng) ? dist(rng) : -dist(rng); };
  for (std::size_t k = 0; k < n; ++k) pt.p_values.push_back(draw());
  std::vector<std::int64_t> ys;
  for (std::size_t k = 0; k < M; ++k) ys.push_back(draw());
  pt.y_values = std::move(ys);
  return pt;
}

// f(v) by scanning every cone.
inline std::vector<std::int64_t> brute_eval(const Fan& fan, const FanLinearFamily& fam, LatticeVec v) {
  const auto& R = fan.rays();
  for (std::size_t c = 0; c + 1 < R.size(); ++c) {
    const bool inside = fan.kind() == SupportKind::HalfPlane && det2(R[c + 1], R[c]) == 0
                            ? det2(R[c + 1], v) <= 0 && det2(v, R[c]) <= 0
                            : in_closed_cone(v, R[c], R[c + 1]);
    if (!inside) continue;
    std::vector<std::int64_t> out;
    for (const auto& fk : fam.forms) out.push_back(fk[c](v));
    return out;
  }
  if (fan.degenerate())
    for (std::size_t c = 0; c < R.size(); ++c)
      if (det2(R[c], v) == 0 && dot(R[c], v) >= 0) {
        std::vector<std::int64_t> out;
        for (const auto& fk : fam.forms) out.push_back(fk[c](v));
        return out;
      }
  throw Error(ErrorKind::OutsideSupport, to_string(v) + " lies outside the support");
}

// Union of per-cone brute-force bases, clockwise.
inline std::vector<LatticeVec> brute_generators(const Fan& fan) {
  if (fan.degenerate()) return fan.rays();
  std::vector<LatticeVec> H;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    const auto [a, b] = fan.cone(c);
    const HilbertBasis h = brute_force_hilbert(a, b);
    for (std::size_t k = (c == 0 ? 0 : 1); k < h.size(); ++k) H.push_back(h.elements[k]);
  }
  return H;
}

struct KernelOracleResult {
  std::vector<Poly> binomials;  // every coprime kernel binomial with leading monomial of degree <= bound
  std::vector<Poly> reduced;    // minimal leading monomial, standard tail
  ValidationReport report;
};

namespace detail {

inline void monomials_up_to(std::size_t M, std::int32_t deg, std::size_t k, Monomial& cur, std::vector<Monomial>& out) {
  if (k == M) {
    out.push_back(cur);
    return;
  }
  for (std::int32_t e = 0; e <= deg; ++e) {
    cur.e[k] = e;
    monomials_up_to(M, deg - e, k + 1, cur, out);
  }
  cur.e[k] = 0;
}

// All exponent vectors e with sum e_k H_k = target; ell > 0 on H bounds the search, or cap bounds the degree.
inline void fiber(const std::vector<LatticeVec>& H, const std::vector<std::int64_t>& ell, std::optional<std::int32_t> cap, std::size_t k,
                  LatticeVec rem, std::int32_t used, Monomial& cur, std::vector<Monomial>& out) {
  if (k == H.size()) {
    if (rem == LatticeVec{0, 0}) out.push_back(cur);
    return;
  }
  std::int32_t hi;
  if (cap) {
    hi = *cap - used;
  } else {
    const std::int64_t budget = det2(rem, H.front()) + det2(H.back(), rem);
    if (budget < 0) return;
    hi = static_cast<std::int32_t>(budget / ell[k]);
  }
  for (std::int32_t e = 0; e <= hi; ++e) {
    cur.e[k] = e;
    fiber(H, ell, cap, k + 1, rem - static_cast<std::int64_t>(e) * H[k], used + e, cur, out);
  }
  cur.e[k] = 0;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a.e[k] && b.e[k]) return false;
  return true;
}

}  // namespace detail

inline KernelOracleResult kernel_oracle(const Presentation& P, const Fan& fan, const FanLinearFamily& fam, int degree_bound = 3) {
  if (degree_bound > 4) throw Error(ErrorKind::BudgetExceeded, "degree bound " + std::to_string(degree_bound) + " exceeds 4");
  if (degree_bound < 1) throw Error(ErrorKind::NonPositiveInput, "degree bound must be positive");
  KernelOracleResult out;
  const std::size_t M = P.M(), n = P.n;

  const std::vector<LatticeVec> Hb = brute_generators(fan);
  out.report.add("generators match brute force", Hb == P.H, std::to_string(Hb.size()) + " brute-force generators");
  std::vector<std::vector<std::int64_t>> F;
  bool f_ok = true;
  for (std::size_t k = 0; k < M; ++k) {
    F.push_back(brute_eval(fan, fam, P.H[k]));
    if (k < P.generators.size() && F.back() != P.generators[k].f) f_ok = false;
  }
  out.report.add("generator p-exponents match brute force", f_ok);

  const bool pointed = P.kind == SupportKind::Cone && M >= 2;
  std::vector<std::int64_t> ell;
  if (pointed)
    for (LatticeVec v : P.H) ell.push_back(det2(v, P.H.front()) + det2(P.H.back(), v));
  std::optional<std::int32_t> cap;
  if (!pointed) cap = 2 * degree_bound;

  std::vector<Monomial> lead;
  Monomial cur(M);
  detail::monomials_up_to(M, degree_bound, 0, cur, lead);
  const YOrder ord;
  auto pexp = [&](const Monomial& m) {
    std::vector<std::int64_t> s(n, 0);
    for (std::size_t k = 0; k < M; ++k)
      for (std::size_t q = 0; q < n; ++q) s[q] += m.e[k] * F[k][q];
    return s;
  };
  for (const Monomial& m1 : lead) {
    if (m1.is_one()) continue;
    std::vector<Monomial> fib;
    Monomial c2(M);
    detail::fiber(P.H, ell, cap, 0, zz_degree(m1, P.H), 0, c2, fib);
    const auto F1 = pexp(m1);
    for (const Monomial& m2 : fib) {
      if (ord.compare(m2, m1) >= 0 || !detail::coprime(m1, m2)) continue;
      const auto F2 = pexp(m2);
      Monomial g1(n), g2(n);
      for (std::size_t q = 0; q < n; ++q) {
        const std::int64_t e = std::max(F1[q], F2[q]);
        g1.e[q] = static_cast<std::int32_t>(e - F1[q]);
        g2.e[q] = static_cast<std::int32_t>(e - F2[q]);
      }
      Poly b = Poly::term(1, g1, m1) - Poly::term(1, g2, m2);
      if (P.specialization) b = specialize(b, *P.specialization);
      if (!b.is_zero()) out.binomials.push_back(std::move(b));
    }
  }

  const std::vector<Poly> G = P.polys();
  std::size_t bad = 0;
  std::string first_bad;
  for (const Poly& b : out.binomials)
    if (!divide(b, G).remainder.is_zero() && bad++ == 0) first_bad = render(b);
  out.report.add("kernel binomials reduce to zero", bad == 0,
                 std::to_string(out.binomials.size()) + " binomials" + (bad ? ", first failure " + first_bad : ""));

  std::vector<Monomial> lms;
  for (const Poly& b : out.binomials)
    if (is_unit_one(lc(b))) lms.push_back(lm(b));
  for (const Poly& b : out.binomials) {
    if (!is_unit_one(lc(b))) continue;
    const Monomial m = lm(b);
    bool minimal = true, standard = true;
    for (std::size_t r = 0; r < lms.size() && minimal; ++r)
      if (lms[r] != m && divides(lms[r], m)) minimal = false;
    for (const Term& t : b.terms())
      for (std::size_t r = 0; r < lms.size() && standard; ++r)
        if (t.y != m && divides(lms[r], t.y)) standard = false;
    if (minimal && standard) out.reduced.push_back(b);
  }
  if (degree_bound >= 2 && P.kind == SupportKind::Cone) {
    auto key = [](const std::vector<Poly>& v) {
      std::vector<std::string> s;
      for (const Poly& g : v) s.push_back(render(g));
      std::sort(s.begin(), s.end());
      return s;
    };
    out.report.add("reduced kernel binomials equal the relations", key(out.reduced) == key(G),
                   std::to_string(out.reduced.size()) + " vs " + std::to_string(G.size()));
  }
  return out;
}

// lhs == sum a_i * b_i after expansion.
inline bool identity_check(const Poly& lhs, const std::vector<std::pair<Poly, Poly>>& combination) {
  Poly rhs;
  for (const auto& [a, b] : combination) rhs += a * b;
  return (lhs - rhs).is_zero();
}

struct ConjectureReport {
  ValidationReport report;
  std::size_t n = 0, M = 0;
  std::vector<LatticeVec> H;
  Poly element;
  std::string ours;   // Y/p labeling
  std::string x_labeling;  // x_1..x_{n+4} labeling
};

inline ConjectureReport conjecture_refutation(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::NonPositiveInput, "conjecture refutation needs n >= 2");
  ConjectureReport r;
  r.n = static_cast<std::size_t>(n);
  const LatticeVec mid{n + 1, n};
  const Fan fan = Fan::make({{0, 1}, mid, {1, 0}}, SupportKind::Cone);
  FanLinearFamily fam;
  fam.forms.push_back({LinearForm{0, n + 1}, LinearForm{n, 0}});
  const Presentation P = presentation_ideal(fan, fam);
  r.M = P.M();
  r.H = P.H;
  r.report.add("M = n + 3", r.M == r.n + 3, "M = " + std::to_string(r.M));
  auto index_of = [&](LatticeVec v) -> std::size_t {
    auto it = std::find(P.H.begin(), P.H.end(), v);
    if (it == P.H.end()) throw Error(ErrorKind::Internal, to_string(v) + " missing from the generators");
    return static_cast<std::size_t>(it - P.H.begin()) + 1;
  };
  const std::size_t a = index_of({0, 1}), b = index_of({2, 1}), c = index_of({1, 1});
  Monomial pe(1);
  pe.e[0] = static_cast<std::int32_t>(n - 1);
  r.element = Poly::y_var(a, 1, r.M) * Poly::y_var(b, 1, r.M) - Poly::term(1, pe, Monomial::var(r.M, c - 1, 2));
  r.ours = render(r.element);
  r.x_labeling = "x1*x4 - x3^2*x" + std::to_string(n + 4) + (n - 1 == 1 ? "" : "^" + std::to_string(n - 1));
  bool present = false;
  for (const Relation& rel : P.relations) present = present || rel.poly == r.element;
  r.report.add("generator present", present, r.ours);
  LaurentElement img;
  for (const Term& t : r.element.terms()) {
    std::int64_t pe_sum = t.p.e[0];
    for (std::size_t k = 0; k < r.M; ++k) pe_sum += t.y.e[k] * brute_eval(fan, fam, P.H[k])[0];
    Monomial pm(1);
    pm.e[0] = static_cast<std::int32_t>(pe_sum);
    img.add(pm, zz_degree(t.y, P.H), t.coeff);
  }
  r.report.add("element in kernel", img.is_zero());
  std::int32_t top = 0;
  for (const Term& t : r.element.terms()) top = std::max(top, t.p.e[0]);
  r.report.add("p-exponent n - 1", top == n - 1, "p^" + std::to_string(top));
  return r;
}

}  // namespace fanres::oracle
