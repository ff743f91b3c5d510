#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "error.hpp"
#include "lattice2d.hpp"
#include "report.hpp"

namespace fanres {

struct HilbertBasis {
  std::vector<LatticeVec> elements;  // clockwise

  LatticeVec ray_first() const { return elements.front(); }
  LatticeVec ray_last() const { return elements.back(); }
  std::size_t size() const { return elements.size(); }
};

namespace detail {

// Primitive generators ordered so that det2(last, first) > 0.
inline std::pair<LatticeVec, LatticeVec> oriented_rays(LatticeVec r1, LatticeVec r2) {
  const LatticeVec a = primitive(r1);
  const LatticeVec b = primitive(r2);
  const std::int64_t d = det2(a, b);
  if (d == 0) {
    if (a == b) throw Error(ErrorKind::DegenerateCone, "cone spanned by a single ray " + to_string(a));
    throw Error(ErrorKind::NotStronglyConvex, "opposite rays " + to_string(a) + ", " + to_string(b));
  }
  if (det2(b, a) > 0) return {a, b};
  return {b, a};
}

inline void sort_clockwise(std::vector<LatticeVec>& v) {
  std::sort(v.begin(), v.end(), [](LatticeVec a, LatticeVec b) { return clockwise_before(a, b); });
}

}  // namespace detail

inline HilbertBasis hilbert_basis(LatticeVec r1, LatticeVec r2) {
  const auto [first, last] = detail::oriented_rays(r1, r2);
  HilbertBasis h;
  h.elements.push_back(first);
  LatticeVec cur = first;
  std::int64_t beta = det2(last, cur);
  while (beta != 1) {
    const LatticeVec uv = bezout_complement(cur);
    // last = alpha*cur + beta*uv
    const std::int64_t alpha = det2(uv, last);
    const LatticeVec next = uv + ceil_div_pos(alpha, beta) * cur;
    const std::int64_t nb = det2(last, next);
    if (nb < 1 || nb >= beta) throw Error(ErrorKind::Internal, "Hilbert basis loop: determinant did not decrease");
    h.elements.push_back(next);
    cur = next;
    beta = nb;
  }
  h.elements.push_back(last);
  return h;
}

struct BruteForceOptions {
  std::int64_t max_points = 1'000'000;
};

inline HilbertBasis brute_force_hilbert(LatticeVec r1, LatticeVec r2, BruteForceOptions opt = {}) {
  const auto [first, last] = detail::oriented_rays(r1, r2);
  const std::int64_t d = det2(last, first);
  if (d > opt.max_points) throw Error(ErrorKind::BudgetExceeded, "fundamental parallelogram holds " + std::to_string(d) + " points");
  const LatticeVec s = first + last;
  const std::int64_t x0 = std::min({std::int64_t{0}, first.x, last.x, s.x});
  const std::int64_t x1 = std::max({std::int64_t{0}, first.x, last.x, s.x});
  const std::int64_t y0 = std::min({std::int64_t{0}, first.y, last.y, s.y});
  const std::int64_t y1 = std::max({std::int64_t{0}, first.y, last.y, s.y});
  if ((x1 - x0 + 1) > 64 * opt.max_points / std::max<std::int64_t>(1, y1 - y0 + 1))
    throw Error(ErrorKind::BudgetExceeded, "bounding box of the fundamental parallelogram too large");

  struct Pt {
    std::int64_t l, m;
    LatticeVec v;
  };
  std::vector<Pt> pts;
  for (std::int64_t x = x0; x <= x1; ++x) {
    for (std::int64_t y = y0; y <= y1; ++y) {
      const LatticeVec v{x, y};
      if (is_zero(v)) continue;
      const ConeCoords c = cone_coordinates(v, first, last);
      if (c.lambda_num >= 0 && c.lambda_num < c.den && c.mu_num >= 0 && c.mu_num < c.den)
        pts.push_back({c.lambda_num, c.mu_num, v});
    }
  }
  // p = a + b with a, b nonzero in the monoid iff some other point a dominates p from below in (lambda, mu).
  std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return std::tie(a.l, a.m) < std::tie(b.l, b.m); });
  HilbertBasis h;
  std::int64_t min_mu = std::numeric_limits<std::int64_t>::max();
  for (const Pt& p : pts) {
    if (min_mu > p.m) h.elements.push_back(p.v);
    min_mu = std::min(min_mu, p.m);
  }
  h.elements.push_back(first);
  h.elements.push_back(last);
  detail::sort_clockwise(h.elements);
  return h;
}

namespace detail {

// Is target an N-combination of gens (excluding index skip)? w must be positive on all gens.
inline bool in_monoid(LatticeVec target, const std::vector<LatticeVec>& gens, std::size_t skip,
                      LatticeVec w, std::size_t budget, bool& exhausted) {
  const std::int64_t bound = dot(w, target);
  std::set<LatticeVec> seen{LatticeVec{0, 0}};
  std::vector<LatticeVec> frontier{LatticeVec{0, 0}};
  while (!frontier.empty()) {
    std::vector<LatticeVec> next;
    for (LatticeVec p : frontier) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k == skip) continue;
        const LatticeVec q = p + gens[k];
        if (dot(w, q) > bound) continue;
        if (q == target) return true;
        if (seen.insert(q).second) next.push_back(q);
        if (seen.size() > budget) {
          exhausted = true;
          return false;
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace detail

inline ValidationReport validate_basis(const HilbertBasis& h, std::uint64_t seed = 2024) {
  ValidationReport rep;
  const auto& e = h.elements;
  if (e.size() < 2) {
    rep.add("size", false, "fewer than two elements");
    return rep;
  }
  const LatticeVec v1 = e.front();
  const LatticeVec vN = e.back();
  const std::int64_t D = det2(vN, v1);
  rep.add("rays primitive", is_primitive(v1) && is_primitive(vN));
  if (D <= 0) {
    rep.add("strongly convex clockwise cone", false, "det2(last, first) = " + std::to_string(D));
    return rep;
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      const std::int64_t d = det2(e[i + 1], e[i]);
      if (d != 1 && ok) {
        ok = false;
        detail = "det2(" + to_string(e[i + 1]) + ", " + to_string(e[i]) + ") = " + std::to_string(d);
      }
    }
    rep.add("consecutive determinants", ok, detail);
  }

  std::vector<ConeCoords> cc;
  for (LatticeVec v : e) cc.push_back(cone_coordinates(v, v1, vN));
  {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
      if (!(cc[i + 1].lambda_num < cc[i].lambda_num)) ok = false;
    rep.add("decreasing alpha-coordinates", ok);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i + 2 < e.size(); ++i) {
      if (!in_open_parallelogram(e[i + 1], e[i], vN) && ok) {
        ok = false;
        detail = to_string(e[i + 1]) + " outside parallelogram of " + to_string(e[i]) + ", " + to_string(vN);
      }
    }
    rep.add("open parallelogram containment", ok, detail);
  }
  // functional positive on the cone: x -> det2(x, v1) + det2(vN, x)
  const LatticeVec n1{v1.y, checked::neg(v1.x)};
  const LatticeVec n2{checked::neg(vN.y), vN.x};
  {
    const LatticeVec w = n1 + n2;
    bool ok = true;
    bool exhausted = false;
    std::string detail;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (detail::in_monoid(e[j], e, j, w, 200000, exhausted) && ok) {
        ok = false;
        detail = to_string(e[j]) + " is a combination of the others";
      }
    }
    if (exhausted && ok) detail = "search budget exhausted for some element";
    rep.add("minimal generation", ok && !exhausted, detail);
  }
  {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(1, 25);
    bool ok = true;
    for (int t = 0; t < 32; ++t) {
      const LatticeVec v = dist(rng) * n1 + dist(rng) * n2;
      const std::int64_t cap = std::max(dot(v, v1), dot(v, vN));
      for (LatticeVec x : e)
        if (dot(v, x) > cap) ok = false;
    }
    rep.add("functional bound", ok);
  }
  {
    bool ok = true;
    for (std::size_t j = 1; j + 1 < e.size(); ++j)
      if (checked::add(cc[j].lambda_num, cc[j].mu_num) > cc[j].den) ok = false;
    if (e.size() >= 3 && cc[1].mu_num != 1) ok = false;  // mu = 1/D for the second element
    rep.add("lambda+mu bound", ok);
  }
  return rep;
}

}  // namespace fanres
