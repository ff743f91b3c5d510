#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "checked.hpp"
#include "error.hpp"

namespace fanres {

struct LatticeVec {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(const LatticeVec&, const LatticeVec&) = default;
  friend constexpr auto operator<=>(const LatticeVec&, const LatticeVec&) = default;
};

inline LatticeVec operator+(LatticeVec a, LatticeVec b) {
  return {checked::add(a.x, b.x), checked::add(a.y, b.y)};
}
inline LatticeVec operator-(LatticeVec a, LatticeVec b) {
  return {checked::sub(a.x, b.x), checked::sub(a.y, b.y)};
}
inline LatticeVec operator-(LatticeVec a) { return {checked::neg(a.x), checked::neg(a.y)}; }
inline LatticeVec operator*(std::int64_t s, LatticeVec a) {
  return {checked::mul(s, a.x), checked::mul(s, a.y)};
}

inline std::string to_string(LatticeVec v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}
inline std::ostream& operator<<(std::ostream& os, LatticeVec v) { return os << to_string(v); }

inline bool is_zero(LatticeVec v) { return v.x == 0 && v.y == 0; }

// u.x*v.y - u.y*v.x
inline std::int64_t det2(LatticeVec u, LatticeVec v) {
  return checked::sub(checked::mul(u.x, v.y), checked::mul(u.y, v.x));
}

inline std::int64_t dot(LatticeVec u, LatticeVec v) {
  return checked::add(checked::mul(u.x, v.x), checked::mul(u.y, v.y));
}

inline std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
  return std::gcd(checked::abs(a), checked::abs(b));
}

inline bool is_primitive(LatticeVec v) { return gcd_abs(v.x, v.y) == 1; }

inline LatticeVec primitive(LatticeVec v) {
  if (is_zero(v)) throw Error(ErrorKind::ZeroVector, "primitive of the zero vector");
  const std::int64_t g = gcd_abs(v.x, v.y);
  return {v.x / g, v.y / g};
}

// True iff b comes strictly after a in clockwise order (within a half-turn).
inline bool clockwise_before(LatticeVec a, LatticeVec b) { return det2(b, a) > 0; }

struct ExtGcd {
  std::int64_t g;
  std::int64_t s;
  std::int64_t t;
};

// a*s + b*t = g with g = gcd(|a|,|b|) >= 0.
inline ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = checked::sub(r0, checked::mul(q, r1));
    r0 = r1;
    r1 = tmp;
    tmp = checked::sub(s0, checked::mul(q, s1));
    s0 = s1;
    s1 = tmp;
    tmp = checked::sub(t0, checked::mul(q, t1));
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) return {checked::neg(r0), checked::neg(s0), checked::neg(t0)};
  return {r0, s0, t0};
}

// Canonical (u,v) with det2((u,v), w) = 1: minimal |u|+|v|, then u >= 0, then larger u.
inline LatticeVec bezout_complement(LatticeVec w) {
  if (!is_primitive(w)) throw Error(ErrorKind::NonPrimitive, "bezout_complement needs a primitive vector, got " + to_string(w));
  // u*w.y + v'*w.x = 1, v = -v'
  const ExtGcd e = ext_gcd(w.y, w.x);
  const std::int64_t u0 = e.s;
  const std::int64_t v0 = checked::neg(e.t);
  // general solution: (u0 + t*w.x, v0 + t*w.y)
  auto floor_div = [](std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  std::vector<std::int64_t> breaks;
  if (w.x != 0) breaks.push_back(floor_div(checked::neg(u0), w.x));
  if (w.y != 0) breaks.push_back(floor_div(checked::neg(v0), w.y));
  const std::int64_t lo = *std::min_element(breaks.begin(), breaks.end()) - 2;
  const std::int64_t hi = *std::max_element(breaks.begin(), breaks.end()) + 3;
  LatticeVec best{};
  bool have = false;
  auto key = [](LatticeVec c) {
    return std::tuple{checked::add(checked::abs(c.x), checked::abs(c.y)), c.x < 0 ? 1 : 0, checked::neg(c.x)};
  };
  for (std::int64_t t = lo; t <= hi; ++t) {
    const LatticeVec c{checked::add(u0, checked::mul(t, w.x)), checked::add(v0, checked::mul(t, w.y))};
    if (!have || key(c) < key(best)) {
      best = c;
      have = true;
    }
  }
  return best;
}

// v = (lambda_num/den)*a + (mu_num/den)*b, den > 0.
struct ConeCoords {
  std::int64_t lambda_num;
  std::int64_t mu_num;
  std::int64_t den;
};

inline ConeCoords cone_coordinates(LatticeVec v, LatticeVec a, LatticeVec b) {
  std::int64_t d = det2(a, b);
  if (d == 0) throw Error(ErrorKind::DegenerateCone, "collinear generators " + to_string(a) + ", " + to_string(b));
  std::int64_t l = det2(v, b);
  std::int64_t m = det2(a, v);
  if (d < 0) {
    d = checked::neg(d);
    l = checked::neg(l);
    m = checked::neg(m);
  }
  return {l, m, d};
}

inline bool in_closed_cone(LatticeVec v, LatticeVec r1, LatticeVec r2) {
  const ConeCoords c = cone_coordinates(v, r1, r2);
  return c.lambda_num >= 0 && c.mu_num >= 0;
}

inline bool in_open_parallelogram(LatticeVec v, LatticeVec a, LatticeVec b) {
  const ConeCoords c = cone_coordinates(v, a, b);
  return c.lambda_num > 0 && c.lambda_num < c.den && c.mu_num > 0 && c.mu_num < c.den;
}

// Ceiling of a/b for b > 0.
inline std::int64_t ceil_div_pos(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

}  // namespace fanres
