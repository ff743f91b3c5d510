#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "hilbert.hpp"
#include "lattice2d.hpp"
#include "report.hpp"

namespace fanres {

enum class SupportKind { Cone, HalfPlane, HalfLine, Line, Plane };

inline const char* to_string(SupportKind k) {
  switch (k) {
    case SupportKind::Cone: return "cone";
    case SupportKind::HalfPlane: return "half-plane";
    case SupportKind::HalfLine: return "half-line";
    case SupportKind::Line: return "line";
    case SupportKind::Plane: return "plane";
  }
  return "?";
}

inline SupportKind support_kind_from_string(const std::string& s) {
  if (s == "cone") return SupportKind::Cone;
  if (s == "half-plane") return SupportKind::HalfPlane;
  if (s == "half-line") return SupportKind::HalfLine;
  if (s == "line") return SupportKind::Line;
  if (s == "plane") return SupportKind::Plane;
  throw Error(ErrorKind::InvalidInput, "unknown support kind '" + s + "'");
}

inline Error plane_support_error() {
  return Error(ErrorKind::UnsupportedSupport,
               "fans whose support is the whole plane are not supported: their presentations need "
               "generators of degree three and p-divisible generators, outside the quadratic binomial setting");
}

struct LinearForm {
  std::int64_t c = 0;
  std::int64_t d = 0;

  std::int64_t operator()(LatticeVec v) const { return checked::add(checked::mul(c, v.x), checked::mul(d, v.y)); }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// rays clockwise; cone i is spanned by rays[i], rays[i+1].
class Fan {
 public:
  Fan() = default;

  static Fan make(std::vector<LatticeVec> rays, SupportKind kind) {
    Fan f;
    f.kind_ = kind;
    for (LatticeVec& r : rays) r = primitive(r);
    f.rays_ = std::move(rays);
    f.check();
    return f;
  }

  // Cone or half-plane, deduced from the end rays.
  static Fan make(std::vector<LatticeVec> rays) {
    if (rays.size() >= 2 && primitive(rays.back()) == -primitive(rays.front()))
      return make(std::move(rays), SupportKind::HalfPlane);
    return make(std::move(rays), SupportKind::Cone);
  }

  SupportKind kind() const { return kind_; }
  bool degenerate() const { return kind_ == SupportKind::HalfLine || kind_ == SupportKind::Line; }
  const std::vector<LatticeVec>& rays() const { return rays_; }

  // Number of pieces carrying a linear form: maximal cones, or rays for degenerate supports.
  std::size_t num_cones() const { return degenerate() ? rays_.size() : rays_.size() - 1; }
  std::size_t num_walls() const { return degenerate() ? 0 : rays_.size() - 2; }
  std::pair<LatticeVec, LatticeVec> cone(std::size_t i) const { return {rays_.at(i), rays_.at(i + 1)}; }

  bool contains(LatticeVec v) const {
    if (is_zero(v)) return true;
    if (degenerate()) {
      for (LatticeVec r : rays_)
        if (det2(r, v) == 0 && dot(r, v) > 0) return true;
      return false;
    }
    return det2(v, rays_.front()) >= 0 && det2(rays_.back(), v) >= 0;
  }

  // Index of the first cone containing v (clockwise binary search).
  std::size_t locate(LatticeVec v) const {
    if (!contains(v)) throw Error(ErrorKind::OutsideSupport, to_string(v) + " is outside the support");
    if (degenerate()) {
      for (std::size_t i = 0; i < rays_.size(); ++i)
        if (det2(rays_[i], v) == 0 && dot(rays_[i], v) >= 0) return i;
      return 0;
    }
    if (is_zero(v)) return 0;
    std::size_t lo = 1, hi = rays_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (det2(rays_[mid], v) >= 0)
        hi = mid;
      else
        lo = mid + 1;
    }
    return lo - 1;
  }

 private:
  void check() const {
    if (kind_ == SupportKind::Plane) throw plane_support_error();
    if (kind_ == SupportKind::HalfLine) {
      if (rays_.size() != 1) throw Error(ErrorKind::InvalidInput, "a half-line fan has exactly one ray");
      return;
    }
    if (kind_ == SupportKind::Line) {
      if (rays_.size() != 2 || rays_[1] != -rays_[0])
        throw Error(ErrorKind::InvalidInput, "a line fan has exactly two opposite rays");
      return;
    }
    if (rays_.size() < 2) throw Error(ErrorKind::InvalidInput, "a fan needs at least two rays");
    for (std::size_t i = 0; i + 1 < rays_.size(); ++i) {
      const std::int64_t d = det2(rays_[i + 1], rays_[i]);
      if (d == 0) {
        if (rays_[i + 1] == rays_[i]) throw Error(ErrorKind::DegenerateCone, "repeated ray " + to_string(rays_[i]));
        throw Error(ErrorKind::NotStronglyConvex, "cone with opposite rays " + to_string(rays_[i]) + ", " + to_string(rays_[i + 1]));
      }
      if (d < 0) throw Error(ErrorKind::InvalidInput, "rays are not clockwise at " + to_string(rays_[i]) + ", " + to_string(rays_[i + 1]));
    }
    const LatticeVec a = rays_.front(), b = rays_.back();
    const std::int64_t total = det2(b, a);
    if (kind_ == SupportKind::HalfPlane) {
      if (b != -a) throw Error(ErrorKind::InvalidInput, "half-plane support needs opposite end rays");
    } else if (total <= 0) {
      throw Error(ErrorKind::NotStronglyConvex, "support is not a strongly convex cone");
    }
    for (std::size_t i = 1; i + 1 < rays_.size(); ++i)
      if (det2(rays_[i], a) <= 0 || det2(b, rays_[i]) <= 0)
        throw Error(ErrorKind::UnsupportedSupport, "rays wind beyond a half-plane");
  }

  std::vector<LatticeVec> rays_;
  SupportKind kind_ = SupportKind::Cone;
};

// forms[k][i]: function k on cone i.
struct FanLinearFamily {
  std::vector<std::vector<LinearForm>> forms;

  std::size_t n() const { return forms.size(); }
  friend bool operator==(const FanLinearFamily&, const FanLinearFamily&) = default;
};

inline void check_dimensions(const Fan& fan, const FanLinearFamily& fam) {
  for (std::size_t k = 0; k < fam.n(); ++k)
    if (fam.forms[k].size() != fan.num_cones())
      throw Error(ErrorKind::DimensionMismatch, "function " + std::to_string(k + 1) + " has " +
                                                    std::to_string(fam.forms[k].size()) + " forms for " +
                                                    std::to_string(fan.num_cones()) + " cones");
}

inline std::int64_t eval(const FanLinearFamily& fam, const Fan& fan, std::size_t k, LatticeVec v) {
  return fam.forms.at(k).at(fan.locate(v))(v);
}

inline std::vector<std::int64_t> eval_all(const FanLinearFamily& fam, const Fan& fan, LatticeVec v) {
  const std::size_t c = fan.locate(v);
  std::vector<std::int64_t> out;
  for (const auto& fk : fam.forms) out.push_back(fk.at(c)(v));
  return out;
}

inline std::vector<std::int64_t> gamma(const FanLinearFamily& fam, const Fan& fan, LatticeVec v, LatticeVec v2) {
  const auto a = eval_all(fam, fan, v);
  const auto b = eval_all(fam, fan, v2);
  const auto s = eval_all(fam, fan, v + v2);
  std::vector<std::int64_t> g(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) g[k] = checked::sub(checked::add(a[k], b[k]), s[k]);
  return g;
}

inline ValidationReport validate_family(const Fan& fan, const FanLinearFamily& fam, std::uint64_t seed = 7) {
  check_dimensions(fan, fam);
  ValidationReport rep;
  const auto& rays = fan.rays();
  if (fan.degenerate()) {
    bool nonneg = true;
    for (const auto& fk : fam.forms)
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (fk[i](rays[i]) < 0) nonneg = false;
    rep.add("nonnegativity", nonneg);
    return rep;
  }
  const std::size_t nc = fan.num_cones();
  {
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k < fam.n(); ++k)
      for (std::size_t i = 0; i + 1 < nc; ++i)
        if (fam.forms[k][i](rays[i + 1]) != fam.forms[k][i + 1](rays[i + 1]) && ok) {
          ok = false;
          detail = "function " + std::to_string(k + 1) + " at wall " + to_string(rays[i + 1]);
        }
    rep.add("wall consistency", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < nc; ++i) {
      const auto [a, b] = fan.cone(i);
      const HilbertBasis h = hilbert_basis(a, b);
      for (std::size_t k = 0; k < fam.n(); ++k)
        for (LatticeVec v : h.elements)
          if (fam.forms[k][i](v) < 0 && ok) {
            ok = false;
            detail = "function " + std::to_string(k + 1) + " negative at " + to_string(v);
          }
    }
    rep.add("nonnegativity", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k < fam.n(); ++k)
      for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
          const auto [a, b] = fan.cone(i);
          if ((fam.forms[k][j](a) > fam.forms[k][i](a) || fam.forms[k][j](b) > fam.forms[k][i](b)) && ok) {
            ok = false;
            detail = "function " + std::to_string(k + 1) + ": form of cone " + std::to_string(j + 1) +
                     " exceeds the form of cone " + std::to_string(i + 1) + " on cone " + std::to_string(i + 1);
          }
        }
    rep.add("convexity certificate", ok, detail);
  }
  {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coef(0, 6);
    std::uniform_int_distribution<std::size_t> pick(0, nc - 1);
    auto sample = [&]() {
      const auto [a, b] = fan.cone(pick(rng));
      return coef(rng) * a + coef(rng) * b;
    };
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 200 && ok; ++t) {
      const LatticeVec u = sample(), v = sample();
      if (!fan.contains(u + v)) continue;
      const auto g = gamma(fam, fan, u, v);
      for (std::size_t k = 0; k < g.size(); ++k)
        if (g[k] < 0) {
          ok = false;
          detail = "f" + std::to_string(k + 1) + "(" + to_string(u) + "+" + to_string(v) + ") exceeds the sum";
        }
    }
    rep.add("subadditivity spot-check", ok, detail);
  }
  return rep;
}

struct Strictness {
  std::vector<bool> wall_strict;                       // interior walls, clockwise
  std::vector<std::optional<std::size_t>> distinguished;  // 0-based function index k_i

  bool all_strict() const { return std::all_of(wall_strict.begin(), wall_strict.end(), [](bool b) { return b; }); }
};

inline Strictness is_strict(const Fan& fan, const FanLinearFamily& fam) {
  check_dimensions(fan, fam);
  Strictness s;
  for (std::size_t i = 0; i < fan.num_walls(); ++i) {
    std::optional<std::size_t> k;
    for (std::size_t q = 0; q < fam.n() && !k; ++q)
      if (fam.forms[q][i] != fam.forms[q][i + 1]) k = q;
    s.wall_strict.push_back(k.has_value());
    s.distinguished.push_back(k);
  }
  return s;
}

// Merges cones across non-strict walls while the merged cone stays strongly convex.
inline std::pair<Fan, FanLinearFamily> coarsen(const Fan& fan, const FanLinearFamily& fam) {
  check_dimensions(fan, fam);
  if (fan.degenerate()) return {fan, fam};
  std::vector<LatticeVec> rays{fan.rays().front()};
  std::vector<std::size_t> keep_cone{0};  // original cone index whose form represents each new cone
  for (std::size_t i = 0; i < fan.num_walls(); ++i) {
    const LatticeVec wall = fan.rays()[i + 1];
    const LatticeVec next_end = fan.rays()[i + 2];
    bool same = true;
    for (std::size_t k = 0; k < fam.n(); ++k)
      if (fam.forms[k][i] != fam.forms[k][i + 1]) same = false;
    if (same && det2(next_end, rays.back()) > 0) continue;  // drop the wall
    rays.push_back(wall);
    keep_cone.push_back(i + 1);
  }
  rays.push_back(fan.rays().back());
  FanLinearFamily out;
  for (std::size_t k = 0; k < fam.n(); ++k) {
    std::vector<LinearForm> f;
    for (std::size_t c : keep_cone) f.push_back(fam.forms[k][c]);
    out.forms.push_back(std::move(f));
  }
  return {Fan::make(std::move(rays), fan.kind()), std::move(out)};
}

// Per-cone encoding of f_k = max(candidates[k]) over the strongly convex cone (first, last).
inline std::pair<Fan, FanLinearFamily> fan_from_max_forms(LatticeVec first, LatticeVec last,
                                                          const std::vector<std::vector<LinearForm>>& candidates) {
  first = primitive(first);
  last = primitive(last);
  if (det2(last, first) <= 0) throw Error(ErrorKind::NotStronglyConvex, "support must be a strongly convex cone listed clockwise");
  std::vector<LatticeVec> rays{first, last};
  for (const auto& cands : candidates)
    for (std::size_t a = 0; a < cands.size(); ++a)
      for (std::size_t b = a + 1; b < cands.size(); ++b) {
        const LatticeVec dir{checked::sub(cands[a].d, cands[b].d), checked::sub(cands[b].c, cands[a].c)};
        if (is_zero(dir)) continue;
        for (LatticeVec r : {primitive(dir), -primitive(dir)})
          if (det2(r, first) > 0 && det2(last, r) > 0) rays.push_back(r);
      }
  detail::sort_clockwise(rays);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  FanLinearFamily fam;
  for (const auto& cands : candidates) {
    if (cands.empty()) throw Error(ErrorKind::InvalidInput, "empty candidate list");
    std::vector<LinearForm> per_cone;
    for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
      const LatticeVec s = rays[i] + rays[i + 1];
      LinearForm best = cands.front();
      for (const LinearForm& f : cands)
        if (f(s) > best(s)) best = f;
      per_cone.push_back(best);
    }
    fam.forms.push_back(std::move(per_cone));
  }
  return coarsen(Fan::make(std::move(rays), SupportKind::Cone), fam);
}

// Fan of the intersection algebra: f_i = max(a_i r, b_i s) on the positive quadrant.
inline std::pair<Fan, FanLinearFamily> intersection_fan(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "a and b must have equal length");
  if (a.empty()) throw Error(ErrorKind::InvalidInput, "a and b must be nonempty");
  std::vector<std::vector<LinearForm>> cands;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0 || b[i] <= 0) throw Error(ErrorKind::NonPositiveInput, "intersection data must be positive");
    cands.push_back({LinearForm{a[i], 0}, LinearForm{0, b[i]}});
  }
  return fan_from_max_forms({0, 1}, {1, 0}, cands);
}

}  // namespace fanres
