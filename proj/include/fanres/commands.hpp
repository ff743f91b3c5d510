#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "fan.hpp"
#include "hilbert.hpp"
#include "oracle.hpp"
#include "poly_io.hpp"
#include "presentation.hpp"
#include "problem.hpp"
#include "reference_examples.hpp"
#include "report.hpp"
#include "resolution.hpp"
#include "serialize.hpp"
#include "syzygy.hpp"

namespace fanres {

struct CommandResult {
  json doc;
  std::string text;
  int exit_code = 0;
  std::string m2;  // filled by resolve
};

namespace detail {

inline std::string generator_header(const std::vector<LatticeVec>& H) {
  std::string s;
  for (std::size_t k = 0; k < H.size(); ++k) s += (k ? " " : "") + std::string("Y(") + std::to_string(k + 1) + ")=" + to_string(H[k]);
  return s;
}

inline json vecs_to_json(const std::vector<LatticeVec>& v) {
  json a = json::array();
  for (LatticeVec x : v) a.push_back(vec_to_json(x));
  return a;
}

inline Poly sign_normalized(Poly g) {
  if (!g.is_zero() && leading(g).lc.terms().front().coeff < 0) return -g;
  return g;
}

inline std::vector<std::string> canonical_set(const std::vector<Poly>& v) {
  std::vector<std::string> out;
  for (const Poly& g : v) out.push_back(render(sign_normalized(g)));
  std::sort(out.begin(), out.end());
  return out;
}

inline Presentation problem_presentation(const ProblemSpec& s, const Fan& fan, const FanLinearFamily& fam) {
  Presentation P = presentation_ideal(fan, fam);
  if (s.specialize) P = specialize(P, *s.specialize);
  return P;
}

inline json betti_json(const BettiTable& b) {
  json graded = json::array();
  for (std::size_t s = 0; s < b.graded.size(); ++s) {
    json row = json::array();
    for (const auto& [d, c] : b.graded[s]) row.push_back({{"degree", vec_to_json(d)}, {"count", c}});
    graded.push_back(std::move(row));
  }
  json zg = json::array();
  for (const auto& m : b.z_graded) {
    json row = json::object();
    for (const auto& [d, c] : m) row[std::to_string(d)] = c;
    zg.push_back(std::move(row));
  }
  return {{"label", b.label}, {"minimal", b.minimal}, {"totals", b.total}, {"graded", graded}, {"z_graded", zg}};
}

inline std::string betti_text(const BettiTable& b) {
  std::ostringstream os;
  os << b.label << ":";
  for (std::size_t t : b.total) os << " " << t;
  os << "\n";
  for (std::size_t s = 0; s < b.graded.size(); ++s) {
    os << "  F" << s << ":";
    for (const auto& [d, c] : b.graded[s]) os << " " << c << "x" << to_string(d);
    os << "\n";
  }
  return os.str();
}

inline void finish(CommandResult& r, const ValidationReport& rep) {
  r.doc["checks"] = to_json(rep);
  r.text += "checks:\n" + to_text(rep);
  r.exit_code = rep.ok() ? 0 : 1;
}

}  // namespace detail

inline CommandResult cmd_hilbert(const ProblemSpec& spec) {
  const auto [fan, fam] = build_fan(spec);
  CommandResult r;
  ValidationReport rep;
  json cones = json::array();
  std::ostringstream os;
  for (std::size_t c = 0; !fan.degenerate() && c < fan.num_cones(); ++c) {
    const auto [a, b] = fan.cone(c);
    const HilbertBasis h = hilbert_basis(a, b);
    rep.merge(validate_basis(h, spec.seed), "cone " + std::to_string(c + 1) + ": ");
    cones.push_back({{"rays", json::array({vec_to_json(a), vec_to_json(b)})}, {"basis", detail::vecs_to_json(h.elements)}});
    os << "cone " << c + 1 << " " << to_string(a) << " " << to_string(b) << ":";
    for (LatticeVec v : h.elements) os << " " << to_string(v);
    os << "\n";
  }
  const std::vector<LatticeVec> H = hilbert_union(fan);
  r.doc = {{"command", "hilbert"}, {"support_kind", to_string(fan.kind())}, {"cones", cones}, {"H", detail::vecs_to_json(H)}, {"M", H.size()}};
  r.text = detail::generator_header(H) + "\n" + os.str() + "M = " + std::to_string(H.size()) + "\n";
  detail::finish(r, rep);
  return r;
}

inline CommandResult cmd_present(const ProblemSpec& spec) {
  const auto [fan, fam] = build_fan(spec);
  const Presentation P = detail::problem_presentation(spec, fan, fam);
  CommandResult r;
  ValidationReport rep;
  rep.merge(verify_relations(P, fan, fam));
  rep.merge(verify_groebner(P));
  json gens = json::array(), rels = json::array();
  for (std::size_t k = 0; k < P.generators.size(); ++k)
    gens.push_back({{"index", k + 1}, {"vector", vec_to_json(P.generators[k].v)}, {"f", P.generators[k].f}});
  std::ostringstream os;
  os << detail::generator_header(P.H) << "\n";
  os << "relations (" << P.relations.size() << "):\n";
  for (const Relation& rel : P.relations) {
    rels.push_back({{"i", rel.i}, {"j", rel.j}, {"gamma", rel.gamma}, {"poly", render(rel.poly)}, {"terms", poly_to_json(rel.poly)}});
    os << "  S" << rel.i << "," << rel.j << " = " << render(rel.poly) << "\n";
  }
  r.doc = {{"command", "present"}, {"support_kind", to_string(P.kind)}, {"M", P.M()}, {"n", P.n}, {"generators", gens}, {"relations", rels}};
  if (!fan.degenerate()) {
    const MinimalityReport mr = check_minimal_generation(P, fam, fan);
    json red = json::array();
    for (const RedundantRelation& rr : mr.redundant) red.push_back(render(P.relations[rr.relation].poly));
    r.doc["minimality"] = {{"generators_minimal", mr.generators_minimal},
                           {"relations_minimal", mr.relations_minimal},
                           {"redundant", red},
                           {"report", to_json(mr.report)}};
    os << "minimality:\n" << to_text(mr.report);
  }
  r.text = os.str();
  detail::finish(r, rep);
  return r;
}

inline CommandResult cmd_resolve(const ProblemSpec& spec) {
  const auto [fan, fam] = build_fan(spec);
  const Presentation P = detail::problem_presentation(spec, fan, fam);
  const ChainComplex C = resolve(P);
  ValidationReport rep = verify_complex(C);
  const BettiTable bt = betti(C, rep.passed("minimality (no constant entries)"));
  const bool proper = (C.kind == SupportKind::Cone || C.kind == SupportKind::HalfPlane) && C.M >= 3;
  if (proper && is_strict(fan, fam).all_strict()) {
    const auto want = betti_formula(C.M);
    rep.add("Betti totals match i*C(M-1,i+1)", bt.total == want);
  }
  CommandResult r;
  r.doc = {{"command", "resolve"}, {"complex", complex_to_json(C)}, {"betti", detail::betti_json(bt)}};
  r.text = complex_text(C) + "\n" + detail::betti_text(bt);
  if (!C.binomial_closure) r.text += "note: a non-monomial leading coefficient appeared during division\n";
  r.m2 = complex_m2(C);
  detail::finish(r, rep);
  return r;
}

inline CommandResult cmd_verify(const ProblemSpec& spec) {
  const auto [fan, fam] = build_fan(spec);
  ValidationReport rep;
  for (std::size_t c = 0; !fan.degenerate() && c < fan.num_cones(); ++c) {
    const auto [a, b] = fan.cone(c);
    const HilbertBasis h = hilbert_basis(a, b);
    const HilbertBasis g = brute_force_hilbert(a, b);
    rep.add("cone " + std::to_string(c + 1) + ": basis equals brute force", h.elements == g.elements);
  }
  rep.merge(validate_family(fan, fam, spec.seed), "family: ");
  const Presentation P = detail::problem_presentation(spec, fan, fam);
  rep.merge(verify_groebner(P), "presentation: ");
  const oracle::KernelOracleResult ko = oracle::kernel_oracle(P, fan, fam, spec.degree_bound);
  rep.merge(ko.report, "kernel oracle: ");
  const ChainComplex C = resolve(P);
  rep.merge(verify_complex(C), "complex: ");
  const RankCertificate rc = verify_ranks(C, spec.trials, spec.seed, spec.sample_bound);
  rep.merge(rc.report, "ranks: ");
  json findings = json::object();
  if (!fan.degenerate()) {
    const MinimalityReport mr = check_minimal_generation(P, fam, fan);
    std::size_t checked = 0;
    bool all = true;
    for (const RedundantRelation& rr : mr.redundant) {
      if (!rr.explicit_identity) continue;
      std::vector<std::pair<Poly, Poly>> comb;
      for (const auto& [idx, coef] : rr.combination) comb.emplace_back(coef, P.relations[idx].poly);
      all = all && oracle::identity_check(P.relations[rr.relation].poly, comb);
      ++checked;
    }
    if (checked) rep.add("redundancy identities expand correctly", all, std::to_string(checked) + " identities");
    findings["relations_minimal"] = mr.relations_minimal;
    findings["generators_minimal"] = mr.generators_minimal;
  }
  CommandResult r;
  r.doc = {{"command", "verify"},
           {"M", P.M()},
           {"kernel_binomials", ko.binomials.size()},
           {"rank_method", rc.method},
           {"max_ranks", rc.max_ranks},
           {"findings", findings}};
  r.text = detail::generator_header(P.H) + "\nkernel oracle: " + std::to_string(ko.binomials.size()) + " binomials up to degree " +
           std::to_string(spec.degree_bound) + "\nrank method: " + rc.method + "\n";
  detail::finish(r, rep);
  return r;
}

namespace detail {

struct ExampleDiff {
  ValidationReport rep;
  json diff = json::array();
  std::ostringstream text;

  void mismatch(const std::string& item, const std::string& expected, const std::string& actual) {
    diff.push_back({{"item", item}, {"expected", expected}, {"actual", actual}});
  }
};

inline ModElem syzygy_from_row(const reference::SyzygyRow& row, const std::vector<BasisTuple>& cols, std::size_t M, std::size_t n) {
  ModElem e;
  for (const auto& [t, s] : row.entries) {
    auto it = std::find(cols.begin(), cols.end(), t);
    if (it == cols.end()) throw Error(ErrorKind::Internal, "reference column (" + to_string(t) + ") unknown");
    e.add(static_cast<std::size_t>(it - cols.begin()), parse_poly(s, M, n));
  }
  return e;
}

inline void compare_stage(ExampleDiff& d, const SyzygyTower& T, std::size_t s, const std::vector<reference::SyzygyRow>& ref) {
  bool ok = T.tuples.at(s).size() == ref.size();
  for (const auto& row : ref) {
    const std::size_t q = T.index_of(s, row.tuple);
    const ModElem want = syzygy_from_row(row, T.tuples[s - 1], T.M, T.n);
    const std::string lhs = "s" + to_string(row.tuple);
    d.text << "  " << lhs << " = " << render(T.families[s][q], T.tuples[s - 1]) << "\n";
    if (!(T.families[s][q] == want)) {
      ok = false;
      d.mismatch(lhs, render(want, T.tuples[s - 1]), render(T.families[s][q], T.tuples[s - 1]));
    }
  }
  d.rep.add("stage " + std::to_string(s) + " syzygies match", ok, std::to_string(ref.size()) + " elements");
}

inline Poly parse_or_zero(const std::string& s, std::size_t M, std::size_t n) { return s == "0" ? Poly() : parse_poly(s, M, n); }

inline void example_hb23(ExampleDiff& d) {
  for (const auto& c : reference::hb23()) {
    HilbertBasis h = hilbert_basis(c.r1, c.r2);
    auto got = h.elements, want = c.basis;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    const std::string name = "cone " + to_string(c.r1) + " " + to_string(c.r2);
    d.text << "  " << name << ":";
    for (LatticeVec v : h.elements) d.text << " " << to_string(v);
    d.text << "\n";
    std::string gs, ws;
    for (LatticeVec v : got) gs += to_string(v);
    for (LatticeVec v : want) ws += to_string(v);
    if (got != want) d.mismatch(name, ws, gs);
    d.rep.add(name + " basis", got == want);
  }
}

inline std::vector<Poly> parse_all(const std::vector<std::string>& v, std::size_t M, std::size_t n) {
  std::vector<Poly> out;
  for (const auto& s : v) out.push_back(parse_poly(s, M, n));
  return out;
}

inline void compare_relations(ExampleDiff& d, const Presentation& P, const std::vector<std::string>& ref) {
  const auto got = canonical_set(P.polys());
  const auto want = canonical_set(parse_all(ref, P.M(), P.n));
  for (const Relation& rel : P.relations) d.text << "  S" << rel.i << "," << rel.j << " = " << render(rel.poly) << "\n";
  for (const auto& w : want)
    if (!std::binary_search(got.begin(), got.end(), w)) d.mismatch("relation", w, "missing");
  for (const auto& g : got)
    if (!std::binary_search(want.begin(), want.end(), g)) d.mismatch("relation", "absent", g);
  d.rep.add("relations match", got == want, std::to_string(got.size()) + " computed, " + std::to_string(want.size()) + " expected");
}

inline void example_phi0(ExampleDiff& d) {
  const auto [fan, fam] = intersection_fan(reference::b32_a, reference::b32_b);
  const Presentation P = presentation_ideal(fan, fam);
  d.text << "  " << generator_header(P.H) << "\n";
  std::vector<std::int64_t> f;
  for (const Generator& g : P.generators) f.push_back(g.f[0]);
  d.rep.add("phi0 p-exponents", f == reference::phi0_images_f);
  compare_relations(d, P, reference::phi0_relations());
  d.rep.merge(verify_groebner(P));
}

inline void example_phii1(ExampleDiff& d) {
  const auto [fan, fam] = intersection_fan(reference::b32_a, reference::b32_b);
  const SyzygyTower T = build_tower(presentation_ideal(fan, fam));
  compare_stage(d, T, 2, reference::phii1_syzygies());
}

inline void example_phii2(ExampleDiff& d) {
  const auto [fan, fam] = intersection_fan(reference::b32_a, reference::b32_b);
  const ChainComplex C = resolve(presentation_ideal(fan, fam));
  const SyzygyTower T = build_tower(presentation_ideal(fan, fam));
  compare_stage(d, T, 3, reference::phii2_syzygies());
  // Printed matrices against the computed ones; every difference must be a listed erratum.
  std::vector<std::vector<std::vector<std::string>>> printed{reference::phi2_printed(), reference::phi3_printed()};
  bool corrected_ok = true, errata_exact = true;
  std::size_t differences = 0;
  for (int map : {2, 3}) {
    const auto& rows = C.maps.at(map - 1);
    const auto& pm = printed[map - 2];
    if (pm.size() != rows.size()) throw Error(ErrorKind::Internal, "printed matrix shape");
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < pm[i].size(); ++j) {
        const Poly got = rows[i].coord(j);
        const Poly pr = parse_or_zero(pm[i][j], C.M, C.n);
        const auto& er = reference::phii2_errata();
        auto it = std::find_if(er.begin(), er.end(), [&](const reference::Erratum& e) { return e.map == map && e.row == i && e.col == j; });
        const Poly want = it == er.end() ? pr : parse_or_zero(it->corrected, C.M, C.n);
        if (!(got == want)) {
          corrected_ok = false;
          d.mismatch("phi" + std::to_string(map) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]", render(want), render(got));
        }
        if (!(got == pr)) {
          ++differences;
          if (it == er.end() || !(got == -pr)) errata_exact = false;
        }
      }
  }
  d.rep.add("phi2, phi3 match the printed matrices with errata applied", corrected_ok);
  d.rep.add("printed matrices differ only by the listed sign errata", errata_exact && differences == reference::phii2_errata().size(),
            std::to_string(differences) + " sign differences");
  for (const auto& e : reference::phii2_errata())
    d.text << "  erratum phi" << e.map << "[" << e.row + 1 << "," << e.col + 1 << "]: printed " << e.printed << ", correct " << e.corrected
           << "\n";
  d.text << matrix_text(C, 2) << matrix_text(C, 3);
  d.rep.merge(verify_complex(C));
}

inline void example_torito(ExampleDiff& d) {
  const auto [fan, fam] = intersection_fan(reference::torito_a, reference::torito_b);
  const Presentation P = presentation_ideal(fan, fam);
  d.text << "  " << generator_header(P.H) << "\n";
  d.rep.add("generators", P.H == reference::torito_H);
  compare_relations(d, P, reference::torito_relations());
  d.rep.merge(verify_groebner(P));
  // p2 = 1: identity holds and the presentation is reported non-minimal.
  const Presentation S = specialize(P, PValues{std::nullopt, 1});
  const auto& id1 = reference::torito_identity_p2_one();
  std::vector<std::pair<Poly, Poly>> comb;
  for (const auto& [a, b] : id1.combination) comb.emplace_back(parse_poly(a, P.M(), P.n), parse_poly(b, P.M(), P.n));
  bool members = true;
  const auto sset = canonical_set(S.polys());
  for (const auto& c : comb) members = members && std::binary_search(sset.begin(), sset.end(), render(sign_normalized(c.second)));
  d.rep.add("p2 = 1 identity", oracle::identity_check(parse_poly(id1.lhs, P.M(), P.n), comb) && members);
  const MinimalityReport mr = check_minimal_generation(S, fam, fan);
  d.rep.add("p2 = 1 non-minimality reported", !mr.relations_minimal);
  d.text << "  p2 = 1:\n" << to_text(mr.report, "    ");
  // p1 = p2 + 1 by rewriting over Z[p2].
  const auto& id2 = reference::torito_identity_p1_shift();
  const Poly shift = Poly::p_var(2, 2, P.M()) + Poly::constant(1, 2, P.M());
  std::vector<std::pair<Poly, Poly>> comb2;
  bool members2 = true;
  const auto pset = canonical_set(P.polys());
  for (const auto& [a, b] : id2.combination) {
    const Poly rel = parse_poly(b, P.M(), P.n);
    members2 = members2 && std::binary_search(pset.begin(), pset.end(), render(sign_normalized(rel)));
    comb2.emplace_back(substitute_p(parse_poly(a, P.M(), P.n), 1, shift), substitute_p(rel, 1, shift));
  }
  d.rep.add("p1 = p2 + 1 identity", oracle::identity_check(substitute_p(parse_poly(id2.lhs, P.M(), P.n), 1, shift), comb2) && members2);
}

inline void example_gorenstein(ExampleDiff& d) {
  const auto [fan, fam] = intersection_fan(reference::gorenstein_a, reference::gorenstein_a);
  const Presentation P = presentation_ideal(fan, fam);
  const ChainComplex C = resolve(P);
  d.text << "  " << generator_header(P.H) << "\n";
  compare_relations(d, P, {reference::gorenstein_relation});
  d.rep.add("Betti (1, 1)", C.ranks() == std::vector<std::size_t>{1, 1});
  std::size_t exceptions = 0, cases = 0;
  std::vector<std::vector<std::int64_t>> vals;
  for (std::int64_t x = 1; x <= 3; ++x) vals.push_back({x});
  for (std::int64_t x = 1; x <= 3; ++x)
    for (std::int64_t y = 1; y <= 3; ++y) vals.push_back({x, y});
  for (const auto& a : vals)
    for (const auto& b : vals) {
      if (a.size() != b.size()) continue;
      ++cases;
      const auto fb = intersection_fan(a, b);
      const std::size_t M = hilbert_union(fb.first).size();
      if ((M == 3) != (a == b)) ++exceptions;
    }
  d.rep.add("M = 3 iff a = b", exceptions == 0, std::to_string(cases) + " cases, " + std::to_string(exceptions) + " exceptions");
}

inline void example_conjecture(ExampleDiff& d) {
  for (const auto& c : reference::conjecture_cases()) {
    const oracle::ConjectureReport r = oracle::conjecture_refutation(c.n);
    d.text << "  n = " << c.n << ": " << generator_header(r.H) << "\n    " << r.ours << "  (" << r.x_labeling << ")\n";
    if (r.ours != c.ours) d.mismatch("n = " + std::to_string(c.n), c.ours, r.ours);
    d.rep.add("n = " + std::to_string(c.n) + " element", r.ours == c.ours && r.x_labeling == c.x_labeling);
    d.rep.merge(r.report, "n = " + std::to_string(c.n) + ": ");
  }
}

}  // namespace detail

inline CommandResult cmd_examples(const std::string& name) {
  detail::ExampleDiff d;
  if (name == "hb23")
    detail::example_hb23(d);
  else if (name == "phi0")
    detail::example_phi0(d);
  else if (name == "phii1")
    detail::example_phii1(d);
  else if (name == "phii2")
    detail::example_phii2(d);
  else if (name == "torito")
    detail::example_torito(d);
  else if (name == "gorenstein")
    detail::example_gorenstein(d);
  else if (name == "conjecture")
    detail::example_conjecture(d);
  else {
    std::string names;
    for (const auto& n : reference::example_names) names += (names.empty() ? "" : ", ") + n;
    throw Error(ErrorKind::InvalidInput, "unknown example '" + name + "' (known: " + names + ")");
  }
  CommandResult r;
  r.doc = {{"command", "examples"}, {"example", name}, {"diff", d.diff}};
  r.text = "example " + name + ":\n" + d.text.str();
  for (const auto& m : d.diff) r.text += "  diff " + m["item"].get<std::string>() + ": expected " + m["expected"].get<std::string>() +
                                          ", got " + m["actual"].get<std::string>() + "\n";
  detail::finish(r, d.rep);
  if (!d.diff.empty()) r.exit_code = 1;
  return r;
}

}  // namespace fanres
