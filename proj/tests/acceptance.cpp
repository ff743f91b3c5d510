// Acceptance run: one PASS/FAIL line per criterion.
// Exit status is 0 when the only failures are the known ones listed in kKnownFailures.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <fanres/fanres.hpp>

using namespace fanres;

namespace {

const std::set<int> kKnownFailures{7};

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

using AB = std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>;

std::vector<AB> small_sweep() {
  std::vector<std::vector<std::int64_t>> vals;
  for (std::int64_t x = 1; x <= 3; ++x) vals.push_back({x});
  for (std::int64_t x = 1; x <= 3; ++x)
    for (std::int64_t y = 1; y <= 3; ++y) vals.push_back({x, y});
  std::vector<AB> out;
  for (const auto& a : vals)
    for (const auto& b : vals)
      if (a.size() == b.size()) out.emplace_back(a, b);
  return out;
}

std::string ab_str(const AB& ab) {
  std::ostringstream os;
  os << "a=(";
  for (std::size_t k = 0; k < ab.first.size(); ++k) os << (k ? "," : "") << ab.first[k];
  os << ") b=(";
  for (std::size_t k = 0; k < ab.second.size(); ++k) os << (k ? "," : "") << ab.second[k];
  os << ")";
  return os.str();
}

Poly parse_or_zero(const std::string& s, std::size_t M, std::size_t n) { return s == "0" ? Poly() : parse_poly(s, M, n); }

Outcome c1() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (const auto& cb : reference::hb23()) {
    std::vector<LatticeVec> got = hilbert_basis(cb.r1, cb.r2).elements, want = cb.basis;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    ok = ok && got == want;
  }
  const double ms = ms_since(t0);
  return {ok && ms < 10.0, "both cones in " + std::to_string(ms) + " ms"};
}

Outcome c2() {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::int64_t> d(-50, 50);
  int done = 0, bad = 0;
  std::string first;
  while (done < 200) {
    const LatticeVec a{d(rng), d(rng)}, b{d(rng), d(rng)};
    if (is_zero(a) || is_zero(b) || !is_primitive(a) || !is_primitive(b) || det2(a, b) == 0) continue;
    ++done;
    const HilbertBasis h = hilbert_basis(a, b);
    if (h.elements != brute_force_hilbert(a, b).elements || !validate_basis(h).ok()) {
      if (!bad++) first = to_string(a) + " " + to_string(b);
    }
  }
  return {bad == 0, std::to_string(done) + " cones, " + std::to_string(bad) + " mismatches" + (bad ? " (first " + first + ")" : "")};
}

Outcome compare_relation_sets(const Presentation& P, const std::vector<std::string>& ref) {
  std::vector<std::string> want, got;
  for (const auto& r : ref) want.push_back(render(parse_poly(r, P.M(), P.n)));
  for (const auto& r : P.relations) got.push_back(render(r.poly));
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  return {want == got, std::to_string(got.size()) + " relations computed, " + std::to_string(want.size()) + " expected"};
}

Outcome c3() {
  const auto [fan, fam] = intersection_fan(reference::b32_a, reference::b32_b);
  const Presentation P = presentation_ideal(fan, fam);
  Outcome o = compare_relation_sets(P, reference::phi0_relations());
  std::vector<std::int64_t> f;
  for (const Generator& g : P.generators) f.push_back(g.f[0]);
  o.pass = o.pass && f == reference::phi0_images_f && verify_relations(P, fan, fam).ok();
  return o;
}

Outcome c4() {
  const auto [fan, fam] = intersection_fan(reference::torito_a, reference::torito_b);
  const Presentation P = presentation_ideal(fan, fam);
  Outcome o = compare_relation_sets(P, reference::torito_relations());
  o.pass = o.pass && P.H == reference::torito_H && verify_relations(P, fan, fam).ok();
  return o;
}

Outcome c5() {
  std::size_t pairs = 0;
  bool ok = true;
  for (const AB& ab : {AB{reference::b32_a, reference::b32_b}, AB{reference::torito_a, reference::torito_b}}) {
    const auto [fan, fam] = intersection_fan(ab.first, ab.second);
    const Presentation P = presentation_ideal(fan, fam);
    const auto G = P.polys();
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = i + 1; j < G.size(); ++j) {
        ++pairs;
        const DivisionResult r = divide(spoly(G[i], G[j]), G);
        ok = ok && r.remainder.is_zero() && check_division(spoly(G[i], G[j]), G, r);
      }
  }
  return {ok, std::to_string(pairs) + " S-pairs reduced to zero"};
}

Outcome c6() {
  const auto [fan, fam] = intersection_fan(reference::b32_a, reference::b32_b);
  const SyzygyTower T = build_tower(presentation_ideal(fan, fam));
  std::size_t bad = 0;
  for (const auto& row : reference::phii1_syzygies()) {
    ModElem want;
    for (const auto& [t, s] : row.entries) {
      const auto& cols = T.tuples[1];
      want.add(static_cast<std::size_t>(std::find(cols.begin(), cols.end(), t) - cols.begin()), parse_poly(s, T.M, T.n));
    }
    if (!(T.families[2][T.index_of(2, row.tuple)] == want)) ++bad;
  }
  return {bad == 0 && T.families[2].size() == reference::phii1_syzygies().size(),
          std::to_string(T.families[2].size()) + " syzygies, " + std::to_string(bad) + " mismatches"};
}

// Literal comparison with the printed second and third maps.
Outcome c7() {
  const auto [fan, fam] = intersection_fan(reference::b32_a, reference::b32_b);
  const ChainComplex C = resolve(presentation_ideal(fan, fam));
  const std::vector<std::vector<std::vector<std::string>>> printed{reference::phi2_printed(), reference::phi3_printed()};
  std::vector<std::string> diffs;
  bool all_negations = true;
  std::vector<std::vector<ModElem>> pm(2);
  for (int map : {2, 3}) {
    const auto& rows = C.maps.at(map - 1);
    const auto& P = printed[map - 2];
    for (std::size_t i = 0; i < P.size(); ++i) {
      ModElem row;
      for (std::size_t j = 0; j < P[i].size(); ++j) {
        const Poly pr = parse_or_zero(P[i][j], C.M, C.n);
        if (!pr.is_zero()) row.add(j, pr);
        const Poly got = i < rows.size() ? rows[i].coord(j) : Poly();
        if (!(got == pr)) {
          diffs.push_back("phi" + std::to_string(map) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] printed " +
                          P[i][j] + ", computed " + render(got));
          all_negations = all_negations && got == -pr;
        }
      }
      pm[map - 2].push_back(row);
    }
  }
  // Composition of the printed maps: rows of phi3 applied to rows of phi2.
  bool printed_composes = true;
  for (const ModElem& r3 : pm[1]) {
    ModElem img;
    for (const auto& [j, q] : r3.coords()) img.add_scaled(pm[0].at(j), q);
    if (!img.is_zero()) printed_composes = false;
  }
  std::ostringstream os;
  os << diffs.size() << " entries differ";
  if (!diffs.empty()) os << " (" << (all_negations ? "each by exact negation" : "not all by negation") << ")";
  for (const auto& d : diffs) os << "; " << d;
  os << "; printed phi3*phi2 " << (printed_composes ? "= 0" : "!= 0") << ", computed complex composition "
     << (verify_complex(C).passed("composition zero") ? "= 0" : "!= 0");
  return {diffs.empty(), os.str()};
}

Outcome c8() {
  std::size_t cases = 0, bad = 0;
  std::string first;
  for (const AB& ab : small_sweep()) {
    const auto [fan, fam] = intersection_fan(ab.first, ab.second);
    const ChainComplex C = resolve(fan, fam);
    ++cases;
    if (betti(C).total != betti_formula(C.M) || C.length() != C.M - 2 || !verify_complex(C).ok())
      if (!bad++) first = ab_str(ab);
  }
  return {bad == 0 && cases > 0, std::to_string(cases) + " inputs, " + std::to_string(bad) + " mismatches" + (bad ? " (first " + first + ")" : "")};
}

Outcome c9() {
  std::size_t cases = 0, bad = 0;
  for (const AB& ab : small_sweep()) {
    ++cases;
    const auto [fan, fam] = intersection_fan(ab.first, ab.second);
    if ((hilbert_union(fan).size() == 3) != (ab.first == ab.second)) ++bad;
  }
  const auto [fan, fam] = intersection_fan(reference::gorenstein_a, reference::gorenstein_a);
  const Presentation P = presentation_ideal(fan, fam);
  const bool gor = P.relations.size() == 1 && P.relations[0].poly == parse_poly(reference::gorenstein_relation, 3, 2) &&
                   resolve(P).ranks() == std::vector<std::size_t>{1, 1};
  return {bad == 0 && gor, std::to_string(cases) + " cases, " + std::to_string(bad) + " exceptions"};
}

Outcome c10() {
  std::ostringstream os;
  bool ok = true;
  {
    const auto [fan, fam] = intersection_fan(reference::b32_a, reference::b32_b);
    const ChainComplex C = resolve(fan, fam);
    const RankCertificate rc = verify_ranks(C, 5, 1);
    std::size_t hits = 0;
    for (const auto& t : rc.trial_ranks) hits += t == std::vector<std::size_t>{1, 5, 3};
    ok = ok && hits == 5 && rc.report.ok() && verify_complex(C).passed("composition zero");
    os << "B(3,2) ranks (1,5,3) in " << hits << "/5 trials";
  }
  {
    const auto [fan, fam] = intersection_fan(reference::torito_a, reference::torito_b);
    const ChainComplex C = resolve(fan, fam);
    const RankCertificate rc = verify_ranks(C, 5, 2);
    ok = ok && rc.report.ok() && rc.max_ranks.size() >= 2 && rc.max_ranks[0] == 1 && rc.max_ranks[1] == 14 &&
         verify_complex(C).passed("composition zero");
    os << "; torito ranks";
    for (auto r : rc.max_ranks) os << " " << r;
    os << " (" << rc.method << ")";
  }
  return {ok, os.str()};
}

Outcome c11() {
  std::size_t cases = 0, bad = 0;
  for (const AB& ab : small_sweep()) {
    const auto [fan, fam] = intersection_fan(ab.first, ab.second);
    if (!is_strict(fan, fam).all_strict()) continue;
    ++cases;
    if (!verify_complex(resolve(fan, fam)).passed("minimality (no constant entries)")) ++bad;
  }
  const auto [fan, fam] = intersection_fan(reference::torito_a, reference::torito_b);
  const Presentation P = presentation_ideal(fan, fam);
  const Presentation S = specialize(P, PValues{std::nullopt, 1});
  const auto& id = reference::torito_identity_p2_one();
  std::vector<std::pair<Poly, Poly>> comb;
  for (const auto& [a, b] : id.combination) comb.emplace_back(parse_poly(a, P.M(), P.n), parse_poly(b, P.M(), P.n));
  const bool identity = oracle::identity_check(parse_poly(id.lhs, P.M(), P.n), comb);
  const bool flagged = !check_minimal_generation(S, fam, fan).relations_minimal;
  std::ostringstream os;
  os << cases << " strict inputs, " << bad << " with constant entries; p2 = 1 identity " << (identity ? "holds" : "fails")
     << ", non-minimality " << (flagged ? "reported" : "not reported");
  return {bad == 0 && identity && flagged, os.str()};
}

Outcome c12() {
  bool ok = true;
  std::ostringstream os;
  for (const auto& c : reference::conjecture_cases()) {
    const oracle::ConjectureReport r = oracle::conjecture_refutation(c.n);
    ok = ok && r.report.ok() && r.ours == c.ours && r.x_labeling == c.x_labeling;
    os << "n=" << c.n << ": " << r.ours << "; ";
  }
  return {ok, os.str()};
}

Outcome c13() {
  std::size_t checked = 0, bad = 0;
  for (std::size_t M = 3; M <= 12; ++M)
    for (std::size_t u = 0; u + 3 <= M; ++u) {
      ++checked;
      if (enumerate_admissible(M, u).size() != admissible_count(M, u)) ++bad;
    }
  for (std::size_t N = 1; N <= 20; ++N)
    for (std::size_t u = 0; u < N; ++u) {
      ++checked;
      if (weighted_binomial_sum(N, u) != (u + 1) * binomial(N + 1, u + 2)) ++bad;
    }
  return {bad == 0, std::to_string(checked) + " counts checked, " + std::to_string(bad) + " mismatches"};
}

Outcome c14() {
  const auto t0 = Clock::now();
  const auto [fan, fam] = intersection_fan({9}, {10});
  const ChainComplex C = resolve(fan, fam);
  const ValidationReport rep = verify_complex(C);
  const bool formula = betti(C).total == betti_formula(C.M);
  const RankCertificate rc = verify_ranks(C, 3, 5);
  const SyzygyTower T = build_tower(presentation_ideal(fan, fam));
  bool stages = T.complete;
  for (std::size_t st = 1; st <= T.top(); ++st) stages = stages && verify_stage_groebner(T, st).ok();
  const double s = ms_since(t0) / 1000.0;
  std::ostringstream os;
  os << "M=" << C.M << ", length " << C.length() << ", stage Groebner " << (stages ? "ok" : "failed") << ", " << s
     << " s, rank method " << rc.method;
  if (!rep.ok()) os << "; " << to_text(rep);
  return {C.M == 12 && rep.ok() && formula && rc.report.ok() && stages, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, c14};
  // Wall-clock limits in ms; 0 means none.
  const std::vector<double> limits{10, 30000, 100, 200, 1000, 1000, 2000, 30000, 0, 10000, 0, 0, 5000, 120000};
  std::set<int> failed;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = ms_since(t0);
    if (limits[k] > 0 && ms >= limits[k]) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<long>(limits[k])) + " ms limit";
    }
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " [" << static_cast<long>(ms) << " ms]: " << o.detail
              << (o.pass || !kKnownFailures.count(id) ? "" : " (known failure)") << std::endl;
  }
  bool unexpected = false;
  for (int id : failed) unexpected = unexpected || !kKnownFailures.count(id);
  std::cout << (14 - failed.size()) << "/14 criteria pass" << std::endl;
  return unexpected ? 1 : 0;
}
