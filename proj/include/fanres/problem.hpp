#pragma once

#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "fan.hpp"
#include "polyring.hpp"
#include "serialize.hpp"

namespace fanres {

// Problem description read by the CLI. Either explicit rays and per-cone forms, or intersection exponents.
struct ProblemSpec {
  std::vector<LatticeVec> rays;
  std::vector<std::vector<LinearForm>> functions;  // functions[k][i]: f_k on cone i
  std::optional<SupportKind> support_kind;
  std::optional<std::vector<std::int64_t>> a, b;
  std::optional<PValues> specialize;
  std::uint64_t seed = 1;
  int trials = 5;
  int degree_bound = 3;
  std::int64_t sample_bound = 10000;
  bool coarsen = true;

  bool is_intersection() const { return a.has_value(); }
};

namespace detail {

inline std::int64_t int_field(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

inline std::vector<std::int64_t> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const json& x : j) out.push_back(int_field(x, what));
  return out;
}

}  // namespace detail

inline ProblemSpec parse_problem(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "problem must be a JSON object");
  static const std::vector<std::string> known{"rays", "functions", "support_kind", "intersection", "specialize", "seed", "trials", "bounds"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) throw Error(ErrorKind::InvalidInput, "unknown field '" + k + "'");
  ProblemSpec s;
  const bool has_rays = j.contains("rays"), has_inter = j.contains("intersection");
  if (has_rays == has_inter) throw Error(ErrorKind::InvalidInput, "give exactly one of 'rays' or 'intersection'");
  if (has_inter) {
    const json& in = j["intersection"];
    if (!in.is_object() || !in.contains("a") || !in.contains("b")) throw Error(ErrorKind::InvalidInput, "intersection needs 'a' and 'b'");
    s.a = detail::int_list(in["a"], "intersection.a");
    s.b = detail::int_list(in["b"], "intersection.b");
    if (s.a->size() != s.b->size()) throw Error(ErrorKind::DimensionMismatch, "a and b differ in length");
    if (s.a->empty()) throw Error(ErrorKind::InvalidInput, "a and b must be nonempty");
    for (std::size_t k = 0; k < s.a->size(); ++k)
      if ((*s.a)[k] <= 0 || (*s.b)[k] <= 0) throw Error(ErrorKind::NonPositiveInput, "intersection exponents must be positive");
    if (j.contains("functions") || j.contains("support_kind"))
      throw Error(ErrorKind::InvalidInput, "'functions' and 'support_kind' go with 'rays'");
  } else {
    if (!j["rays"].is_array()) throw Error(ErrorKind::InvalidInput, "rays must be an array");
    for (const json& r : j["rays"]) s.rays.push_back(vec_from_json(r));
    if (!j.contains("functions") || !j["functions"].is_array()) throw Error(ErrorKind::InvalidInput, "rays need a 'functions' array");
    for (const json& f : j["functions"]) {
      if (!f.is_array()) throw Error(ErrorKind::InvalidInput, "each function is a list of per-cone forms");
      std::vector<LinearForm> forms;
      for (const json& c : f) {
        const LatticeVec v = vec_from_json(c);
        forms.push_back({v.x, v.y});
      }
      s.functions.push_back(std::move(forms));
    }
    if (j.contains("support_kind")) {
      if (!j["support_kind"].is_string()) throw Error(ErrorKind::InvalidInput, "support_kind must be a string");
      s.support_kind = support_kind_from_string(j["support_kind"].get<std::string>());
    }
  }
  if (j.contains("specialize")) {
    const json& sp = j["specialize"];
    if (!sp.is_object() || !sp.contains("p") || !sp["p"].is_array()) throw Error(ErrorKind::InvalidInput, "specialize needs a 'p' array");
    PValues v;
    for (const json& x : sp["p"]) v.push_back(x.is_null() ? std::nullopt : std::optional<std::int64_t>(detail::int_field(x, "specialize.p")));
    for (const auto& x : v)
      if (x && *x == 0) throw Error(ErrorKind::InvalidInput, "specialized p-values must be nonzero");
    s.specialize = std::move(v);
  }
  if (j.contains("seed")) s.seed = static_cast<std::uint64_t>(detail::int_field(j["seed"], "seed"));
  if (j.contains("trials")) s.trials = static_cast<int>(detail::int_field(j["trials"], "trials"));
  if (s.trials < 1) throw Error(ErrorKind::NonPositiveInput, "trials must be positive");
  if (j.contains("bounds")) {
    const json& bd = j["bounds"];
    if (!bd.is_object()) throw Error(ErrorKind::InvalidInput, "bounds must be an object");
    if (bd.contains("degree")) s.degree_bound = static_cast<int>(detail::int_field(bd["degree"], "bounds.degree"));
    if (bd.contains("sample")) s.sample_bound = detail::int_field(bd["sample"], "bounds.sample");
    if (s.sample_bound < 1) throw Error(ErrorKind::NonPositiveInput, "bounds.sample must be positive");
  }
  return s;
}

inline ProblemSpec parse_problem(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(j);
}

// Fan and family described by the spec, coarsened unless disabled.
inline std::pair<Fan, FanLinearFamily> build_fan(const ProblemSpec& s) {
  std::pair<Fan, FanLinearFamily> out;
  if (s.is_intersection()) {
    out = intersection_fan(*s.a, *s.b);
  } else {
    if (s.support_kind == SupportKind::Plane) throw plane_support_error();
    out.first = s.support_kind ? Fan::make(s.rays, *s.support_kind) : Fan::make(s.rays);
    out.second.forms = s.functions;
    check_dimensions(out.first, out.second);
  }
  if (s.specialize && s.specialize->size() != out.second.n())
    throw Error(ErrorKind::DimensionMismatch, "specialize.p has " + std::to_string(s.specialize->size()) + " entries for " +
                                                  std::to_string(out.second.n()) + " functions");
  if (s.coarsen && !out.first.degenerate()) out = coarsen(out.first, out.second);
  return out;
}

}  // namespace fanres
