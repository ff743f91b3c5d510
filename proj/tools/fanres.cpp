// fanres command-line driver.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <fanres/fanres.hpp>

namespace {

struct Options {
  std::string input;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> degree_bound;
  std::vector<std::string> specialize;
  std::string emit_m2;
  bool no_coarsen = false;
  std::string example;
};

fanres::ProblemSpec load(const Options& o) {
  fanres::ProblemSpec spec;
  if (o.input.empty() || o.input == "-") {
    spec = fanres::parse_problem(std::cin);
  } else {
    std::ifstream in(o.input);
    if (!in) throw fanres::Error(fanres::ErrorKind::InvalidInput, "cannot open " + o.input);
    spec = fanres::parse_problem(in);
  }
  if (o.seed) spec.seed = *o.seed;
  if (o.trials) {
    if (*o.trials < 1) throw fanres::Error(fanres::ErrorKind::NonPositiveInput, "--trials must be positive");
    spec.trials = *o.trials;
  }
  if (o.degree_bound) spec.degree_bound = *o.degree_bound;
  spec.coarsen = !o.no_coarsen;
  if (!o.specialize.empty()) {
    // p=v or pK=v, comma separated or repeated.
    std::map<std::size_t, std::int64_t> vals;
    for (const std::string& arg : o.specialize) {
      std::stringstream ss(arg);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || item.empty() || item[0] != 'p')
          throw fanres::Error(fanres::ErrorKind::InvalidInput, "--specialize expects pK=value, got '" + item + "'");
        const std::string idx = item.substr(1, eq - 1);
        try {
          const std::size_t k = idx.empty() ? 1 : std::stoul(idx);
          const std::int64_t v = std::stoll(item.substr(eq + 1));
          if (k == 0) throw std::invalid_argument("index");
          if (v == 0) throw fanres::Error(fanres::ErrorKind::InvalidInput, "specialized p-values must be nonzero");
          vals[k] = v;
        } catch (const std::logic_error&) {
          throw fanres::Error(fanres::ErrorKind::InvalidInput, "--specialize expects pK=value, got '" + item + "'");
        }
      }
    }
    const std::size_t n = fanres::build_fan(spec).second.n();
    fanres::PValues pv(n);
    for (const auto& [k, v] : vals) {
      if (k > n) throw fanres::Error(fanres::ErrorKind::DimensionMismatch, "p" + std::to_string(k) + " exceeds the number of functions");
      pv[k - 1] = v;
    }
    spec.specialize = pv;
  }
  return spec;
}

int emit(const fanres::CommandResult& r, const Options& o) {
  if (o.format == "json")
    std::cout << r.doc.dump(2) << "\n";
  else
    std::cout << r.text;
  if (!o.emit_m2.empty()) {
    if (r.m2.empty()) throw fanres::Error(fanres::ErrorKind::UnsupportedFormat, "--emit-m2 applies to the resolve command");
    std::ofstream out(o.emit_m2);
    if (!out) throw fanres::Error(fanres::ErrorKind::InvalidInput, "cannot write " + o.emit_m2);
    out << r.m2;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert bases, presentations and free resolutions of two-dimensional fan algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Problem JSON file (stdin when omitted or '-')");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--trials", o.trials, "Rank-certificate trials");
    sub->add_option("--specialize", o.specialize, "Fix p-values, e.g. p2=1");
    sub->add_option("--degree-bound", o.degree_bound, "Kernel oracle degree bound (at most 4)");
    sub->add_flag("--no-coarsen", o.no_coarsen, "Keep walls across which no function bends");
  };
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert bases of the cones and the generator list");
  auto* present = app.add_subcommand("present", "Presentation ideal with Groebner and minimality checks");
  auto* res = app.add_subcommand("resolve", "Free resolution, Betti table and symbolic checks");
  auto* verify = app.add_subcommand("verify", "Oracle suite: brute force, kernel enumeration, rank certificates");
  auto* examples = app.add_subcommand("examples", "Reproduce a reference example and diff it");
  for (auto* s : {hilbert, present, res, verify}) add_common(s);
  res->add_option("--emit-m2", o.emit_m2, "Write a Macaulay2 script to PATH");
  examples->add_option("name", o.example, "Example name")->required();
  examples->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*examples) return emit(fanres::cmd_examples(o.example), o);
    const fanres::ProblemSpec spec = load(o);
    if (*hilbert) return emit(fanres::cmd_hilbert(spec), o);
    if (*present) return emit(fanres::cmd_present(spec), o);
    if (*res) return emit(fanres::cmd_resolve(spec), o);
    return emit(fanres::cmd_verify(spec), o);
  } catch (const fanres::Error& e) {
    std::cerr << "fanres: " << fanres::to_string(e.kind()) << ": " << e.what() << "\n";
    return fanres::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "fanres: internal error: " << e.what() << "\n";
    return 3;
  }
}
