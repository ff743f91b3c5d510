#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lattice2d.hpp"

// Published reference data, transcribed term by term. Polynomials use the parse_poly grammar.
namespace fanres::reference {

struct ConeBasis {
  LatticeVec r1, r2;
  std::vector<LatticeVec> basis;
};

inline const std::vector<ConeBasis>& hb23() {
  static const std::vector<ConeBasis> d{
      {{0, 1}, {2, 3}, {{0, 1}, {1, 2}, {2, 3}}},
      {{1, 0}, {2, 3}, {{1, 0}, {1, 1}, {2, 3}}},
  };
  return d;
}

// B(3,2): intersection a = (3), b = (2).
inline const std::vector<std::int64_t> b32_a{3}, b32_b{2};

inline const std::vector<std::string>& phi0_relations() {
  static const std::vector<std::string> d{
      "Y1*Y3 - Y2^2", "Y1*Y4 - p*Y2", "Y1*Y5 - p^2*Y4", "Y2*Y4 - p*Y3", "Y2*Y5 - p*Y4^2", "Y3*Y5 - Y4^3",
  };
  return d;
}

inline const std::vector<std::int64_t> phi0_images_f{2, 4, 6, 3, 3};  // Y_k -> p^f x^v

// (column tuple, coefficient) entries of one syzygy.
struct SyzygyRow {
  std::vector<std::size_t> tuple;
  std::vector<std::pair<std::vector<std::size_t>, std::string>> entries;
};

inline const std::vector<SyzygyRow>& phii1_syzygies() {
  static const std::vector<SyzygyRow> d{
      {{1, 3, 4}, {{{1, 3}, "Y4"}, {{1, 4}, "-Y3"}, {{2, 4}, "Y2"}}},
      {{1, 3, 5}, {{{1, 3}, "Y5"}, {{1, 5}, "-Y3"}, {{2, 4}, "p*Y4"}, {{2, 5}, "Y2"}}},
      {{1, 4, 2}, {{{1, 4}, "Y2"}, {{2, 4}, "-Y1"}, {{1, 3}, "-p"}}},
      {{1, 4, 5}, {{{1, 4}, "Y5"}, {{1, 5}, "-Y4"}, {{2, 5}, "p"}}},
      {{1, 5, 2}, {{{1, 5}, "Y2"}, {{2, 5}, "-Y1"}, {{1, 4}, "-p*Y4"}}},
      {{1, 5, 3}, {{{1, 5}, "Y3"}, {{3, 5}, "-Y1"}, {{2, 4}, "-p*Y4"}, {{1, 4}, "-Y4^2"}}},
      {{2, 4, 5}, {{{2, 4}, "Y5"}, {{2, 5}, "-Y4"}, {{3, 5}, "p"}}},
      {{2, 5, 3}, {{{2, 5}, "Y3"}, {{3, 5}, "-Y2"}, {{2, 4}, "-Y4^2"}}},
  };
  return d;
}

inline const std::vector<SyzygyRow>& phii2_syzygies() {
  static const std::vector<SyzygyRow> d{
      {{1, 3, 4, 5}, {{{1, 3, 4}, "Y5"}, {{1, 3, 5}, "-Y4"}, {{1, 4, 5}, "Y3"}, {{2, 4, 5}, "-Y2"}, {{2, 5, 3}, "-p"}}},
      {{1, 4, 2, 5},
       {{{1, 4, 2}, "Y5"}, {{1, 4, 5}, "-Y2"}, {{1, 3, 5}, "p"}, {{1, 5, 2}, "-Y4"}, {{1, 5, 3}, "p"}, {{2, 4, 5}, "Y1"}}},
      {{1, 5, 2, 3}, {{{1, 5, 2}, "Y3"}, {{1, 5, 3}, "-Y2"}, {{2, 5, 3}, "Y1"}, {{1, 3, 4}, "-p*Y4"}, {{1, 4, 2}, "-Y4^2"}}},
  };
  return d;
}

// Printed matrices, rows = source basis, columns = target basis.
inline const std::vector<std::vector<std::string>>& phi2_printed() {
  static const std::vector<std::vector<std::string>> d{
      {"Y4", "-Y3", "0", "-Y2", "0", "0"},       {"Y5", "0", "-Y3", "p*Y4", "Y2", "0"},
      {"-p", "Y2", "0", "-Y1", "0", "0"},        {"0", "Y5", "-Y4", "0", "p", "0"},
      {"0", "-p*Y4", "Y2", "0", "-Y1", "0"},     {"0", "-Y4^2", "Y3", "-p*Y4", "0", "-Y1"},
      {"0", "0", "0", "Y5", "-Y4", "p"},         {"0", "0", "0", "-Y4^2", "Y3", "-Y2"},
  };
  return d;
}

inline const std::vector<std::vector<std::string>>& phi3_printed() {
  static const std::vector<std::vector<std::string>> d{
      {"Y5", "-Y4", "0", "-Y3", "0", "0", "-Y2", "p"},
      {"0", "p", "Y5", "-Y2", "-Y4", "p", "Y1", "0"},
      {"-p*Y4", "0", "-Y4^2", "0", "Y3", "-Y2", "0", "Y1"},
  };
  return d;
}

// Printed entries contradicting the printed syzygy list and composition zero.
struct Erratum {
  int map;  // 2 or 3
  std::size_t row, col;  // 0-based
  std::string printed, corrected;
};

inline const std::vector<Erratum>& phii2_errata() {
  static const std::vector<Erratum> d{
      {2, 0, 3, "-Y2", "Y2"},
      {3, 0, 3, "-Y3", "Y3"},
      {3, 0, 7, "p", "-p"},
  };
  return d;
}

// Torito: rays (0,1),(1,3),(3,1),(1,0). The printed list matches a = (1,3), b = (3,1).
inline const std::vector<std::int64_t> torito_a{1, 3}, torito_b{3, 1};

inline const std::vector<LatticeVec> torito_H{{0, 1}, {1, 3}, {1, 2}, {1, 1}, {2, 1}, {3, 1}, {1, 0}};

inline const std::vector<std::string>& torito_relations() {
  static const std::vector<std::string> d{
      "Y1*Y7 - p1*p2*Y4", "Y1*Y4 - p2*Y3",      "Y7*Y3 - p1*Y4^2", "Y1*Y3 - p2*Y2",      "Y7*Y2 - p1*Y4*Y3",
      "Y4*Y2 - Y3^2",     "Y7*Y4 - p1*Y5",      "Y1*Y5 - p2*Y4^2", "Y3*Y5 - Y4^3",       "Y2*Y5 - Y4^2*Y3",
      "Y7*Y5 - p1*Y6",    "Y1*Y6 - p2*Y4*Y5",   "Y4*Y6 - Y5^2",    "Y3*Y6 - Y4^2*Y5",    "Y2*Y6 - Y4^4",
  };
  return d;
}

struct Identity {
  std::string lhs;
  std::vector<std::pair<std::string, std::string>> combination;  // sum of factor * relation
};

// Valid at p2 = 1.
inline const Identity& torito_identity_p2_one() {
  static const Identity d{"Y5*Y3 - Y4^3", {{"Y4", "Y1*Y5 - Y4^2"}, {"-Y5", "Y1*Y4 - Y3"}}};
  return d;
}

// Valid after p1 -> p2 + 1.
inline const Identity& torito_identity_p1_shift() {
  static const Identity d{"Y5*Y3 - Y4^3",
                          {{"Y4", "Y7*Y3 - p1*Y4^2"}, {"-Y3", "Y7*Y4 - p1*Y5"}, {"-Y4", "Y1*Y5 - p2*Y4^2"}, {"Y5", "Y1*Y4 - p2*Y3"}}};
  return d;
}

// Gorenstein case a = b: one relation Y1*Y3 - p^a*Y2.
inline const std::vector<std::int64_t> gorenstein_a{2, 3};
inline const std::string gorenstein_relation = "Y1*Y3 - p1^2*p2^3*Y2";

struct ConjectureCase {
  std::int64_t n;
  std::string ours, x_labeling;
};

inline const std::vector<ConjectureCase>& conjecture_cases() {
  static const std::vector<ConjectureCase> d{
      {2, "Y1*Y4 - p*Y2^2", "x1*x4 - x3^2*x6"},
      {3, "Y1*Y5 - p^2*Y2^2", "x1*x4 - x3^2*x7^2"},
  };
  return d;
}

inline const std::vector<std::string> example_names{"hb23", "phi0", "phii1", "phii2", "torito", "gorenstein", "conjecture"};

}  // namespace fanres::reference
