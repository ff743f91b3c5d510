// Resolves B(3,2) and prints the matrices, the Betti numbers and the checks.
#include <iostream>

#include <fanres/fanres.hpp>

int main() {
  using namespace fanres;
  const auto [fan, fam] = intersection_fan({3}, {2});
  const Presentation P = presentation_ideal(fan, fam);
  for (const Relation& r : P.relations) std::cout << "S" << r.i << "," << r.j << " = " << render(r.poly) << "\n";

  const ChainComplex C = resolve(P);
  std::cout << "\n" << export_complex(C, ExportFormat::Text);

  ValidationReport rep = verify_complex(C);
  rep.merge(verify_ranks(C, 5, 42).report);
  std::cout << "\n" << to_text(rep);

  const BettiTable b = betti(C);
  std::cout << b.label << ":";
  for (std::size_t t : b.total) std::cout << " " << t;
  std::cout << "\n";
  return rep.ok() ? 0 : 1;
}
