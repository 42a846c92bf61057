// Checks the minimal-subtraction projector on Laurent polynomials, then
// shows a truncation that fails the same relation.
#include <iostream>

#include "rbo/rbo.hpp"

int main() {
  using namespace rbo;
  const AlgebraDescriptor laurent = make_laurent();

  CheckReport ok = check_rbr(laurent, make_rms(), 1, DomainSpec::exhaustive(-8, 8));
  std::cout << "R_ms, weight 1: " << (ok.pass ? "pass" : "fail") << " on " << ok.tuples << " pairs\n";

  SearchBudget budget;
  if (auto w = find_violation(laurent, IdentityId::rbr, make_shift_truncation(1), 1, budget))
    std::cout << "R_1 fails at (" << w->inputs_text[0] << ", " << w->inputs_text[1] << "), difference " << w->diff_text << "\n";

  DendriformStructure tri = build_tri_from_rbo(laurent, make_rms(), 1);
  Element a = parse_laurent("z^-1 + 2 z");
  Element b = parse_laurent("3 z^-2");
  std::cout << "a*b = " << laurent.format(tri.star(a, b)) << "\n";

  std::cout << to_json(check_image_closure(make_componentwise(4), make_miller(2, 2))).dump(2) << "\n";
}
