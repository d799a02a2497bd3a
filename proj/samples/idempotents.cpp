// Primitive idempotents of the rational Burnside ring of S4, written in the
// basis of transitive G-sets, plus a check that they sum to [G/G].

#include <iostream>

#include <relb/relb.hpp>

int main() {
  using namespace relb;
  auto ring = BurnsideRing::of(make_symmetric(4));
  const auto& lat = ring.lattice();

  for (std::size_t cls = 0; cls < lat.class_count(); ++cls)
    std::cout << "H" << cls << ": " << identify_label(as_group(lat.class_subgroup(cls)).group) << "\n";

  auto total = BurnsideElement::from_coefficients(ring, Basis::transitive,
                                                  std::vector<Rational>(ring.rank()));
  for (std::size_t cls = 0; cls < lat.class_count(); ++cls) {
    auto e = gluck_idempotent(ring, lat.class_subgroup(cls));
    std::cout << "e(H" << cls << ") =";
    const auto c = e.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0)
        std::cout << "  " << to_string(c[i]) << " [G/H" << i << "]";
    std::cout << "\n";
    total = total + e;
  }
  std::cout << "sum is the identity: " << (total == identity_element(ring) ? "yes" : "no") << "\n";
}
