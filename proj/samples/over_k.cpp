// L = C2 x (C3 : C4) over K = C4 via the projection with kernel <a, b>:
// its m-constants, B_K verdict, minimal groups, and the ideal count of the
// 2-restricted functor over C4.

#include <iostream>

#include <relb/relb.hpp>

int main() {
  using namespace relb;
  auto c3 = make_cyclic(3, "b");
  auto c4 = make_cyclic(4, "c");
  auto h = semidirect_product_from_generators(c3, c4, {cyclic_power_map(c3, -1)}, "C3 : C4");
  auto dp = direct_product(make_cyclic(2, "a"), h.group, "L");
  const Elem a = dp.pair(1, 0), b = dp.pair(0, h.inj_normal(1));
  auto p = Subgroup::generated_by(dp.group, std::vector<Elem>{a, b});
  auto q = quotient(dp.group, p, "C4");
  auto x = make_over_k(q.projection, "(L, phi)");

  MConstants m(x.L);
  for (const auto& n : normal_in_kernel(x))
    std::cout << "m(L, N) for |N| = " << n.order() << ": " << to_string(m(n)) << "\n";
  std::cout << "B_K-group: " << (is_bk_group(x, m) ? "yes" : "no") << "\n";

  for (const auto& g : minimal_groups(x))
    std::cout << "minimal group " << identify_label(g) << ", dim " << simple_dim(x, g) << "\n";

  auto lat = p_ideal_lattice(x.K(), 2);
  std::cout << "ideals of the 2-restricted functor over C4: " << lat.total_ideals.str() << "\n";
}
