#pragma once

#include <relb/constructions.hpp>

namespace fixtures {

using namespace relb;

// C3 x| C4 with c b c^-1 = b^-1
inline SemidirectProduct c3_by_c4() {
  auto c3 = make_cyclic(3, "b");
  auto c4 = make_cyclic(4, "c");
  return semidirect_product_from_generators(c3, c4, {cyclic_power_map(c3, -1)}, "C3 : C4");
}

// L = C2 x (C3 x| C4), K = L/<a,b> cyclic of order 4, phi the projection.
struct WorkedExample {
  Group L;
  Group K;
  Homomorphism phi;
  Elem a, b, c;
};

inline WorkedExample worked_example() {
  auto sd = c3_by_c4();
  auto dp = direct_product(make_cyclic(2, "a"), sd.group, "C2 x (C3 : C4)");
  WorkedExample w;
  w.L = dp.group;
  w.a = dp.pair(1, 0);
  w.b = dp.pair(0, sd.inj_normal(1));
  w.c = dp.pair(0, sd.inj_acting(1));
  auto p = Subgroup::generated_by(w.L, std::vector<Elem>{w.a, w.b});
  auto q = quotient(w.L, p, "C4");
  w.K = q.group;
  w.phi = q.projection;
  return w;
}

inline Group s3() { return make_symmetric(3); }

} // namespace fixtures
