#pragma once

// One representative of every isomorphism class of groups of order <= 16.

#include <string>
#include <vector>

#include "relb/constructions.hpp"
#include "relb/iso.hpp"

namespace relb {

inline constexpr std::size_t catalogue_max_order = 16;

namespace detail {

inline Group cyclic_semidirect(std::size_t n, std::size_t m, long long k, std::string label) {
  auto cn = make_cyclic(n, "x");
  auto cm = make_cyclic(m, "y");
  auto sd = semidirect_product_from_generators(cn, cm, {cyclic_power_map(cn, k)}, label);
  return sd.group.relabeled(std::move(label));
}

inline Group product(const Group& a, const Group& b, std::string label) {
  return direct_product(a, b, std::move(label)).group;
}

inline std::vector<Group> build_catalogue() {
  std::vector<Group> out;
  auto c = [](std::size_t n) { return make_cyclic(n); };
  out.push_back(make_trivial());
  for (std::size_t n = 2; n <= 16; ++n) {
    switch (n) {
    case 4:
      out.push_back(c(4));
      out.push_back(product(c(2), c(2), "C2 x C2"));
      break;
    case 6:
      out.push_back(c(6));
      out.push_back(make_symmetric(3));
      break;
    case 8:
      out.push_back(c(8));
      out.push_back(product(c(4), c(2), "C4 x C2"));
      out.push_back(product(product(c(2), c(2), "C2 x C2"), c(2), "C2 x C2 x C2"));
      out.push_back(make_dihedral(4));
      out.push_back(make_dicyclic(2).relabeled("Q8"));
      break;
    case 9:
      out.push_back(c(9));
      out.push_back(product(c(3), c(3), "C3 x C3"));
      break;
    case 10:
      out.push_back(c(10));
      out.push_back(make_dihedral(5));
      break;
    case 12:
      out.push_back(c(12));
      out.push_back(product(c(6), c(2), "C6 x C2"));
      out.push_back(make_dihedral(6));
      out.push_back(make_alternating(4));
      out.push_back(make_dicyclic(3).relabeled("C3 : C4"));
      break;
    case 14:
      out.push_back(c(14));
      out.push_back(make_dihedral(7));
      break;
    case 16: {
      out.push_back(c(16));
      out.push_back(product(c(4), c(4), "C4 x C4"));
      {
        auto n42 = product(c(4), c(2), "C4 x C2");
        // a -> ab, b -> b with a = (1,0), b = (0,1)
        auto act = automorphism_images(n42, std::vector<Elem>{2, 1}, std::vector<Elem>{3, 1});
        auto sd = semidirect_product_from_generators(n42, c(2), {act});
        out.push_back(sd.group.relabeled("(C4 x C2) : C2"));
      }
      out.push_back(cyclic_semidirect(4, 4, -1, "C4 : C4"));
      out.push_back(product(c(8), c(2), "C8 x C2"));
      out.push_back(cyclic_semidirect(8, 2, 5, "M16"));
      out.push_back(make_dihedral(8));
      out.push_back(cyclic_semidirect(8, 2, 3, "SD16"));
      out.push_back(make_dicyclic(4).relabeled("Q16"));
      out.push_back(product(product(c(4), c(2), "C4 x C2"), c(2), "C4 x C2 x C2"));
      out.push_back(product(c(2), make_dihedral(4), "C2 x D8"));
      out.push_back(product(c(2), make_dicyclic(2).relabeled("Q8"), "C2 x Q8"));
      {
        // D8 x C4 modulo the diagonal central subgroup <(r^2, c^2)>
        auto dp = direct_product(make_dihedral(4), c(4));
        const Elem z = dp.pair(4, 2);
        auto q = quotient(dp.group, Subgroup::generated_by(dp.group, std::vector<Elem>{z}));
        out.push_back(q.group.relabeled("C4 o D8"));
      }
      auto v = product(c(2), c(2), "C2 x C2");
      out.push_back(product(v, v, "C2 x C2 x C2 x C2"));
      break;
    }
    default:
      out.push_back(c(n));
    }
  }
  return out;
}

} // namespace detail

// All groups of order <= max_order (max_order <= 16), ordered by order.
inline std::vector<Group> small_groups(std::size_t max_order = catalogue_max_order) {
  if (max_order > catalogue_max_order)
    throw CapExceeded("group catalogue only covers orders up to " +
                      std::to_string(catalogue_max_order));
  static const std::vector<Group> all = detail::build_catalogue();
  std::vector<Group> out;
  for (const auto& g : all)
    if (g.order() <= max_order)
      out.push_back(g);
  return out;
}

inline std::vector<Group> groups_of_order(std::size_t n) {
  std::vector<Group> out;
  for (const auto& g : small_groups(n))
    if (g.order() == n)
      out.push_back(g);
  return out;
}

// Index into small_groups() of the class isomorphic to g.
inline std::size_t catalogue_index(const Group& g) {
  auto all = small_groups();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (are_isomorphic(g, all[i]))
      return i;
  throw PreconditionError("group " + g.label() + " is not in the catalogue");
}

} // namespace relb
