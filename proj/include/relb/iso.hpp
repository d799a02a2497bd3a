#pragma once

// Isomorphism testing by backtracking over images of a generating set.

#include <functional>
#include <optional>
#include <vector>

#include "relb/group.hpp"

namespace relb {

// filter(j, y): may generator j of the source be sent to y?
using ImageFilter = std::function<bool(std::size_t, Elem)>;

namespace detail {

template <class Visit>
bool iso_search(const Group& a, const Group& b, std::span<const Elem> gens,
                const std::vector<std::vector<Elem>>& cand, std::vector<Elem>& chosen,
                Visit& visit) {
  const std::size_t k = chosen.size();
  if (k == gens.size()) {
    auto map = Homomorphism::extend_partial(a, b, gens, chosen);
    return visit(Homomorphism::from_images(a, b, std::move(*map), Validation::off));
  }
  for (Elem y : cand[k]) {
    chosen.push_back(y);
    auto part = Homomorphism::extend_partial(a, b, gens.first(k + 1), chosen);
    bool ok = part.has_value();
    if (ok) {
      // injective on the subgroup generated so far
      ElementSet seen(b.order());
      std::size_t dom = 0;
      for (Elem img : *part) {
        if (img == Homomorphism::unset)
          continue;
        ++dom;
        if (seen.test(img)) {
          ok = false;
          break;
        }
        seen.set(img);
      }
      if (ok && k + 1 == gens.size() && dom != a.order())
        ok = false;
    }
    if (ok && iso_search(a, b, gens, cand, chosen, visit))
      return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace detail

// Cheap necessary conditions for a ≅ b.
inline bool iso_invariants_match(const Group& a, const Group& b) {
  return a.order() == b.order() && a.order_profile() == b.order_profile() &&
         a.is_abelian() == b.is_abelian();
}

// Calls visit(f) for each isomorphism f: a -> b allowed by the filter until
// visit returns true. Returns whether visit stopped the search.
template <class Visit>
bool for_each_isomorphism(const Group& a, const Group& b, Visit&& visit,
                          const ImageFilter& filter = {}) {
  if (!iso_invariants_match(a, b))
    return false;
  auto gens = a.generators();
  std::vector<std::vector<Elem>> cand(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto o = a.element_order(gens[j]);
    for (Elem y = 0; y < b.order(); ++y)
      if (b.element_order(y) == o && (!filter || filter(j, y)))
        cand[j].push_back(y);
    if (cand[j].empty())
      return false;
  }
  if (gens.empty())
    return visit(Homomorphism::trivial(a, b));
  std::vector<Elem> chosen;
  return detail::iso_search(a, b, gens, cand, chosen, visit);
}

inline std::optional<Homomorphism> find_isomorphism(const Group& a, const Group& b,
                                                    const ImageFilter& filter = {}) {
  std::optional<Homomorphism> found;
  for_each_isomorphism(
      a, b,
      [&](const Homomorphism& f) {
        found = f;
        return true;
      },
      filter);
  return found;
}

inline bool are_isomorphic(const Group& a, const Group& b) {
  return find_isomorphism(a, b).has_value();
}

} // namespace relb
