#pragma once

// Groups over a fixed group K: pairs (L, phi: L -> K), morphisms commuting
// with the structure maps up to an inner automorphism of K.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "relb/burnside.hpp"
#include "relb/catalogue.hpp"
#include "relb/constructions.hpp"
#include "relb/iso.hpp"

namespace relb {

struct GroupOverK {
  Group L;
  Homomorphism phi;
  std::string label;

  const Group& K() const { return phi.target(); }
};

inline GroupOverK make_over_k(const Homomorphism& phi, std::string label = {}) {
  if (label.empty())
    label = "(" + phi.source().label() + ", " + phi.source().label() + " -> " +
            phi.target().label() + ")";
  return GroupOverK{phi.source(), phi, std::move(label)};
}

// (H, j_H) for a subgroup H of K
inline GroupOverK subgroup_over_k(const Subgroup& h, std::string label = {}) {
  auto e = as_group(h);
  if (label.empty())
    label = "(" + e.group.label() + ", incl)";
  return GroupOverK{e.group, e.embedding, std::move(label)};
}

// (L, L -> 1)
inline GroupOverK over_trivial(const Group& l) {
  return GroupOverK{l, Homomorphism::trivial(l, make_trivial()), "(" + l.label() + ", !)"};
}

struct GraphSubgroup {
  DirectProduct product;  // L x K
  Subgroup graph;         // {(l, phi(l))}
};

inline GraphSubgroup graph_subgroup(const GroupOverK& x) {
  auto dp = direct_product(x.L, x.K());
  ElementSet m(dp.group.order());
  for (Elem l = 0; l < x.L.order(); ++l)
    m.set(dp.pair(l, x.phi(l)));
  auto s = Subgroup::from_members(dp.group, std::move(m), Validation::off);
  return GraphSubgroup{std::move(dp), std::move(s)};
}

struct PGraphSubgroup {
  Quotient residual;      // L -> L^[p]
  DirectProduct product;  // L^[p] x K
  Subgroup graph;         // {(l O^p(L), phi(l))}
};

inline PGraphSubgroup p_graph_subgroup(const GroupOverK& x, std::uint64_t p) {
  auto res = p_residual_quotient(x.L, p);
  auto dp = direct_product(res.group, x.K());
  ElementSet m(dp.group.order());
  for (Elem l = 0; l < x.L.order(); ++l)
    m.set(dp.pair(res.projection(l), x.phi(l)));
  auto s = Subgroup::from_members(dp.group, std::move(m), Validation::off);
  return PGraphSubgroup{std::move(res), std::move(dp), std::move(s)};
}

// Conjugacy class id of each element of k (smallest element of its class).
inline std::vector<Elem> element_class_ids(const Group& k) {
  std::vector<Elem> id(k.order());
  for (Elem x = 0; x < k.order(); ++x) {
    Elem best = x;
    for (Elem g = 0; g < k.order(); ++g)
      best = std::min(best, k.conj(g, x));
    id[x] = best;
  }
  return id;
}

namespace detail {

inline void require_same_k(const GroupOverK& x, const GroupOverK& y) {
  if (!(x.K() == y.K()))
    throw PreconditionError("groups over different K: " + x.K().label() + " vs " +
                            y.K().label());
}

} // namespace detail

// Exists an inner automorphism i of K with i o phi = phi' o f.
inline bool is_morphism_over_k(const Homomorphism& f, const GroupOverK& x, const GroupOverK& y) {
  detail::require_same_k(x, y);
  if (!(f.source() == x.L) || !(f.target() == y.L))
    throw PreconditionError("is_morphism_over_k: map does not go from L to L'");
  auto rhs = compose(y.phi, f);
  for (const auto& i : inner_automorphisms(x.K()))
    if (compose(i, x.phi) == rhs)
      return true;
  return false;
}

// Invariant of (L, phi) up to isomorphism over K: for each element its order
// and the conjugacy class of its image.
inline std::vector<std::pair<std::uint32_t, Elem>> over_k_profile(const GroupOverK& x,
                                                                  const std::vector<Elem>& cls) {
  std::vector<std::pair<std::uint32_t, Elem>> v(x.L.order());
  for (Elem l = 0; l < x.L.order(); ++l)
    v[l] = {x.L.element_order(l), cls[x.phi(l)]};
  std::sort(v.begin(), v.end());
  return v;
}

// An isomorphism f: L -> L' with i o phi = phi' o f for some inner i.
inline std::optional<Homomorphism> find_isomorphism_over_k(const GroupOverK& x,
                                                           const GroupOverK& y) {
  detail::require_same_k(x, y);
  if (!iso_invariants_match(x.L, y.L))
    return std::nullopt;
  const auto cls = element_class_ids(x.K());
  if (over_k_profile(x, cls) != over_k_profile(y, cls))
    return std::nullopt;
  auto gens = x.L.generators();
  for (const auto& i : inner_automorphisms(x.K())) {
    std::vector<Elem> want;
    for (Elem g : gens)
      want.push_back(i(x.phi(g)));
    auto f = find_isomorphism(x.L, y.L,
                              [&](std::size_t j, Elem img) { return y.phi(img) == want[j]; });
    if (f)
      return f;
  }
  return std::nullopt;
}

inline bool is_isomorphic_over_k(const GroupOverK& x, const GroupOverK& y) {
  return find_isomorphism_over_k(x, y).has_value();
}

// (L/N, phi/N) for normal N <= Ker phi
inline GroupOverK quotient_over_k(const GroupOverK& x, const Subgroup& n, std::string label = {}) {
  if (!n.is_subgroup_of(x.phi.kernel()))
    throw PreconditionError("quotient over K needs N <= Ker phi");
  auto q = quotient(x.L, n);
  if (label.empty())
    label = n.is_trivial() ? x.label : x.label + " / N" + std::to_string(n.order());
  return GroupOverK{q.group, induced_on_quotient(x.phi, q), std::move(label)};
}

// Normal subgroups of L contained in Ker phi, canonical order.
inline std::vector<Subgroup> normal_in_kernel(const GroupOverK& x) {
  auto k = x.phi.kernel();
  std::vector<Subgroup> out;
  for (auto& n : normal_subgroups(x.L))
    if (n.is_subgroup_of(k))
      out.push_back(std::move(n));
  return out;
}

// x ->> y: some normal N <= Ker phi_x with (L_x/N, phi_x/N) isomorphic to y.
inline bool is_quotient_over_k(const GroupOverK& x, const GroupOverK& y) {
  detail::require_same_k(x, y);
  if (x.L.order() % y.L.order() != 0)
    return false;
  const std::size_t nord = x.L.order() / y.L.order();
  if (x.phi.kernel().order() % nord != 0)
    return false;
  // images must be conjugate in K, so the image orders agree
  if (x.phi.image().order() != y.phi.image().order())
    return false;
  for (const auto& n : normal_in_kernel(x))
    if (n.order() == nord && is_isomorphic_over_k(quotient_over_k(x, n), y))
      return true;
  return false;
}

// ---- B_K-groups --------------------------------------------------------------

inline bool is_bk_group(const GroupOverK& x, const MConstants& m) {
  for (const auto& n : normal_in_kernel(x))
    if (!n.is_trivial() && m(n) != 0)
      return false;
  return true;
}

inline bool is_bk_group(const GroupOverK& x) { return is_bk_group(x, MConstants(x.L)); }

struct BetaResult {
  GroupOverK beta;
  Subgroup q;  // the chosen normal subgroup of L
  std::vector<std::pair<Subgroup, Rational>> m_values;  // m_{L,N} for N <= Ker phi normal
};

// Largest quotient B_K-group: Q <= Ker phi normal of maximal order with
// m_{L,Q} != 0, ties broken by canonical subgroup order.
inline BetaResult beta_k_details(const GroupOverK& x, const MConstants& m) {
  std::vector<std::pair<Subgroup, Rational>> vals;
  std::optional<Subgroup> best;
  for (const auto& n : normal_in_kernel(x)) {
    auto v = m(n);
    if (v != 0 && (!best || n.order() > best->order()))
      best = n;
    vals.emplace_back(n, v);
  }
  // N = 1 always qualifies
  auto beta = quotient_over_k(x, *best, best->is_trivial() ? x.label : "beta(" + x.label + ")");
  return BetaResult{std::move(beta), *best, std::move(vals)};
}

inline BetaResult beta_k_details(const GroupOverK& x) {
  return beta_k_details(x, MConstants(x.L));
}

inline GroupOverK beta_k(const GroupOverK& x) { return beta_k_details(x).beta; }

// All maximal-order Q with m_{L,Q} != 0 (the choice in beta_k is the first).
inline std::vector<Subgroup> beta_k_candidates(const GroupOverK& x, const MConstants& m) {
  std::vector<Subgroup> out;
  for (const auto& n : normal_in_kernel(x)) {
    if (m(n) == 0)
      continue;
    if (!out.empty() && n.order() > out.front().order())
      out.clear();
    if (out.empty() || n.order() == out.front().order())
      out.push_back(n);
  }
  return out;
}

inline Subgroup p_persistence_subgroup(const GroupOverK& x, std::uint64_t p) {
  return o_p_subgroup(x.L, p).intersect(x.phi.kernel());
}

inline bool is_p_persistent(const GroupOverK& x, std::uint64_t p, const MConstants& m) {
  return m(p_persistence_subgroup(x, p)) != 0;
}

inline bool is_p_persistent(const GroupOverK& x, std::uint64_t p) {
  require_prime(p);
  return is_p_persistent(x, p, MConstants(x.L));
}

// ---- classes -----------------------------------------------------------------

struct OverKClass {
  GroupOverK representative;
  std::size_t member_count = 1;
};

// Interns groups over K up to isomorphism over K. The first group seen in a
// class stays its representative.
class OverKRegistry {
public:
  explicit OverKRegistry(Group k) : k_(std::move(k)), cls_(element_class_ids(k_)) {}

  const Group& K() const { return k_; }

  // Index of the class of x, adding a new class when none matches.
  std::size_t intern(const GroupOverK& x) {
    std::lock_guard lock(mu_);
    if (!(x.K() == k_))
      throw PreconditionError("registry is over " + k_.label());
    auto key = std::make_tuple(x.L.order(), over_k_profile(x, cls_), x.phi.kernel().order());
    auto& bucket = buckets_[key];
    for (auto i : bucket)
      if (is_isomorphic_over_k(classes_[i].representative, x)) {
        ++classes_[i].member_count;
        return i;
      }
    classes_.push_back(OverKClass{x, 1});
    bucket.push_back(classes_.size() - 1);
    return classes_.size() - 1;
  }

  std::optional<std::size_t> find(const GroupOverK& x) const {
    std::lock_guard lock(mu_);
    auto key = std::make_tuple(x.L.order(), over_k_profile(x, cls_), x.phi.kernel().order());
    auto it = buckets_.find(key);
    if (it == buckets_.end())
      return std::nullopt;
    for (auto i : it->second)
      if (is_isomorphic_over_k(classes_[i].representative, x))
        return i;
    return std::nullopt;
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return classes_.size();
  }
  std::vector<OverKClass> classes() const {
    std::lock_guard lock(mu_);
    return classes_;
  }

private:
  using Key = std::tuple<std::size_t, std::vector<std::pair<std::uint32_t, Elem>>, std::size_t>;
  Group k_;
  std::vector<Elem> cls_;
  mutable std::mutex mu_;
  std::vector<OverKClass> classes_;
  std::map<Key, std::vector<std::size_t>> buckets_;
};

// Every homomorphism L -> K.
inline std::vector<Homomorphism> all_homomorphisms(const Group& l, const Group& k) {
  auto gens = l.generators();
  std::vector<std::vector<Elem>> cand(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Elem y = 0; y < k.order(); ++y)
      if (l.element_order(gens[j]) % k.element_order(y) == 0)
        cand[j].push_back(y);
  std::vector<Homomorphism> out;
  std::vector<Elem> chosen;
  auto rec = [&](auto&& self) -> void {
    if (chosen.size() == gens.size()) {
      if (auto f = Homomorphism::extend(l, k, gens, chosen))
        out.push_back(std::move(*f));
      return;
    }
    for (Elem y : cand[chosen.size()]) {
      chosen.push_back(y);
      if (Homomorphism::extend_partial(l, k, gens.first(chosen.size()), chosen))
        self(self);
      chosen.pop_back();
    }
  };
  rec(rec);
  return out;
}

// All classes of groups over K with |L| <= max_order (catalogue bound).
inline std::vector<OverKClass> enumerate_over_k(const Group& k, std::size_t max_order) {
  OverKRegistry reg(k);
  for (const auto& l : small_groups(max_order))
    for (const auto& phi : all_homomorphisms(l, k))
      reg.intern(make_over_k(phi));
  return reg.classes();
}

// ---- p-persistent B_K-groups ---------------------------------------------------

enum class BkCase { embedding, cp_extension, cp2_extension };

inline const char* case_name(BkCase c) {
  switch (c) {
  case BkCase::embedding: return "embedding";
  case BkCase::cp_extension: return "cp_extension";
  case BkCase::cp2_extension: return "cp2_extension";
  }
  return "?";
}

struct ClassifiedBk {
  OverKClass cls;
  BkCase tag;
  std::size_t k_class;  // conjugacy class of H in the subgroup lattice of K
};

// Per class of subgroups H of K: (H, j_H); (C_p x H, j_H o pi) when H^[p] is
// cyclic and nontrivial; (C_p x C_p x H, j_H o pi) when H^[p] is trivial.
inline std::vector<ClassifiedBk> classify_p_persistent_bk(const Group& k, std::uint64_t p) {
  require_prime(p);
  auto lat = enumerate_subgroups(k);
  std::vector<ClassifiedBk> out;
  const auto ps = "C" + std::to_string(p);
  for (std::size_t c = 0; c < lat.class_count(); ++c) {
    const auto& h = lat.class_subgroup(c);
    auto jh = subgroup_over_k(h);
    out.push_back({OverKClass{jh, 1}, BkCase::embedding, c});
    auto res = p_residual_quotient(jh.L, p).group;
    if (res.order() > 1 && !res.is_cyclic())
      continue;
    Group ext;
    std::string label;
    if (res.order() > 1) {
      ext = make_cyclic(p);
      label = ps;
    } else {
      ext = direct_product(make_cyclic(p), make_cyclic(p), ps + " x " + ps).group;
      label = ps + " x " + ps;
    }
    auto dp = direct_product(ext, jh.L, label + " x " + jh.L.label());
    auto phi = compose(jh.phi, dp.proj2);
    out.push_back({OverKClass{GroupOverK{dp.group, phi,
                                         "(" + dp.group.label() + ", j o pi)"},
                              1},
                   res.order() > 1 ? BkCase::cp_extension : BkCase::cp2_extension, c});
  }
  return out;
}

} // namespace relb
