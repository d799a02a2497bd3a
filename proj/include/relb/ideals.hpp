#pragma once

// Ideals e_{L,phi} of the shifted Burnside functor G -> FB(G x K), simple
// module dimensions, and the lattice of closed families of B_K-groups.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relb/burnside.hpp"
#include "relb/over_k.hpp"
#include "relb/rational.hpp"

namespace relb {

// (X, p2) for X <= G x K
inline GroupOverK restricted_pair(const DirectProduct& gk, const Subgroup& x) {
  auto e = as_group(x);
  return GroupOverK{e.group, compose(gk.proj2, e.embedding),
                    "(X" + std::to_string(x.order()) + ", p2)"};
}

namespace detail {

inline void require_bk(const GroupOverK& bk) {
  if (!is_bk_group(bk))
    throw PreconditionError(bk.label + " is not a B_K-group");
}

inline void require_product_over(const DirectProduct& gk, const GroupOverK& bk) {
  if (!(gk.proj2.target() == bk.K()))
    throw PreconditionError("product is not over " + bk.K().label());
}

} // namespace detail

// Whether e_X lies in e_{L,phi}(G), i.e. (X, p2) ->> (L, phi).
inline bool ideal_membership(const DirectProduct& gk, const Subgroup& x, const GroupOverK& bk) {
  detail::require_product_over(gk, bk);
  if (x.order() % bk.L.order() != 0)
    return false;
  return is_quotient_over_k(restricted_pair(gk, x), bk);
}

struct IdealEvaluation {
  GroupOverK bk;
  Group G;
  DirectProduct product;  // G x K
  BurnsideRing ring;      // of G x K
  std::vector<std::size_t> basis_classes;
  std::vector<std::size_t> complement_classes;

  std::size_t dimension() const { return basis_classes.size(); }
  bool contains(std::size_t cls) const {
    return std::binary_search(basis_classes.begin(), basis_classes.end(), cls);
  }
};

inline IdealEvaluation ideal_eval(const GroupOverK& bk, const Group& g,
                                  const LatticeLimits& lim = {}) {
  detail::require_bk(bk);
  auto gk = direct_product(g, bk.K());
  auto ring = BurnsideRing::of(gk.group, lim);
  IdealEvaluation ev{bk, g, gk, ring, {}, {}};
  const auto& lat = ring.lattice();
  for (std::size_t c = 0; c < lat.class_count(); ++c)
    (ideal_membership(gk, lat.class_subgroup(c), bk) ? ev.basis_classes : ev.complement_classes)
        .push_back(c);
  return ev;
}

// Classes of X <= G x K with beta_K(X, p2) isomorphic to bk.
inline std::vector<std::size_t> simple_basis(const GroupOverK& bk, const Group& g,
                                             const LatticeLimits& lim = {}) {
  detail::require_bk(bk);
  auto gk = direct_product(g, bk.K());
  auto lat = enumerate_subgroups(gk.group, lim);
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < lat.class_count(); ++c) {
    const auto& x = lat.class_subgroup(c);
    // beta_K(X) is a quotient of X, so X ->> bk is necessary
    if (!ideal_membership(gk, x, bk))
      continue;
    if (is_isomorphic_over_k(beta_k(restricted_pair(gk, x)), bk))
      out.push_back(c);
  }
  return out;
}

inline std::size_t simple_dim(const GroupOverK& bk, const Group& g, const LatticeLimits& lim = {}) {
  return simple_basis(bk, g, lim).size();
}

// Label from the catalogue when g is small enough, otherwise its own.
inline std::string identify_label(const Group& g) {
  if (g.order() <= catalogue_max_order)
    for (const auto& h : groups_of_order(g.order()))
      if (are_isomorphic(g, h))
        return h.label();
  return g.label();
}

// L/N for N normal of maximal order with N meet Ker phi = 1, up to isomorphism.
inline std::vector<Group> minimal_groups(const GroupOverK& bk) {
  auto ker = bk.phi.kernel();
  std::vector<Subgroup> best;
  for (auto& n : normal_subgroups(bk.L)) {
    if (!n.intersect(ker).is_trivial())
      continue;
    if (!best.empty() && n.order() > best.front().order())
      best.clear();
    if (best.empty() || n.order() == best.front().order())
      best.push_back(std::move(n));
  }
  std::vector<Group> out;
  for (const auto& n : best) {
    auto q = quotient(bk.L, n).group;
    bool seen = false;
    for (const auto& h : out)
      seen = seen || are_isomorphic(h, q);
    if (!seen)
      out.push_back(q.relabeled(identify_label(q)));
  }
  return out;
}

// ---- posets of B_K-groups ---------------------------------------------------

struct PosetMode {
  enum Kind { p_restricted, truncated } kind = p_restricted;
  std::uint64_t p = 2;
  std::size_t max_order = 0;

  static PosetMode restricted(std::uint64_t p) { return {p_restricted, p, 0}; }
  static PosetMode truncate(std::size_t max_order) { return {truncated, 0, max_order}; }

  std::string describe() const {
    return kind == p_restricted ? "p-restricted(p=" + std::to_string(p) + ")"
                                : "truncated(|L|<=" + std::to_string(max_order) + ")";
  }
};

struct BkPoset {
  std::vector<OverKClass> nodes;
  std::vector<std::optional<ClassifiedBk>> origin;  // set in p-restricted mode
  std::vector<std::vector<bool>> quotient;          // quotient[i][j]: node i ->> node j
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  PosetMode mode;

  std::size_t size() const { return nodes.size(); }

  std::size_t component_count() const {
    std::vector<std::size_t> parent(size());
    for (std::size_t i = 0; i < size(); ++i)
      parent[i] = i;
    std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
      return parent[i] == i ? i : parent[i] = root(parent[i]);
    };
    for (auto [a, b] : covers)
      parent[root(a)] = root(b);
    std::size_t n = 0;
    for (std::size_t i = 0; i < size(); ++i)
      n += root(i) == i;
    return n;
  }
};

namespace detail {

inline void fill_relation(BkPoset& poset) {
  const auto n = poset.nodes.size();
  poset.quotient.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      poset.quotient[i][j] =
          i == j || is_quotient_over_k(poset.nodes[i].representative, poset.nodes[j].representative);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !poset.quotient[i][j])
        continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && poset.quotient[i][k] && poset.quotient[k][j])
          cover = false;
      if (cover)
        poset.covers.emplace_back(i, j);
    }
}

} // namespace detail

// Truncated mode only sees groups from the catalogue, so max_order <= 16.
inline BkPoset build_bk_poset(const Group& k, const PosetMode& mode) {
  BkPoset poset;
  poset.mode = mode;
  if (mode.kind == PosetMode::p_restricted) {
    for (auto& c : classify_p_persistent_bk(k, mode.p)) {
      poset.nodes.push_back(c.cls);
      poset.origin.emplace_back(std::move(c));
    }
  } else {
    for (auto& c : enumerate_over_k(k, mode.max_order))
      if (is_bk_group(c.representative)) {
        poset.nodes.push_back(std::move(c));
        poset.origin.emplace_back();
      }
  }
  detail::fill_relation(poset);
  return poset;
}

// Families P with: node in P and M ->> node imply M in P. Each family is a
// sorted list of node indices.
inline std::vector<std::vector<std::size_t>> closed_subsets(const BkPoset& poset,
                                                            std::size_t cap = 1000000) {
  const auto n = poset.size();
  // strictly larger quotient sources first
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return poset.nodes[a].representative.L.order() > poset.nodes[b].representative.L.order();
  });
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && poset.quotient[j][i])
        above[i].push_back(j);

  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> in(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      if (out.size() >= cap)
        throw CapExceeded("more than " + std::to_string(cap) + " closed subsets");
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (in[i])
          s.push_back(i);
      out.push_back(std::move(s));
      return;
    }
    const auto v = order[pos];
    rec(pos + 1);
    if (std::all_of(above[v].begin(), above[v].end(), [&](std::size_t u) { return in[u]; })) {
      in[v] = true;
      rec(pos + 1);
      in[v] = false;
    }
  };
  rec(0);
  return out;
}

struct LatticeComponent {
  std::size_t k_class;
  std::string h_label;
  std::string residual_label;  // H^[p]
  bool chain2;                 // H^[p] cyclic; otherwise an isolated node
};

struct IdealLatticeDescription {
  std::uint64_t p = 2;
  std::size_t c_count = 0;
  std::size_t nc_count = 0;
  Integer total_ideals = 1;
  std::vector<LatticeComponent> components;
};

inline IdealLatticeDescription p_ideal_lattice(const Group& k, std::uint64_t p) {
  require_prime(p);
  IdealLatticeDescription d;
  d.p = p;
  auto lat = enumerate_subgroups(k);
  for (std::size_t c = 0; c < lat.class_count(); ++c) {
    auto h = as_group(lat.class_subgroup(c)).group;
    auto res = p_residual_quotient(h, p).group;
    const bool cyc = res.is_cyclic();
    d.components.push_back({c, identify_label(h), identify_label(res), cyc});
    if (cyc) {
      ++d.c_count;
      d.total_ideals *= 3;
    } else {
      ++d.nc_count;
      d.total_ideals *= 2;
    }
  }
  return d;
}

} // namespace relb
