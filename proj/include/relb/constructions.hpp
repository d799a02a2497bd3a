#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relb/group.hpp"

namespace relb {

inline bool is_prime(std::uint64_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
}

inline bool is_p_group(const Group& g, std::uint64_t p) { return is_power_of(g.order(), p); }

inline Group make_trivial() { return Group(); }

inline Group make_cyclic(std::size_t n, const std::string& gen_name = "c") {
  if (n == 0)
    throw PreconditionError("cyclic group of order 0");
  auto g = Group::from_function(
      n, [n](Elem a, Elem b) { return (a + b) % n; }, "C" + std::to_string(n), Validation::off);
  if (n == 1)
    return g;
  return g.with_generators({1}, {gen_name});
}

namespace detail {

inline std::vector<std::string> merged_names(const Group& a, const Group& b) {
  std::vector<std::string> names(a.generator_names().begin(), a.generator_names().end());
  std::vector<std::string> rhs(b.generator_names().begin(), b.generator_names().end());
  std::set<std::string> left(names.begin(), names.end());
  std::set<std::string> right(rhs.begin(), rhs.end());
  bool clash = std::any_of(rhs.begin(), rhs.end(), [&](auto& s) { return left.count(s); });
  if (clash) {
    for (auto& s : names)
      s += "_1";
    for (auto& s : rhs)
      s += "_2";
  }
  names.insert(names.end(), rhs.begin(), rhs.end());
  return names;
}

} // namespace detail

struct DirectProduct {
  Group group;
  Homomorphism proj1, proj2;  // G x H -> G, G x H -> H
  Homomorphism inj1, inj2;    // G -> G x H, H -> G x H

  std::size_t right_order() const { return proj2.target().order(); }
  Elem pair(Elem g, Elem h) const { return static_cast<Elem>(g * right_order() + h); }
};

// Element (g, h) has id g * |H| + h.
inline DirectProduct direct_product(const Group& a, const Group& b, std::string label = {}) {
  const std::size_t na = a.order(), nb = b.order();
  if (label.empty())
    label = a.label() + " x " + b.label();
  auto g = Group::from_function(
      na * nb,
      [&](Elem x, Elem y) {
        return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
      },
      std::move(label), Validation::off);
  std::vector<Elem> gens;
  for (Elem x : a.generators())
    gens.push_back(static_cast<Elem>(x * nb));
  for (Elem y : b.generators())
    gens.push_back(y);
  if (!gens.empty())
    g = g.with_generators(gens, detail::merged_names(a, b));
  std::vector<Elem> p1(na * nb), p2(na * nb), i1(na), i2(nb);
  for (Elem x = 0; x < na * nb; ++x) {
    p1[x] = static_cast<Elem>(x / nb);
    p2[x] = static_cast<Elem>(x % nb);
  }
  for (Elem x = 0; x < na; ++x)
    i1[x] = static_cast<Elem>(x * nb);
  for (Elem y = 0; y < nb; ++y)
    i2[y] = y;
  return DirectProduct{g,
                       Homomorphism::from_images(g, a, std::move(p1), Validation::off),
                       Homomorphism::from_images(g, b, std::move(p2), Validation::off),
                       Homomorphism::from_images(a, g, std::move(i1), Validation::off),
                       Homomorphism::from_images(b, g, std::move(i2), Validation::off)};
}

// f x g : A x B -> C x D on the given product groups.
inline Homomorphism product_map(const Homomorphism& f, const Homomorphism& g,
                                const DirectProduct& src, const DirectProduct& dst) {
  if (!(f.source() == src.proj1.target()) || !(g.source() == src.proj2.target()) ||
      !(f.target() == dst.proj1.target()) || !(g.target() == dst.proj2.target()))
    throw PreconditionError("product_map: factor mismatch");
  std::vector<Elem> im(src.group.order());
  for (Elem x = 0; x < im.size(); ++x)
    im[x] = dst.pair(f(src.proj1(x)), g(src.proj2(x)));
  return Homomorphism::from_images(src.group, dst.group, std::move(im), Validation::off);
}

struct SemidirectProduct {
  Group group;
  Homomorphism inj_normal;   // N -> N x| H
  Homomorphism inj_acting;   // H -> N x| H
  Homomorphism proj_acting;  // N x| H -> H
};

// action[h] is the automorphism of N (as an element permutation) attached to h.
// Element (n, h) has id n * |H| + h and (n1,h1)(n2,h2) = (n1 * h1(n2), h1 h2).
inline SemidirectProduct semidirect_product(const Group& n, const Group& h,
                                            const std::vector<std::vector<Elem>>& action,
                                            std::string label = {},
                                            Validation v = Validation::full) {
  const std::size_t nn = n.order(), nh = h.order();
  if (action.size() != nh)
    throw ValidationError("action must list one automorphism per element of the acting group");
  for (const auto& a : action) {
    if (a.size() != nn)
      throw ValidationError("action entry is not a map on the normal factor");
    ElementSet seen(nn);
    for (Elem x : a) {
      if (x >= nn)
        throw ValidationError("action image out of range");
      seen.set(x);
    }
    if (seen.count() != nn)
      throw ValidationError("action image is not a permutation");
    for (Elem x = 0; x < nn; ++x)
      for (Elem y = 0; y < nn; ++y)
        if (a[n.mul(x, y)] != n.mul(a[x], a[y]))
          throw ValidationError("action image is not an automorphism");
  }
  for (Elem x = 0; x < nn; ++x)
    if (action[0][x] != x)
      throw ValidationError("identity does not act trivially");
  if (v == Validation::full) {
    for (Elem a = 0; a < nh; ++a)
      for (Elem b = 0; b < nh; ++b) {
        const auto& ab = action[h.mul(a, b)];
        for (Elem x = 0; x < nn; ++x)
          if (ab[x] != action[a][action[b][x]])
            throw ValidationError("action is not a homomorphism into Aut(N)");
      }
  }
  if (label.empty())
    label = n.label() + " : " + h.label();
  auto g = Group::from_function(
      nn * nh,
      [&](Elem x, Elem y) {
        const Elem n1 = x / nh, h1 = x % nh, n2 = y / nh, h2 = y % nh;
        return n.mul(n1, action[h1][n2]) * nh + h.mul(h1, h2);
      },
      std::move(label), Validation::off);
  std::vector<Elem> gens;
  for (Elem x : n.generators())
    gens.push_back(static_cast<Elem>(x * nh));
  for (Elem y : h.generators())
    gens.push_back(y);
  if (!gens.empty())
    g = g.with_generators(gens, detail::merged_names(n, h));
  std::vector<Elem> in(nn), ih(nh), ph(nn * nh);
  for (Elem x = 0; x < nn; ++x)
    in[x] = static_cast<Elem>(x * nh);
  for (Elem y = 0; y < nh; ++y)
    ih[y] = y;
  for (Elem z = 0; z < nn * nh; ++z)
    ph[z] = static_cast<Elem>(z % nh);
  return SemidirectProduct{g, Homomorphism::from_images(n, g, std::move(in), Validation::off),
                           Homomorphism::from_images(h, g, std::move(ih), Validation::off),
                           Homomorphism::from_images(g, h, std::move(ph), Validation::off)};
}

// Action given on the generators of H only; extended and checked for consistency.
inline SemidirectProduct semidirect_product_from_generators(
    const Group& n, const Group& h, const std::vector<std::vector<Elem>>& generator_action,
    std::string label = {}, Validation v = Validation::full) {
  auto gens = h.generators();
  if (generator_action.size() != gens.size())
    throw ValidationError("need one automorphism per generator of the acting group");
  const std::size_t nn = n.order();
  std::vector<Elem> id(nn);
  std::iota(id.begin(), id.end(), Elem{0});
  std::vector<std::vector<Elem>> action(h.order());
  action[0] = id;
  std::vector<Elem> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem y = h.mul(x, gens[j]);
      std::vector<Elem> comp(nn);
      for (Elem e = 0; e < nn; ++e)
        comp[e] = action[x][generator_action[j][e]];
      if (action[y].empty()) {
        action[y] = std::move(comp);
        queue.push_back(y);
      } else if (action[y] != comp) {
        throw ValidationError("generator action does not define a homomorphism into Aut(N)");
      }
    }
  }
  return semidirect_product(n, h, action, std::move(label), v);
}

struct Quotient {
  Group group;
  Homomorphism projection;  // G -> G/N
};

// Cosets are numbered by increasing minimal representative, so the identity
// coset is 0 and the numbering is deterministic.
inline Quotient quotient(const Group& g, const Subgroup& n, std::string label = {}) {
  if (!(n.parent() == g))
    throw PreconditionError("quotient: subgroup of a different group");
  if (!n.is_normal())
    throw PreconditionError("quotient: subgroup is not normal in " + g.label());
  const std::size_t order = g.order();
  std::vector<Elem> coset(order, Homomorphism::unset);
  std::vector<Elem> reps;
  auto nelems = n.elements();
  for (Elem x = 0; x < order; ++x) {
    if (coset[x] != Homomorphism::unset)
      continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem y : nelems)
      coset[g.mul(x, y)] = id;
  }
  const std::size_t m = reps.size();
  if (label.empty())
    label = n.is_trivial() ? g.label() : g.label() + " / N" + std::to_string(n.order());
  auto q = Group::from_function(
      m, [&](Elem a, Elem b) { return coset[g.mul(reps[a], reps[b])]; }, std::move(label),
      Validation::off);
  std::vector<Elem> gens;
  std::vector<std::string> names;
  auto gg = g.generators();
  auto gn = g.generator_names();
  for (std::size_t i = 0; i < gg.size(); ++i) {
    const Elem img = coset[gg[i]];
    if (img == 0 || std::find(gens.begin(), gens.end(), img) != gens.end())
      continue;
    gens.push_back(img);
    names.push_back(gn[i]);
  }
  if (!gens.empty())
    q = q.with_generators(gens, names);
  return Quotient{q, Homomorphism::from_images(g, q, std::move(coset), Validation::off)};
}

// The map G/N -> X induced by f : G -> X when N <= Ker f.
inline Homomorphism induced_on_quotient(const Homomorphism& f, const Quotient& q) {
  if (!(q.projection.source() == f.source()))
    throw PreconditionError("induced_on_quotient: source mismatch");
  if (!q.projection.kernel().is_subgroup_of(f.kernel()))
    throw PreconditionError("induced_on_quotient: kernel not contained in Ker f");
  std::vector<Elem> im(q.group.order(), 0);
  for (Elem x = 0; x < f.source().order(); ++x)
    im[q.projection(x)] = f(x);
  return Homomorphism::from_images(q.group, f.target(), std::move(im), Validation::off);
}

// The subgroup as a group in its own right (elements renumbered in increasing
// order), together with its embedding into the parent.
struct EmbeddedGroup {
  Group group;
  Homomorphism embedding;
};

inline EmbeddedGroup as_group(const Subgroup& h, std::string label = {}) {
  const Group& g = h.parent();
  auto elems = h.elements();
  std::vector<Elem> rank(g.order(), Homomorphism::unset);
  for (Elem i = 0; i < elems.size(); ++i)
    rank[elems[i]] = i;
  if (label.empty())
    label = h.is_whole() ? g.label() : "H" + std::to_string(h.order()) + "<" + g.label();
  auto sub = Group::from_function(
      elems.size(), [&](Elem a, Elem b) { return rank[g.mul(elems[a], elems[b])]; },
      std::move(label), Validation::off);
  return EmbeddedGroup{sub, Homomorphism::from_images(sub, g, std::move(elems), Validation::off)};
}

// Automorphism of n given by generator images, as an element permutation.
inline std::vector<Elem> automorphism_images(const Group& n, std::span<const Elem> gens,
                                             std::span<const Elem> images) {
  auto f = Homomorphism::extend(n, n, gens, images);
  if (!f || !f->is_bijective())
    throw ValidationError("generator images do not define an automorphism of " + n.label());
  return {f->images().begin(), f->images().end()};
}

// x -> x^k on a cyclic group built by make_cyclic.
inline std::vector<Elem> cyclic_power_map(const Group& c, long long k) {
  return automorphism_images(c, c.generators(), std::vector<Elem>{c.pow(c.generators()[0], k)});
}

inline Subgroup normal_closure(const Group& g, std::span<const Elem> elems) {
  std::vector<Elem> conjugates;
  for (Elem x : elems)
    for (Elem y = 0; y < g.order(); ++y)
      conjugates.push_back(g.conj(y, x));
  std::sort(conjugates.begin(), conjugates.end());
  conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
  return Subgroup::generated_by(g, conjugates);
}

// O^p(G): generated by the elements of order prime to p.
inline Subgroup o_p_subgroup(const Group& g, std::uint64_t p) {
  require_prime(p);
  std::vector<Elem> gens;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) % p != 0)
      gens.push_back(x);
  return Subgroup::generated_by(g, gens);
}

// G^[p] = G / O^p(G)
inline Quotient p_residual_quotient(const Group& g, std::uint64_t p) {
  return quotient(g, o_p_subgroup(g, p), g.label() + "^[" + std::to_string(p) + "]");
}

// One conjugation map per coset of the center, identity first.
inline std::vector<Homomorphism> inner_automorphisms(const Group& k) {
  std::vector<Homomorphism> out;
  std::set<std::vector<Elem>> seen;
  for (Elem g = 0; g < k.order(); ++g) {
    std::vector<Elem> im(k.order());
    for (Elem x = 0; x < k.order(); ++x)
      im[x] = k.conj(g, x);
    if (seen.insert(im).second)
      out.push_back(Homomorphism::from_images(k, k, std::move(im), Validation::off));
  }
  return out;
}

// Points are 0..degree-1. Products compose left to right: (st)(i) = t(s(i)).
inline Group from_permutations(std::size_t degree,
                               const std::vector<std::vector<std::uint32_t>>& gens,
                               std::string label, std::vector<std::string> names = {},
                               std::size_t max_order = 4096) {
  using Perm = std::vector<std::uint32_t>;
  for (const auto& s : gens) {
    if (s.size() != degree)
      throw ValidationError("permutation has wrong degree");
    std::vector<bool> hit(degree);
    for (auto i : s) {
      if (i >= degree || hit[i])
        throw ValidationError("not a permutation");
      hit[i] = true;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  auto compose_lr = [&](const Perm& s, const Perm& t) {
    Perm r(degree);
    for (std::size_t i = 0; i < degree; ++i)
      r[i] = t[s[i]];
    return r;
  };
  std::map<Perm, Elem> index{{id, 0}};
  std::vector<Perm> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : gens) {
      auto y = compose_lr(elems[head], s);
      if (index.emplace(y, static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (elems.size() > max_order)
          throw CapExceeded("permutation group order exceeds " + std::to_string(max_order));
      }
    }
  }
  const std::size_t n = elems.size();
  auto g = Group::from_function(
      n, [&](Elem a, Elem b) { return index.at(compose_lr(elems[a], elems[b])); },
      std::move(label), Validation::off);
  if (gens.empty())
    return g;
  std::vector<Elem> ids;
  for (const auto& s : gens)
    ids.push_back(index.at(s));
  if (names.empty())
    for (std::size_t i = 0; i < gens.size(); ++i)
      names.push_back("s" + std::to_string(i + 1));
  if (names.size() != ids.size())
    throw ValidationError("generator name count mismatch");
  // Duplicate or identity generators are dropped from the named list.
  std::vector<Elem> keep;
  std::vector<std::string> keep_names;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == 0 || std::find(keep.begin(), keep.end(), ids[i]) != keep.end())
      continue;
    keep.push_back(ids[i]);
    keep_names.push_back(names[i]);
  }
  if (keep.empty())
    return g;
  return g.with_generators(keep, keep_names);
}

inline Group make_symmetric(std::size_t n) {
  if (n < 2)
    return make_trivial().relabeled("S" + std::to_string(n));
  std::vector<std::uint32_t> cycle(n), swap(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % n;
    swap[i] = i;
  }
  std::swap(swap[0], swap[1]);
  if (n == 2)
    return from_permutations(n, {swap}, "S2", {"t"});
  return from_permutations(n, {cycle, swap}, "S" + std::to_string(n), {"s", "t"});
}

inline Group make_alternating(std::size_t n) {
  if (n < 3)
    return make_trivial().relabeled("A" + std::to_string(n));
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::uint32_t k = 2; k < n; ++k) {
    std::vector<std::uint32_t> c(n);
    std::iota(c.begin(), c.end(), 0u);
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.push_back(c);
  }
  return from_permutations(n, gens, "A" + std::to_string(n));
}

// Dihedral group of order 2n: rotations r^i and reflections r^i s.
inline Group make_dihedral(std::size_t n) {
  if (n == 0)
    throw PreconditionError("dihedral group needs n >= 1");
  auto g = Group::from_function(
      2 * n,
      [n](Elem a, Elem b) -> Elem {
        // id = 2*i + j  <->  r^i s^j
        const Elem i1 = a / 2, j1 = a % 2, i2 = b / 2, j2 = b % 2;
        const Elem i = static_cast<Elem>(j1 ? (i1 + n - i2) % n : (i1 + i2) % n);
        return 2 * i + (j1 ^ j2);
      },
      "D" + std::to_string(2 * n), Validation::off);
  if (n == 1)
    return g.with_generators({1}, {"s"});
  return g.with_generators({2, 1}, {"r", "s"});
}

// Dicyclic group of order 4n: a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1.
// n = 2 gives Q8, n = 3 gives C3 x| C4.
inline Group make_dicyclic(std::size_t n) {
  if (n == 0)
    throw PreconditionError("dicyclic group needs n >= 1");
  const std::size_t m = 2 * n;
  auto g = Group::from_function(
      2 * m,
      [m, n](Elem a, Elem b) -> Elem {
        // id = 2*k + j  <->  a^k x^j
        const std::size_t k1 = a / 2, j1 = a % 2, k2 = b / 2, j2 = b % 2;
        std::size_t k;
        if (!j1)
          k = (k1 + k2) % m;
        else if (!j2)
          k = (k1 + m - k2) % m;
        else
          k = (k1 + m - k2 + n) % m;
        return static_cast<Elem>(2 * k + (j1 ^ j2));
      },
      "Dic" + std::to_string(n), Validation::off);
  return g.with_generators({2, 1}, {"a", "x"});
}

} // namespace relb
