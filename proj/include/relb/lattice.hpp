#pragma once

// Subgroup lattice, conjugacy classes of subgroups, Möbius function and table
// of marks.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "relb/constructions.hpp"
#include "relb/group.hpp"

namespace relb {

struct LatticeLimits {
  std::size_t max_order = 128;
  std::size_t max_subgroups = 20000;
};

namespace detail {

struct LatticeData {
  Group parent;
  std::vector<Subgroup> subgroups;  // canonical order
  std::vector<std::vector<Elem>> gens;  // a small generating set per subgroup
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  std::vector<ElementSet> below;  // below[j].test(i)  <=>  S_i <= S_j
  std::vector<ElementSet> above;  // above[i].test(j)  <=>  S_i <= S_j
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> classes;  // members, ascending; front() is the rep
  std::vector<ElementSet> class_set;
};

} // namespace detail

class SubgroupLattice {
public:
  SubgroupLattice() = default;

  // Cyclic extension: every subgroup is reached from a cyclic one by
  // repeatedly adjoining one element.
  static SubgroupLattice build(const Group& g, const LatticeLimits& lim = {}) {
    if (g.order() > lim.max_order)
      throw CapExceeded("group " + g.label() + " has order " + std::to_string(g.order()) +
                        " above the configured bound " + std::to_string(lim.max_order));
    auto d = std::make_shared<detail::LatticeData>();
    d->parent = g;
    const std::size_t n = g.order();
    std::unordered_map<ElementSet, std::vector<Elem>, ElementSetHash> found;
    std::vector<ElementSet> queue;
    auto add = [&](ElementSet s, std::vector<Elem> gens) {
      auto [it, fresh] = found.emplace(std::move(s), std::move(gens));
      if (fresh) {
        if (found.size() > lim.max_subgroups)
          throw CapExceeded("more than " + std::to_string(lim.max_subgroups) +
                            " subgroups in " + g.label());
        queue.push_back(it->first);
      }
    };
    {
      ElementSet one(n);
      one.set(0);
      add(one, {});
    }
    for (Elem x = 1; x < n; ++x)
      add(g.generate(std::vector<Elem>{x}), {x});
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const ElementSet h = queue[head];
      const std::vector<Elem> hg = found.at(h);
      ElementSet done = h;
      const auto hm = members_of(h);
      for (Elem x = 1; x < n; ++x) {
        if (done.test(x))
          continue;
        for (Elem y : hm)
          done.set(g.mul(y, x));
        auto gens = hg;
        gens.push_back(x);
        auto s = g.generate(gens, h);
        add(std::move(s), std::move(gens));
      }
    }
    std::vector<std::pair<Subgroup, std::vector<Elem>>> subs;
    subs.reserve(found.size());
    for (auto& [set, gens] : found)
      subs.emplace_back(Subgroup::from_members(g, set, Validation::off), gens);
    std::sort(subs.begin(), subs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    const std::size_t m = subs.size();
    for (std::size_t i = 0; i < m; ++i) {
      d->index.emplace(subs[i].first.members(), i);
      d->subgroups.push_back(std::move(subs[i].first));
      d->gens.push_back(std::move(subs[i].second));
    }
    d->below.assign(m, ElementSet(m));
    d->above.assign(m, ElementSet(m));
    for (std::size_t j = 0; j < m; ++j) {
      const auto& sj = d->subgroups[j];
      for (std::size_t i = 0; i <= j; ++i) {
        const auto& si = d->subgroups[i];
        if (sj.order() % si.order() == 0 && si.is_subgroup_of(sj)) {
          d->below[j].set(i);
          d->above[i].set(j);
        }
      }
    }
    // conjugacy classes: orbits under conjugation by the generators of g
    d->class_of.assign(m, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i) {
      if (d->class_of[i] != SIZE_MAX)
        continue;
      const std::size_t c = d->classes.size();
      std::vector<std::size_t> orbit{i};
      d->class_of[i] = c;
      for (std::size_t h = 0; h < orbit.size(); ++h)
        for (Elem x : g.generators()) {
          auto conj = d->subgroups[orbit[h]].conjugate(x);
          const std::size_t k = d->index.at(conj.members());
          if (d->class_of[k] == SIZE_MAX) {
            d->class_of[k] = c;
            orbit.push_back(k);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      ElementSet cs(m);
      for (auto k : orbit)
        cs.set(k);
      d->classes.push_back(std::move(orbit));
      d->class_set.push_back(std::move(cs));
    }
    return SubgroupLattice(std::move(d));
  }

  const Group& parent() const { return d_->parent; }
  std::size_t size() const { return d_->subgroups.size(); }
  const Subgroup& subgroup(std::size_t i) const { return d_->subgroups.at(i); }
  const std::vector<Subgroup>& subgroups() const { return d_->subgroups; }
  // Generators recorded during enumeration (not necessarily minimal).
  const std::vector<Elem>& generators_of(std::size_t i) const { return d_->gens.at(i); }

  std::optional<std::size_t> find(const ElementSet& members) const {
    auto it = d_->index.find(members);
    if (it == d_->index.end())
      return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const Subgroup& s) const {
    if (!(s.parent() == parent()))
      throw PreconditionError("subgroup of a different group than the lattice");
    auto i = find(s.members());
    if (!i)
      throw PreconditionError("subgroup missing from lattice");
    return *i;
  }
  std::size_t trivial_index() const { return 0; }
  std::size_t whole_index() const { return size() - 1; }

  bool leq(std::size_t i, std::size_t j) const { return d_->below[j].test(i); }
  const ElementSet& below(std::size_t j) const { return d_->below[j]; }
  const ElementSet& above(std::size_t i) const { return d_->above[i]; }

  std::size_t class_count() const { return d_->classes.size(); }
  std::size_t class_of(std::size_t i) const { return d_->class_of[i]; }
  std::size_t class_rep(std::size_t c) const { return d_->classes[c].front(); }
  const std::vector<std::size_t>& class_members(std::size_t c) const { return d_->classes[c]; }
  const ElementSet& class_set(std::size_t c) const { return d_->class_set[c]; }
  std::size_t class_size(std::size_t c) const { return d_->classes[c].size(); }
  // |N_G(X)| for X in class c
  std::size_t normalizer_order(std::size_t c) const { return parent().order() / class_size(c); }
  const Subgroup& class_subgroup(std::size_t c) const { return subgroup(class_rep(c)); }
  std::size_t class_of(const Subgroup& s) const { return class_of(index_of(s)); }

  bool is_normal(std::size_t i) const { return class_size(class_of(i)) == 1; }
  std::vector<std::size_t> normal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (is_normal(i))
        out.push_back(i);
    return out;
  }

  friend bool operator==(const SubgroupLattice& a, const SubgroupLattice& b) {
    return a.d_ == b.d_;
  }

private:
  explicit SubgroupLattice(std::shared_ptr<const detail::LatticeData> d) : d_(std::move(d)) {}

  std::shared_ptr<const detail::LatticeData> d_;
};

inline SubgroupLattice enumerate_subgroups(const Group& g, const LatticeLimits& lim = {}) {
  return SubgroupLattice::build(g, lim);
}

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw CapExceeded("Möbius value overflows 64 bits");
  return r;
}

} // namespace detail

// μ(X, top) for every X in the lattice (zero unless X <= top).
inline std::vector<std::int64_t> moebius_column(const SubgroupLattice& lat, std::size_t top) {
  const std::size_t m = lat.size();
  std::vector<std::int64_t> mu(m, 0);
  ElementSet nonzero(m);
  mu[top] = 1;
  nonzero.set(top);
  const auto& down = lat.below(top);
  std::vector<std::size_t> order;
  for (auto i = down.find_first(); i != ElementSet::npos; i = down.find_next(i))
    order.push_back(i);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t x = *it;
    if (x == top)
      continue;
    auto between = lat.above(x) & nonzero;
    std::int64_t s = 0;
    for (auto z = between.find_first(); z != ElementSet::npos; z = between.find_next(z))
      s = detail::checked_add(s, mu[z]);
    if (s != 0) {
      mu[x] = -s;
      nonzero.set(x);
    }
  }
  return mu;
}

class MoebiusTable {
public:
  MoebiusTable() = default;
  explicit MoebiusTable(const SubgroupLattice& lat) : lat_(lat) {
    auto cols = std::make_shared<std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>>(
        lat.size());
    for (std::size_t top = 0; top < lat.size(); ++top) {
      auto col = moebius_column(lat, top);
      for (std::size_t x = 0; x < col.size(); ++x)
        if (col[x] != 0)
          (*cols)[top].emplace_back(x, col[x]);
    }
    cols_ = std::move(cols);
  }

  const SubgroupLattice& lattice() const { return lat_; }
  std::int64_t operator()(std::size_t x, std::size_t top) const {
    const auto& col = (*cols_)[top];
    auto it = std::lower_bound(col.begin(), col.end(), std::make_pair(x, INT64_MIN));
    return (it != col.end() && it->first == x) ? it->second : 0;
  }
  // Nonzero entries μ(X, top), X ascending.
  const std::vector<std::pair<std::size_t, std::int64_t>>& column(std::size_t top) const {
    return (*cols_)[top];
  }

private:
  SubgroupLattice lat_;
  std::shared_ptr<const std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>> cols_;
};

inline MoebiusTable moebius(const SubgroupLattice& lat) { return MoebiusTable(lat); }

// marks(x, y) = number of fixed points of X on G/Y, for class indices x, y.
class MarksTable {
public:
  MarksTable() = default;
  explicit MarksTable(const SubgroupLattice& lat) : lat_(lat) {
    const std::size_t c = lat.class_count();
    auto t = std::make_shared<std::vector<std::int64_t>>(c * c, 0);
    for (std::size_t y = 0; y < c; ++y) {
      const std::size_t rep = lat.class_rep(y);
      const std::size_t ord = lat.subgroup(rep).order();
      for (std::size_t x = 0; x <= y; ++x) {
        const auto inside = (lat.below(rep) & lat.class_set(x)).count();
        (*t)[x * c + y] =
            static_cast<std::int64_t>(lat.normalizer_order(x) * inside / ord);
      }
    }
    marks_ = std::move(t);
  }

  const SubgroupLattice& lattice() const { return lat_; }
  std::size_t size() const { return lat_.class_count(); }
  std::int64_t operator()(std::size_t x, std::size_t y) const {
    return (*marks_)[x * size() + y];
  }

private:
  SubgroupLattice lat_;
  std::shared_ptr<const std::vector<std::int64_t>> marks_;
};

inline MarksTable table_of_marks(const SubgroupLattice& lat) { return MarksTable(lat); }

// Normal subgroups via joins of normal closures, independent of the lattice.
inline std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Subgroup> closures;
  for (Elem x = 0; x < g.order(); ++x) {
    auto c = normal_closure(g, std::vector<Elem>{x});
    if (std::find(closures.begin(), closures.end(), c) == closures.end())
      closures.push_back(std::move(c));
  }
  std::vector<Subgroup> out{Subgroup::trivial(g)};
  for (std::size_t h = 0; h < out.size(); ++h)
    for (const auto& c : closures) {
      auto j = out[h].join(c);
      if (std::find(out.begin(), out.end(), j) == out.end())
        out.push_back(std::move(j));
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_normal(const Subgroup& n) { return n.is_normal(); }

// k_G(Z): subgroups H with H ∩ Z = 1 and HZ = G.
inline std::size_t count_complements(const SubgroupLattice& lat, const Subgroup& z) {
  const std::size_t n = lat.parent().order();
  if (n % z.order() != 0)
    return 0;
  std::size_t k = 0;
  for (const auto& h : lat.subgroups())
    if (h.order() * z.order() == n && h.intersect(z).is_trivial())
      ++k;
  return k;
}

inline std::size_t count_complements(const Group& g, const Subgroup& z) {
  return count_complements(enumerate_subgroups(g), z);
}

} // namespace relb
