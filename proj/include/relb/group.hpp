#pragma once

// Finite groups as explicit Cayley tables. Element id 0 is always the
// identity. Groups, subgroups and homomorphisms are immutable values; copies
// share their tables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relb/element_set.hpp"
#include "relb/error.hpp"

namespace relb {

enum class Validation { full, off };

namespace detail {

struct GroupData {
  std::size_t order = 0;
  std::vector<Elem> table;  // row-major, table[a * order + b] = a * b
  std::vector<Elem> inverse;
  std::vector<std::uint32_t> elem_order;
  std::string label;
  std::vector<Elem> gens;
  std::vector<std::string> gen_names;
};

// Smallest subset containing 0 and closed under right multiplication by gens.
inline ElementSet close_under(const GroupData& d, std::span<const Elem> gens,
                              ElementSet seed = {}) {
  const auto n = d.order;
  if (seed.size() != n) {
    seed.resize(n);
    seed.set(0);
  }
  std::vector<Elem> queue = members_of(seed);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (Elem g : gens) {
      const Elem y = d.table[x * n + g];
      if (!seed.test(y)) {
        seed.set(y);
        queue.push_back(y);
      }
    }
  }
  return seed;
}

inline bool associative(const GroupData& d) {
  const auto n = d.order;
  auto mul = [&](Elem a, Elem b) { return d.table[a * n + b]; };
  if (n <= 64) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = mul(a, b);
        for (Elem c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            return false;
      }
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (int i = 0; i < 200000; ++i) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      return false;
  }
  return true;
}

} // namespace detail

class Group {
public:
  Group() : Group(trivial_data()) {}

  // Builds a group from a row-major multiplication table over ids 0..n-1.
  static Group from_table(std::size_t n, std::vector<Elem> table, std::string label,
                          Validation v = Validation::full) {
    if (n == 0)
      throw ValidationError("group must have at least one element");
    if (table.size() != n * n)
      throw ValidationError("multiplication table has wrong size");
    auto d = std::make_shared<detail::GroupData>();
    d->order = n;
    d->table = std::move(table);
    d->label = std::move(label);
    for (Elem x : d->table)
      if (x >= n)
        throw ValidationError("multiplication table entry out of range");
    for (Elem x = 0; x < n; ++x)
      if (d->table[x] != x || d->table[x * n] != x)
        throw ValidationError("element 0 is not a two-sided identity in " + d->label);
    d->inverse.assign(n, 0);
    for (Elem x = 0; x < n; ++x) {
      std::optional<Elem> inv;
      for (Elem y = 0; y < n; ++y)
        if (d->table[x * n + y] == 0) {
          inv = y;
          break;
        }
      if (!inv || d->table[*inv * n + x] != 0)
        throw ValidationError("element " + std::to_string(x) + " has no inverse in " +
                              d->label);
      d->inverse[x] = *inv;
    }
    if (v == Validation::full) {
      for (Elem x = 0; x < n; ++x) {
        ElementSet row(n);
        for (Elem y = 0; y < n; ++y)
          row.set(d->table[x * n + y]);
        if (row.count() != n)
          throw ValidationError("multiplication table is not a Latin square in " + d->label);
      }
      if (!detail::associative(*d))
        throw ValidationError("multiplication is not associative in " + d->label);
    }
    fill_orders(*d);
    default_generators(*d);
    return Group(std::move(d));
  }

  template <class Mul>
  static Group from_function(std::size_t n, Mul&& mul, std::string label,
                             Validation v = Validation::full) {
    std::vector<Elem> table(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        table[a * n + b] = static_cast<Elem>(mul(a, b));
    return from_table(n, std::move(table), std::move(label), v);
  }

  std::size_t order() const noexcept { return d_->order; }
  Elem mul(Elem a, Elem b) const { return d_->table[a * d_->order + b]; }
  Elem inv(Elem a) const { return d_->inverse[a]; }
  // g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  Elem pow(Elem x, long long k) const {
    if (k < 0) {
      x = inv(x);
      k = -k;
    }
    Elem r = 0;
    while (k > 0) {
      if (k & 1)
        r = mul(r, x);
      x = mul(x, x);
      k >>= 1;
    }
    return r;
  }
  std::uint32_t element_order(Elem x) const { return d_->elem_order[x]; }
  const std::vector<std::uint32_t>& element_orders() const { return d_->elem_order; }
  std::span<const Elem> table() const { return d_->table; }

  const std::string& label() const { return d_->label; }
  std::span<const Elem> generators() const { return d_->gens; }
  std::span<const std::string> generator_names() const { return d_->gen_names; }

  // Same table, new label and/or named generators (must generate the group).
  Group relabeled(std::string label) const {
    auto d = std::make_shared<detail::GroupData>(*d_);
    d->label = std::move(label);
    return Group(std::move(d));
  }
  Group with_generators(std::vector<Elem> gens, std::vector<std::string> names) const {
    if (gens.size() != names.size())
      throw ValidationError("generator name count mismatch");
    for (Elem g : gens)
      if (g >= order())
        throw ValidationError("generator out of range");
    if (detail::close_under(*d_, gens).count() != order())
      throw ValidationError("listed elements do not generate " + label());
    auto d = std::make_shared<detail::GroupData>(*d_);
    d->gens = std::move(gens);
    d->gen_names = std::move(names);
    return Group(std::move(d));
  }

  // <seed, gens> when seed is already a subgroup
  ElementSet generate(std::span<const Elem> gens, ElementSet seed = {}) const {
    return detail::close_under(*d_, gens, std::move(seed));
  }

  bool is_abelian() const {
    for (Elem a = 0; a < order(); ++a)
      for (Elem b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }
  bool is_cyclic() const {
    return std::any_of(d_->elem_order.begin(), d_->elem_order.end(),
                       [&](std::uint32_t o) { return o == order(); });
  }
  std::uint32_t exponent() const {
    std::uint32_t e = 1;
    for (auto o : d_->elem_order)
      e = std::lcm(e, o);
    return e;
  }

  // Sorted multiset of element orders; an isomorphism invariant.
  std::vector<std::uint32_t> order_profile() const {
    auto v = d_->elem_order;
    std::sort(v.begin(), v.end());
    return v;
  }

  // Structural equality of tables. Labels and generator names are ignored.
  friend bool operator==(const Group& a, const Group& b) {
    return a.d_ == b.d_ || (a.d_->order == b.d_->order && a.d_->table == b.d_->table);
  }

private:
  explicit Group(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {}

  static std::shared_ptr<const detail::GroupData> trivial_data() {
    static const auto d = [] {
      auto g = std::make_shared<detail::GroupData>();
      g->order = 1;
      g->table = {0};
      g->inverse = {0};
      g->elem_order = {1};
      g->label = "1";
      return g;
    }();
    return d;
  }

  static void fill_orders(detail::GroupData& d) {
    const auto n = d.order;
    d.elem_order.assign(n, 1);
    for (Elem x = 1; x < n; ++x) {
      std::uint32_t k = 1;
      Elem y = x;
      while (y != 0) {
        y = d.table[y * n + x];
        ++k;
        if (k > n)
          throw ValidationError("element of infinite order in " + d.label);
      }
      d.elem_order[x] = k;
    }
  }

  // Greedy generating set, largest element orders first.
  static void default_generators(detail::GroupData& d) {
    std::vector<Elem> by_order(d.order);
    std::iota(by_order.begin(), by_order.end(), Elem{0});
    std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
      return d.elem_order[a] > d.elem_order[b];
    });
    d.gens.clear();
    d.gen_names.clear();
    ElementSet span(d.order);
    span.set(0);
    for (Elem x : by_order) {
      if (span.count() == d.order)
        break;
      if (span.test(x))
        continue;
      d.gens.push_back(x);
      span = detail::close_under(d, d.gens);
    }
    for (std::size_t i = 0; i < d.gens.size(); ++i)
      d.gen_names.push_back("x" + std::to_string(i + 1));
  }

  std::shared_ptr<const detail::GroupData> d_;

  friend class Subgroup;
};

class Subgroup {
public:
  Subgroup() = default;

  static Subgroup generated_by(const Group& g, std::span<const Elem> gens) {
    for (Elem x : gens)
      if (x >= g.order())
        throw ValidationError("element id out of range for " + g.label());
    return Subgroup(g, g.generate(gens));
  }
  static Subgroup trivial(const Group& g) { return generated_by(g, {}); }
  static Subgroup whole(const Group& g) {
    ElementSet all(g.order());
    all.set();
    return Subgroup(g, std::move(all));
  }
  // Checks closure (and Lagrange) unless validation is off.
  static Subgroup from_members(const Group& g, ElementSet members,
                               Validation v = Validation::full) {
    if (members.size() != g.order())
      throw ValidationError("member set has wrong universe size");
    if (v == Validation::full) {
      if (!members.test(0))
        throw ValidationError("subset does not contain the identity");
      auto elems = members_of(members);
      for (Elem a : elems) {
        if (!members.test(g.inv(a)))
          throw ValidationError("subset not closed under inverses");
        for (Elem b : elems)
          if (!members.test(g.mul(a, b)))
            throw ValidationError("subset not closed under products");
      }
      if (g.order() % members.count() != 0)
        throw ValidationError("subgroup order does not divide the group order");
    }
    return Subgroup(g, std::move(members));
  }

  const Group& parent() const { return parent_; }
  const ElementSet& members() const { return members_; }
  std::size_t order() const { return members_.count(); }
  bool contains(Elem x) const { return members_.test(x); }
  std::vector<Elem> elements() const { return members_of(members_); }
  std::size_t index() const { return parent_.order() / order(); }
  bool is_trivial() const { return order() == 1; }
  bool is_whole() const { return order() == parent_.order(); }

  bool is_subgroup_of(const Subgroup& other) const {
    return members_.is_subset_of(other.members_);
  }
  Subgroup intersect(const Subgroup& other) const {
    return Subgroup(parent_, members_ & other.members_);
  }
  Subgroup join(const Subgroup& other) const {
    auto gens = elements();
    auto more = other.elements();
    gens.insert(gens.end(), more.begin(), more.end());
    return generated_by(parent_, gens);
  }
  // g X g^-1
  Subgroup conjugate(Elem g) const {
    ElementSet out(parent_.order());
    for (auto x = members_.find_first(); x != ElementSet::npos; x = members_.find_next(x))
      out.set(parent_.conj(g, static_cast<Elem>(x)));
    return Subgroup(parent_, std::move(out));
  }
  bool is_normal() const {
    for (Elem g : parent_.generators())
      if (conjugate(g).members_ != members_)
        return false;
    return true;
  }
  bool is_central() const {
    for (auto x = members_.find_first(); x != ElementSet::npos; x = members_.find_next(x))
      for (Elem g : parent_.generators())
        if (parent_.mul(g, static_cast<Elem>(x)) != parent_.mul(static_cast<Elem>(x), g))
          return false;
    return true;
  }
  // |XY| = |X||Y|/|X ∩ Y|; a subgroup product XN with N normal.
  std::size_t product_order(const Subgroup& other) const {
    return order() * other.order() / (members_ & other.members_).count();
  }
  Subgroup normalizer() const {
    ElementSet out(parent_.order());
    for (Elem g = 0; g < parent_.order(); ++g)
      if (conjugate(g).members_ == members_)
        out.set(g);
    return Subgroup(parent_, std::move(out));
  }

  // Canonical order: by size, then by sorted member list.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return lex_less(a.members_, b.members_);
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

private:
  Subgroup(Group g, ElementSet m) : parent_(std::move(g)), members_(std::move(m)) {}

  Group parent_;
  ElementSet members_;
};

class Homomorphism {
public:
  Homomorphism() = default;

  static Homomorphism from_images(const Group& src, const Group& dst, std::vector<Elem> image,
                                  Validation v = Validation::full) {
    if (image.size() != src.order())
      throw ValidationError("homomorphism image array has wrong length");
    for (Elem y : image)
      if (y >= dst.order())
        throw ValidationError("homomorphism image out of range");
    if (v == Validation::full) {
      if (image[0] != 0)
        throw ValidationError("homomorphism does not preserve the identity");
      for (Elem a = 0; a < src.order(); ++a)
        for (Elem b = 0; b < src.order(); ++b)
          if (image[src.mul(a, b)] != dst.mul(image[a], image[b]))
            throw ValidationError("map " + src.label() + " -> " + dst.label() +
                                  " is not a homomorphism");
    }
    return Homomorphism(src, dst, std::move(image));
  }

  // Extends generator images to a homomorphism on <gens>; nullopt if the
  // assignment is inconsistent. Elements outside <gens> map to 0 when the
  // generators do not generate src, so callers pass a generating set.
  static std::optional<Homomorphism> extend(const Group& src, const Group& dst,
                                            std::span<const Elem> gens,
                                            std::span<const Elem> images) {
    auto map = extend_partial(src, dst, gens, images);
    if (!map)
      return std::nullopt;
    for (Elem x = 0; x < src.order(); ++x)
      if ((*map)[x] == unset)
        return std::nullopt;
    return Homomorphism(src, dst, std::move(*map));
  }

  static constexpr Elem unset = ~Elem{0};

  // Map on <gens> (unset elsewhere), nullopt on inconsistency.
  static std::optional<std::vector<Elem>> extend_partial(const Group& src, const Group& dst,
                                                         std::span<const Elem> gens,
                                                         std::span<const Elem> images) {
    std::vector<Elem> map(src.order(), unset);
    map[0] = 0;
    std::vector<Elem> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem x = queue[head];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Elem y = src.mul(x, gens[j]);
        const Elem img = dst.mul(map[x], images[j]);
        if (map[y] == unset) {
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return std::nullopt;
        }
      }
    }
    return map;
  }

  static Homomorphism identity(const Group& g) {
    std::vector<Elem> id(g.order());
    std::iota(id.begin(), id.end(), Elem{0});
    return Homomorphism(g, g, std::move(id));
  }
  static Homomorphism trivial(const Group& src, const Group& dst) {
    return Homomorphism(src, dst, std::vector<Elem>(src.order(), 0));
  }

  const Group& source() const { return src_; }
  const Group& target() const { return dst_; }
  std::span<const Elem> images() const { return image_; }
  Elem operator()(Elem x) const { return image_[x]; }

  Subgroup kernel() const {
    ElementSet k(src_.order());
    for (Elem x = 0; x < src_.order(); ++x)
      if (image_[x] == 0)
        k.set(x);
    return Subgroup::from_members(src_, std::move(k), Validation::off);
  }
  Subgroup image() const {
    ElementSet im(dst_.order());
    for (Elem y : image_)
      im.set(y);
    return Subgroup::from_members(dst_, std::move(im), Validation::off);
  }
  Subgroup image_of(const Subgroup& h) const {
    ElementSet im(dst_.order());
    for (Elem x : h.elements())
      im.set(image_[x]);
    return Subgroup::from_members(dst_, std::move(im), Validation::off);
  }
  Subgroup preimage(const Subgroup& h) const {
    ElementSet pre(src_.order());
    for (Elem x = 0; x < src_.order(); ++x)
      if (h.contains(image_[x]))
        pre.set(x);
    return Subgroup::from_members(src_, std::move(pre), Validation::off);
  }

  bool is_injective() const { return kernel().is_trivial(); }
  bool is_surjective() const { return image().order() == dst_.order(); }
  bool is_bijective() const { return src_.order() == dst_.order() && is_injective(); }

  Homomorphism inverse() const {
    if (!is_bijective())
      throw PreconditionError("inverse of a non-bijective homomorphism");
    std::vector<Elem> inv(src_.order());
    for (Elem x = 0; x < src_.order(); ++x)
      inv[image_[x]] = x;
    return Homomorphism(dst_, src_, std::move(inv));
  }

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
    return a.image_ == b.image_ && a.src_ == b.src_ && a.dst_ == b.dst_;
  }

private:
  Homomorphism(Group s, Group d, std::vector<Elem> im)
      : src_(std::move(s)), dst_(std::move(d)), image_(std::move(im)) {}

  Group src_;
  Group dst_;
  std::vector<Elem> image_;

  friend Homomorphism compose(const Homomorphism&, const Homomorphism&);
};

// outer ∘ inner
inline Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (!(inner.target() == outer.source()))
    throw PreconditionError("composition of incompatible homomorphisms");
  std::vector<Elem> im(inner.source().order());
  for (Elem x = 0; x < im.size(); ++x)
    im[x] = outer(inner(x));
  return Homomorphism(inner.source(), outer.target(), std::move(im));
}

inline Subgroup kernel(const Homomorphism& f) { return f.kernel(); }
inline Subgroup image(const Homomorphism& f) { return f.image(); }

} // namespace relb
