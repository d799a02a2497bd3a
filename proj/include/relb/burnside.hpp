#pragma once

// Rational Burnside ring QB(G) with the transitive basis [G/X] and the
// primitive idempotent basis e_X, both indexed by conjugacy classes of
// subgroups.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "relb/constructions.hpp"
#include "relb/lattice.hpp"
#include "relb/rational.hpp"

namespace relb {

namespace detail {

struct RingData {
  Group group;
  SubgroupLattice lattice;
  MoebiusTable moebius;
  MarksTable marks;
};

} // namespace detail

class BurnsideRing {
public:
  BurnsideRing() = default;

  static BurnsideRing of(const Group& g, const LatticeLimits& lim = {}) {
    return BurnsideRing(enumerate_subgroups(g, lim));
  }
  explicit BurnsideRing(const SubgroupLattice& lat) {
    auto d = std::make_shared<detail::RingData>();
    d->group = lat.parent();
    d->lattice = lat;
    d->moebius = moebius(lat);
    d->marks = table_of_marks(lat);
    d_ = std::move(d);
  }

  const Group& group() const { return d_->group; }
  const SubgroupLattice& lattice() const { return d_->lattice; }
  const MoebiusTable& moebius_table() const { return d_->moebius; }
  const MarksTable& marks() const { return d_->marks; }
  std::size_t rank() const { return d_->lattice.class_count(); }

  friend bool operator==(const BurnsideRing& a, const BurnsideRing& b) { return a.d_ == b.d_; }

private:
  std::shared_ptr<const detail::RingData> d_;
};

enum class Basis { transitive, idempotent };

class BurnsideElement {
public:
  BurnsideElement() = default;

  static BurnsideElement zero(const BurnsideRing& r, Basis b = Basis::transitive) {
    return BurnsideElement(r, b, std::vector<Rational>(r.rank()));
  }
  // [G/X] for X in class c
  static BurnsideElement transitive(const BurnsideRing& r, std::size_t c) {
    auto e = zero(r, Basis::transitive);
    e.coeffs_.at(c) = 1;
    return e;
  }
  // e_X for X in class c, given directly in the idempotent basis
  static BurnsideElement idempotent(const BurnsideRing& r, std::size_t c) {
    auto e = zero(r, Basis::idempotent);
    e.coeffs_.at(c) = 1;
    return e;
  }
  static BurnsideElement from_coefficients(const BurnsideRing& r, Basis b,
                                           std::vector<Rational> coeffs) {
    if (coeffs.size() != r.rank())
      throw ValidationError("coefficient vector has wrong length");
    return BurnsideElement(r, b, std::move(coeffs));
  }

  const BurnsideRing& ring() const { return ring_; }
  Basis basis() const { return basis_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(std::size_t c) const { return coeffs_.at(c); }
  bool is_zero() const {
    for (const auto& q : coeffs_)
      if (q != 0)
        return false;
    return true;
  }

  // Marks vector: v[x] = sum_y marks(x, y) c[y].
  BurnsideElement to_idempotent() const {
    if (basis_ == Basis::idempotent)
      return *this;
    const auto& mk = ring_.marks();
    const std::size_t n = coeffs_.size();
    std::vector<Rational> v(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y)
        if (coeffs_[y] != 0 && mk(x, y) != 0)
          v[x] += coeffs_[y] * mk(x, y);
    return BurnsideElement(ring_, Basis::idempotent, std::move(v));
  }

  // Back-substitution in the upper triangular marks matrix.
  BurnsideElement to_transitive() const {
    if (basis_ == Basis::transitive)
      return *this;
    const auto& mk = ring_.marks();
    const std::size_t n = coeffs_.size();
    std::vector<Rational> c(n);
    for (std::size_t x = n; x-- > 0;) {
      Rational s = coeffs_[x];
      for (std::size_t y = x + 1; y < n; ++y)
        if (c[y] != 0 && mk(x, y) != 0)
          s -= c[y] * mk(x, y);
      c[x] = s / mk(x, x);
    }
    return BurnsideElement(ring_, Basis::transitive, std::move(c));
  }

  BurnsideElement in_basis(Basis b) const {
    return b == Basis::transitive ? to_transitive() : to_idempotent();
  }

  friend BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b) {
    check_same(a, b);
    auto bb = b.in_basis(a.basis_);
    auto out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
      out.coeffs_[i] += bb.coeffs_[i];
    return out;
  }
  friend BurnsideElement operator-(const BurnsideElement& a, const BurnsideElement& b) {
    return a + (-1) * b;
  }
  friend BurnsideElement operator*(const Rational& s, const BurnsideElement& a) {
    auto out = a;
    for (auto& q : out.coeffs_)
      q *= s;
    return out;
  }
  friend BurnsideElement operator*(long long s, const BurnsideElement& a) {
    return Rational(s) * a;
  }
  // Exact equality as ring elements (basis-independent).
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    check_same(a, b);
    return a.coeffs_ == b.in_basis(a.basis_).coeffs_;
  }

private:
  BurnsideElement(BurnsideRing r, Basis b, std::vector<Rational> c)
      : ring_(std::move(r)), basis_(b), coeffs_(std::move(c)) {}

  static void check_same(const BurnsideElement& a, const BurnsideElement& b) {
    if (!(a.ring_ == b.ring_))
      throw PreconditionError("Burnside elements over different rings");
  }

  BurnsideRing ring_;
  Basis basis_ = Basis::transitive;
  std::vector<Rational> coeffs_;
};

inline std::vector<Rational> marks_of(const BurnsideElement& e) {
  return e.to_idempotent().coefficients();
}

// Pointwise product of marks.
inline BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) {
  if (!(a.ring() == b.ring()))
    throw PreconditionError("multiply: elements over different rings");
  auto ma = a.to_idempotent().coefficients();
  const auto mb = b.to_idempotent().coefficients();
  for (std::size_t i = 0; i < ma.size(); ++i)
    ma[i] *= mb[i];
  auto out = BurnsideElement::from_coefficients(a.ring(), Basis::idempotent, std::move(ma));
  return out.in_basis(a.basis());
}

inline BurnsideElement identity_element(const BurnsideRing& r) {
  return BurnsideElement::transitive(r, r.lattice().class_count() - 1);
}

// e_L = (1/|N_G(L)|) sum_{X <= L} |X| mu(X, L) [G/X]
inline BurnsideElement gluck_idempotent(const BurnsideRing& r, std::size_t l) {
  const auto& lat = r.lattice();
  std::vector<Rational> c(r.rank());
  for (auto [x, mu] : r.moebius_table().column(l))
    c[lat.class_of(x)] += Rational(static_cast<long long>(lat.subgroup(x).order()) * mu);
  const Rational norm(static_cast<long long>(lat.normalizer_order(lat.class_of(l))));
  for (auto& q : c)
    q /= norm;
  return BurnsideElement::from_coefficients(r, Basis::transitive, std::move(c));
}

inline BurnsideElement gluck_idempotent(const BurnsideRing& r, const Subgroup& l) {
  return gluck_idempotent(r, r.lattice().index_of(l));
}

// m_{L,N} = (1/|L|) sum_{X <= L, XN = L} |X| mu(X, L), with L the subgroup at
// lattice index top and N a normal subgroup of L.
inline Rational m_const(const MoebiusTable& mt, std::size_t top, const Subgroup& n) {
  const auto& lat = mt.lattice();
  const auto& l = lat.subgroup(top);
  if (!n.is_subgroup_of(l))
    throw PreconditionError("m_const: N is not contained in L");
  for (Elem y : n.elements())
    for (Elem x : lat.generators_of(top))
      if (!n.contains(lat.parent().conj(x, y)))
        throw PreconditionError("m_const: N is not normal in L");
  long long s = 0;
  for (auto [x, mu] : mt.column(top)) {
    const auto& sx = lat.subgroup(x);
    if (sx.product_order(n) == l.order())
      s += static_cast<long long>(sx.order()) * mu;
  }
  return Rational(s) / Rational(static_cast<long long>(l.order()));
}

inline Rational m_const(const BurnsideRing& r, const Subgroup& n) {
  return m_const(r.moebius_table(), r.lattice().whole_index(), n);
}

// m_{L,N} for many N in a fixed L, sharing one lattice and one Möbius column.
class MConstants {
public:
  MConstants() = default;
  explicit MConstants(const Group& l, const LatticeLimits& lim = {})
      : lat_(enumerate_subgroups(l, lim)), mu_(moebius_column(lat_, lat_.whole_index())) {}

  const Group& group() const { return lat_.parent(); }
  const SubgroupLattice& lattice() const { return lat_; }

  Rational operator()(const Subgroup& n) const {
    if (!(n.parent() == group()))
      throw PreconditionError("m_const: subgroup of a different group");
    if (!n.is_normal())
      throw PreconditionError("m_const: subgroup is not normal in " + group().label());
    long long s = 0;
    for (std::size_t x = 0; x < lat_.size(); ++x)
      if (mu_[x] != 0 && lat_.subgroup(x).product_order(n) == group().order())
        s += static_cast<long long>(lat_.subgroup(x).order()) * mu_[x];
    return Rational(s) / Rational(static_cast<long long>(group().order()));
  }

private:
  SubgroupLattice lat_;
  std::vector<std::int64_t> mu_;
};

inline Rational m_const(const Group& g, const Subgroup& n) {
  if (!(n.parent() == g))
    throw PreconditionError("m_const: subgroup of a different group");
  if (!n.is_normal())
    throw PreconditionError("m_const: subgroup is not normal in " + g.label());
  return MConstants(g)(n);
}

// ---- elementary operations, defined on the transitive basis ---------------

enum class ElementaryOp { restriction, induction, inflation, deflation, transport };

inline const char* op_name(ElementaryOp op) {
  switch (op) {
  case ElementaryOp::restriction: return "Res";
  case ElementaryOp::induction: return "Ind";
  case ElementaryOp::inflation: return "Inf";
  case ElementaryOp::deflation: return "Def";
  case ElementaryOp::transport: return "Iso";
  }
  return "?";
}

namespace detail {

inline void require_ring_of(const BurnsideRing& r, const Group& g, const char* what) {
  if (!(r.group() == g))
    throw PreconditionError(std::string(what) + ": ring is over the wrong group");
}

// Applies a map [src/X] -> sum of [dst/Y] to every transitive basis vector.
template <class Image>
BurnsideElement linear_extend(const BurnsideElement& e, const BurnsideRing& dst, Image&& image) {
  const auto t = e.to_transitive();
  std::vector<Rational> out(dst.rank());
  const auto& lat = e.ring().lattice();
  for (std::size_t c = 0; c < t.coefficients().size(); ++c) {
    const auto& q = t.coefficient(c);
    if (q == 0)
      continue;
    for (auto [d, mult] : image(lat.class_subgroup(c)))
      out[d] += q * Rational(mult);
  }
  return BurnsideElement::from_coefficients(dst, Basis::transitive, std::move(out))
      .in_basis(e.basis());
}

} // namespace detail

// Res along an injective iota: H -> G. [G/X] -> sum over H-orbits on G/X of
// [H / iota^-1(gXg^-1)]; orbits are computed directly on the cosets.
inline BurnsideElement restrict(const BurnsideElement& e, const Homomorphism& iota,
                                const BurnsideRing& dst) {
  if (!iota.is_injective())
    throw PreconditionError("restriction needs an injective map");
  detail::require_ring_of(e.ring(), iota.target(), "restrict");
  detail::require_ring_of(dst, iota.source(), "restrict");
  const Group& g = iota.target();
  const Group& h = iota.source();
  std::vector<Elem> hgens;
  for (Elem x : h.generators())
    hgens.push_back(iota(x));
  return detail::linear_extend(e, dst, [&](const Subgroup& x) {
    // left cosets gX, numbered by first discovery
    std::vector<Elem> coset(g.order(), Homomorphism::unset);
    std::vector<Elem> rep;
    const auto xe = x.elements();
    for (Elem a = 0; a < g.order(); ++a) {
      if (coset[a] != Homomorphism::unset)
        continue;
      for (Elem y : xe)
        coset[g.mul(a, y)] = static_cast<Elem>(rep.size());
      rep.push_back(a);
    }
    std::vector<bool> seen(rep.size());
    std::vector<std::pair<std::size_t, long long>> terms;
    for (std::size_t c0 = 0; c0 < rep.size(); ++c0) {
      if (seen[c0])
        continue;
      std::vector<std::size_t> orbit{c0};
      seen[c0] = true;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (Elem s : hgens) {
          const std::size_t c1 = coset[g.mul(s, rep[orbit[i]])];
          if (!seen[c1]) {
            seen[c1] = true;
            orbit.push_back(c1);
          }
        }
      auto stab = iota.preimage(x.conjugate(rep[c0]));
      terms.emplace_back(dst.lattice().class_of(stab), 1);
    }
    return terms;
  });
}

// Ind along an injective iota: H -> G. [H/X] -> [G/iota(X)]
inline BurnsideElement induce(const BurnsideElement& e, const Homomorphism& iota,
                              const BurnsideRing& dst) {
  if (!iota.is_injective())
    throw PreconditionError("induction needs an injective map");
  detail::require_ring_of(e.ring(), iota.source(), "induce");
  detail::require_ring_of(dst, iota.target(), "induce");
  return detail::linear_extend(e, dst, [&](const Subgroup& x) {
    return std::vector<std::pair<std::size_t, long long>>{
        {dst.lattice().class_of(iota.image_of(x)), 1}};
  });
}

// Inf along a surjective pi: G -> Q. [Q/Y] -> [G/pi^-1(Y)]
inline BurnsideElement inflate(const BurnsideElement& e, const Homomorphism& pi,
                               const BurnsideRing& dst) {
  if (!pi.is_surjective())
    throw PreconditionError("inflation needs a surjective map");
  detail::require_ring_of(e.ring(), pi.target(), "inflate");
  detail::require_ring_of(dst, pi.source(), "inflate");
  return detail::linear_extend(e, dst, [&](const Subgroup& y) {
    return std::vector<std::pair<std::size_t, long long>>{
        {dst.lattice().class_of(pi.preimage(y)), 1}};
  });
}

// Def along a surjective pi: G -> Q. [G/X] -> [Q/pi(X)]
inline BurnsideElement deflate(const BurnsideElement& e, const Homomorphism& pi,
                               const BurnsideRing& dst) {
  if (!pi.is_surjective())
    throw PreconditionError("deflation needs a surjective map");
  detail::require_ring_of(e.ring(), pi.source(), "deflate");
  detail::require_ring_of(dst, pi.target(), "deflate");
  return detail::linear_extend(e, dst, [&](const Subgroup& x) {
    return std::vector<std::pair<std::size_t, long long>>{
        {dst.lattice().class_of(pi.image_of(x)), 1}};
  });
}

// Iso along a bijective theta: G -> G'. [G/X] -> [G'/theta(X)]
inline BurnsideElement transport(const BurnsideElement& e, const Homomorphism& theta,
                                 const BurnsideRing& dst) {
  if (!theta.is_bijective())
    throw PreconditionError("transport needs an isomorphism");
  detail::require_ring_of(e.ring(), theta.source(), "transport");
  detail::require_ring_of(dst, theta.target(), "transport");
  return detail::linear_extend(e, dst, [&](const Subgroup& x) {
    return std::vector<std::pair<std::size_t, long long>>{
        {dst.lattice().class_of(theta.image_of(x)), 1}};
  });
}

// The map is always the underlying group homomorphism in its natural
// direction: H -> G for Res and Ind, G -> Q for Inf and Def, G -> G' for Iso.
inline BurnsideElement apply_op(ElementaryOp op, const BurnsideElement& e,
                                const Homomorphism& f, const BurnsideRing& dst) {
  switch (op) {
  case ElementaryOp::restriction: return restrict(e, f, dst);
  case ElementaryOp::induction: return induce(e, f, dst);
  case ElementaryOp::inflation: return inflate(e, f, dst);
  case ElementaryOp::deflation: return deflate(e, f, dst);
  case ElementaryOp::transport: return transport(e, f, dst);
  }
  throw PreconditionError("unknown operation");
}

// f x Id_K between the products A x K and B x K.
inline Homomorphism shift_map(const Homomorphism& f, const DirectProduct& src,
                              const DirectProduct& dst) {
  return product_map(f, Homomorphism::identity(src.proj2.target()), src, dst);
}

// The operation of the shifted functor G -> QB(G x K): op along f x Id_K.
// src and dst are the products over the source and target of f.
inline BurnsideElement shifted_op(ElementaryOp op, const BurnsideElement& e,
                                  const Homomorphism& f, const DirectProduct& src,
                                  const DirectProduct& dst, const BurnsideRing& dst_ring) {
  return apply_op(op, e, shift_map(f, src, dst), dst_ring);
}

} // namespace relb
