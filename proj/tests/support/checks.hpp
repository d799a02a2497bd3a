#pragma once

// Whole-corpus property checks shared by the unit tests and the acceptance
// runner. Each returns how many cases it looked at and the first failure.

#include <sstream>
#include <string>
#include <vector>

#include <relb/ideals.hpp>

#include "support/fixtures.hpp"

namespace checks {

using namespace relb;

struct Result {
  bool ok = true;
  std::size_t cases = 0;
  std::string failure;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
  void merge(const Result& r) {
    cases += r.cases;
    if (!r.ok && ok) {
      ok = false;
      failure = r.failure;
    }
  }
};

inline Group klein() { return direct_product(make_cyclic(2), make_cyclic(2), "C2 x C2").group; }

inline GroupOverK worked_example_over_k() {
  auto w = fixtures::worked_example();
  return GroupOverK{w.L, w.phi, "(C2 x (C3 : C4), phi)"};
}

// ---- idempotents --------------------------------------------------------------

inline std::vector<Group> idempotent_corpus() {
  std::vector<Group> out;
  for (std::size_t n = 1; n <= 12; ++n)
    out.push_back(make_cyclic(n));
  out.push_back(klein());
  out.push_back(direct_product(klein(), make_cyclic(2), "C2 x C2 x C2").group);
  out.push_back(make_dihedral(4));
  out.push_back(make_dicyclic(2).relabeled("Q8"));
  out.push_back(make_alternating(4));
  out.push_back(make_symmetric(3));
  out.push_back(make_symmetric(4));
  out.push_back(fixtures::c3_by_c4().group);
  out.push_back(fixtures::worked_example().L);
  return out;
}

// Orthogonal, summing to 1, marks vectors are indicators.
inline Result idempotent_suite(const Group& g) {
  Result r;
  auto ring = BurnsideRing::of(g);
  const auto& lat = ring.lattice();
  std::vector<BurnsideElement> es;
  for (std::size_t c = 0; c < lat.class_count(); ++c)
    es.push_back(gluck_idempotent(ring, lat.class_rep(c)));
  auto sum = BurnsideElement::zero(ring);
  for (std::size_t c = 0; c < es.size(); ++c) {
    auto marks = marks_of(es[c]);
    for (std::size_t d = 0; d < marks.size(); ++d)
      r.expect(marks[d] == Rational(c == d ? 1 : 0), g.label() + ": marks of e_" + std::to_string(c));
    sum = sum + es[c];
  }
  r.expect(sum == identity_element(ring), g.label() + ": idempotents do not sum to 1");
  for (std::size_t c = 0; c < es.size(); ++c)
    for (std::size_t d = c; d < es.size(); ++d) {
      auto prod = multiply(es[c], es[d]);
      r.expect(c == d ? prod == es[c] : prod.is_zero(),
               g.label() + ": e_" + std::to_string(c) + " e_" + std::to_string(d));
    }
  return r;
}

// ---- deflation ------------------------------------------------------------------

// Def along G x K -> (G/N) x K of e_L is lambda m_{L, L meet (N x 1)} e_{L/N}.
inline Result deflation_closed_form(const Group& g, const Group& k) {
  Result r;
  auto dg = direct_product(g, k);
  auto ring = BurnsideRing::of(dg.group);
  const auto& lat = ring.lattice();
  for (const auto& n : normal_subgroups(g)) {
    auto quo = quotient(g, n);
    auto dq = direct_product(quo.group, k);
    auto qring = BurnsideRing::of(dq.group);
    auto pi = shift_map(quo.projection, dg, dq);
    auto nx1 = dg.inj1.image_of(n);
    for (std::size_t c = 0; c < lat.class_count(); ++c) {
      const std::size_t li = lat.class_rep(c);
      const auto& l = lat.subgroup(li);
      auto lhs = deflate(gluck_idempotent(ring, li), pi, qring);
      auto lbar = pi.image_of(l);
      const auto cb = qring.lattice().class_of(lbar);
      Rational lambda =
          Rational(static_cast<long long>(qring.lattice().normalizer_order(cb) / lbar.order())) /
          Rational(static_cast<long long>(lat.normalizer_order(c) / l.order()));
      auto m = m_const(ring.moebius_table(), li, l.intersect(nx1));
      auto rhs = (lambda * m) * gluck_idempotent(qring, lbar);
      std::ostringstream os;
      os << g.label() << " x " << k.label() << ", |N|=" << n.order() << ", |L|=" << l.order();
      r.expect(lhs == rhs, os.str());
    }
  }
  return r;
}

// ---- m-constants -----------------------------------------------------------------

inline Result m_const_properties(const Group& l) {
  Result r;
  auto ring = BurnsideRing::of(l);
  const auto& lat = ring.lattice();
  r.expect(m_const(ring, Subgroup::trivial(l)) == 1, l.label() + ": m_{L,1} != 1");
  auto ns = normal_subgroups(l);
  for (const auto& qn : ns) {
    auto quo = quotient(l, qn);
    MConstants mq(quo.group);
    for (const auto& p : ns) {
      if (!qn.is_subgroup_of(p))
        continue;
      r.expect(m_const(ring, p) == m_const(ring, qn) * mq(quo.projection.image_of(p)),
               l.label() + ": multiplicativity at |Q|=" + std::to_string(qn.order()) +
                   " |P|=" + std::to_string(p.order()));
    }
  }
  for (const auto& z : lat.subgroups()) {
    if (!is_prime(z.order()) || !z.is_central())
      continue;
    const auto p = static_cast<long long>(z.order());
    const auto k = static_cast<long long>(count_complements(lat, z));
    r.expect(m_const(ring, z) == Rational(1) - Rational(k) / Rational(p),
             l.label() + ": central identity at |Z|=" + std::to_string(p));
  }
  return r;
}

// ---- beta_K ----------------------------------------------------------------------

inline Result beta_properties(const GroupOverK& x) {
  Result r;
  MConstants m(x.L);
  const auto b = beta_k_details(x, m);
  r.expect(is_bk_group(b.beta), x.label + ": beta is not a B_K-group");
  r.expect(is_quotient_over_k(x, b.beta), x.label + ": beta is not a quotient");
  r.expect(is_isomorphic_over_k(beta_k(b.beta), b.beta), x.label + ": beta not idempotent");
  for (const auto& q : beta_k_candidates(x, m))
    r.expect(is_isomorphic_over_k(quotient_over_k(x, q), b.beta),
             x.label + ": maximal choices disagree at |Q|=" + std::to_string(q.order()));
  // s: x ->> x/N; beta is preserved iff m_{M, Ker s} != 0
  for (const auto& n : normal_in_kernel(x)) {
    auto y = quotient_over_k(x, n);
    auto by = beta_k(y);
    r.expect(is_quotient_over_k(b.beta, by),
             x.label + ": beta of quotient not a quotient of beta, |N|=" + std::to_string(n.order()));
    r.expect(is_isomorphic_over_k(by, b.beta) == (m(n) != 0),
             x.label + ": preservation criterion fails at |N|=" + std::to_string(n.order()));
  }
  return r;
}

// ---- stability of e_{L,phi}(G) under the elementary operations ---------------------

namespace detail {

inline bool in_span(const BurnsideElement& e, const IdealEvaluation& ev) {
  auto v = e.to_idempotent();
  const auto& c = v.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0 && !ev.contains(i))
      return false;
  return true;
}

inline std::vector<BurnsideElement> basis_elements(const IdealEvaluation& ev) {
  std::vector<BurnsideElement> out;
  for (auto c : ev.basis_classes)
    out.push_back(BurnsideElement::idempotent(ev.ring, c));
  return out;
}

} // namespace detail

inline Result stability(const GroupOverK& bk, const Group& g, std::size_t max_automorphisms = 64) {
  Result r;
  auto ev = ideal_eval(bk, g);
  const auto here = detail::basis_elements(ev);
  const std::string tag = bk.label + " at " + g.label() + ": ";
  auto lat = enumerate_subgroups(g);
  for (std::size_t c = 0; c < lat.class_count(); ++c) {
    auto sub = as_group(lat.class_subgroup(c));
    auto evh = ideal_eval(bk, sub.group);
    const auto& iota = sub.embedding;
    for (const auto& e : here)
      r.expect(detail::in_span(shifted_op(ElementaryOp::restriction, e, iota, evh.product,
                                          ev.product, evh.ring),
                               evh),
               tag + "Res to |H|=" + std::to_string(sub.group.order()));
    for (const auto& e : detail::basis_elements(evh))
      r.expect(detail::in_span(shifted_op(ElementaryOp::induction, e, iota, evh.product,
                                          ev.product, ev.ring),
                               ev),
               tag + "Ind from |H|=" + std::to_string(sub.group.order()));
  }
  for (const auto& n : normal_subgroups(g)) {
    auto quo = quotient(g, n);
    auto evq = ideal_eval(bk, quo.group);
    const auto& pi = quo.projection;
    for (const auto& e : detail::basis_elements(evq))
      r.expect(detail::in_span(shifted_op(ElementaryOp::inflation, e, pi, ev.product,
                                          evq.product, ev.ring),
                               ev),
               tag + "Inf from |G/N|=" + std::to_string(quo.group.order()));
    for (const auto& e : here)
      r.expect(detail::in_span(shifted_op(ElementaryOp::deflation, e, pi, ev.product,
                                          evq.product, evq.ring),
                               evq),
               tag + "Def to |G/N|=" + std::to_string(quo.group.order()));
  }
  std::size_t seen = 0;
  for_each_isomorphism(g, g, [&](const Homomorphism& theta) {
    for (const auto& e : here)
      r.expect(detail::in_span(shifted_op(ElementaryOp::transport, e, theta, ev.product,
                                          ev.product, ev.ring),
                               ev),
               tag + "Iso");
    return ++seen >= max_automorphisms;
  });
  return r;
}

// ---- p-restricted lattice ----------------------------------------------------------

struct LatticeCount {
  std::size_t closed = 0;
  IdealLatticeDescription formula;
  BkPoset poset;
};

inline LatticeCount lattice_count(const Group& k, std::uint64_t p) {
  LatticeCount out;
  out.poset = build_bk_poset(k, PosetMode::restricted(p));
  out.closed = closed_subsets(out.poset).size();
  out.formula = p_ideal_lattice(k, p);
  return out;
}

// ---- classification ------------------------------------------------------------------

struct Completeness {
  std::size_t over_k_classes = 0;
  std::size_t found = 0;      // p-persistent B_K classes from the exhaustive search
  std::size_t emitted = 0;    // classes from the classification
  std::size_t missing = 0;    // emitted but not found
  std::size_t extra = 0;      // found but not emitted
  std::size_t rejected = 0;   // emitted but failing the direct checks
};

inline Completeness classification_completeness(const Group& k, std::uint64_t p,
                                                std::size_t max_order) {
  Completeness out;
  auto all = enumerate_over_k(k, max_order);
  out.over_k_classes = all.size();
  OverKRegistry emitted(k);
  for (const auto& c : classify_p_persistent_bk(k, p)) {
    const auto& x = c.cls.representative;
    ++out.emitted;
    if (!is_bk_group(x) || !is_p_persistent(x, p))
      ++out.rejected;
    emitted.intern(x);
  }
  OverKRegistry found(k);
  for (const auto& c : all) {
    const auto& x = c.representative;
    MConstants m(x.L);
    if (!is_bk_group(x, m) || !is_p_persistent(x, p, m))
      continue;
    ++out.found;
    found.intern(x);
    if (!emitted.find(x))
      ++out.extra;
  }
  for (const auto& c : emitted.classes())
    if (c.representative.L.order() <= max_order && !found.find(c.representative))
      ++out.missing;
  return out;
}

} // namespace checks
