#include <gtest/gtest.h>

#include <relb/over_k.hpp>

#include "support/checks.hpp"
#include "support/fixtures.hpp"

using namespace relb;

namespace {

Group klein() { return checks::klein(); }

GroupOverK over(const Homomorphism& phi, std::string label) {
  return GroupOverK{phi.source(), phi, std::move(label)};
}

GroupOverK identity_over(const Group& k) { return over(Homomorphism::identity(k), k.label()); }

std::vector<Group> small_ks() { return {make_trivial(), make_cyclic(2), make_cyclic(4)}; }

} // namespace

TEST(GraphSubgroup, Examples) {
  auto k = make_cyclic(4);
  auto l = make_symmetric(3);
  auto g = graph_subgroup(over_trivial(l));
  EXPECT_EQ(g.graph.order(), 6u);
  auto x = GroupOverK{l, Homomorphism::trivial(l, k), "triv"};
  auto gx = graph_subgroup(x);
  EXPECT_TRUE(gx.graph == gx.product.inj1.image());

  auto d = graph_subgroup(identity_over(k));
  for (Elem e : d.graph.elements())
    EXPECT_EQ(d.product.proj1(e), d.product.proj2(e));

  auto w = checks::worked_example_over_k();
  auto gw = graph_subgroup(w);
  EXPECT_EQ(gw.graph.order(), 24u);
  EXPECT_EQ(gw.product.group.order(), 96u);
  EXPECT_TRUE(gw.graph.intersect(gw.product.inj2.image()).is_trivial());
}

TEST(PGraphSubgroup, Examples) {
  auto k = make_cyclic(4);
  auto s3 = make_symmetric(3);
  auto x = GroupOverK{s3, Homomorphism::trivial(s3, k), "triv"};
  auto g = p_graph_subgroup(x, 2);
  EXPECT_EQ(g.graph.order(), 2u);
  EXPECT_EQ(g.product.group.order(), 8u);

  auto d8 = make_dihedral(4);
  auto y = over_trivial(d8);
  EXPECT_EQ(p_graph_subgroup(y, 2).graph.order(), 8u);

  // for a p-persistent B_K-group the map onto the p-graph is bijective
  for (const auto& c : classify_p_persistent_bk(k, 2)) {
    const auto& z = c.cls.representative;
    EXPECT_EQ(p_graph_subgroup(z, 2).graph.order(), z.L.order()) << z.label;
  }
}

TEST(MorphismOverK, Examples) {
  auto w = checks::worked_example_over_k();
  EXPECT_TRUE(is_morphism_over_k(Homomorphism::identity(w.L), w, w));

  // K abelian: the condition is exactly phi = phi' o f
  auto k = make_cyclic(4);
  auto x = identity_over(k);
  auto inv = Homomorphism::from_images(k, k, {0, 3, 2, 1});
  EXPECT_FALSE(is_morphism_over_k(inv, x, x));

  // projection L -> L/<a> over C4
  auto w0 = fixtures::worked_example();
  auto a = Subgroup::generated_by(w.L, std::vector<Elem>{w0.a});
  auto qa = quotient_over_k(w, a);
  auto pi = quotient(w.L, a).projection;
  EXPECT_TRUE(is_morphism_over_k(pi, w, qa));

  // non-abelian K: conjugating the structure map is allowed
  auto s3 = make_symmetric(3);
  auto id = identity_over(s3);
  for (const auto& i : inner_automorphisms(s3)) {
    auto twisted = over(i, "twisted");
    EXPECT_TRUE(is_morphism_over_k(Homomorphism::identity(s3), id, twisted));
  }
}

TEST(MorphismOverK, RejectsWrongMaps) {
  auto k = make_cyclic(2);
  auto x = identity_over(k);
  auto y = over(Homomorphism::identity(make_cyclic(4)), "C4");
  EXPECT_THROW(is_morphism_over_k(Homomorphism::identity(k), x, y), PreconditionError);
}

TEST(IsomorphicOverK, Examples) {
  auto w = checks::worked_example_over_k();
  EXPECT_TRUE(is_isomorphic_over_k(w, w));

  auto k = make_cyclic(4);
  auto sq = Homomorphism::from_images(k, k, {0, 2, 0, 2});
  EXPECT_FALSE(is_isomorphic_over_k(identity_over(k), over(sq, "square")));

  // C3 : C4 vs C2 x S3 never agree as groups
  auto a = fixtures::c3_by_c4().group;
  auto b = direct_product(make_cyclic(2), make_symmetric(3)).group;
  for (const auto& f : all_homomorphisms(a, k))
    for (const auto& g : all_homomorphisms(b, k))
      EXPECT_FALSE(is_isomorphic_over_k(over(f, "f"), over(g, "g")));

  // C4 -> C4, c -> c and c -> c^3 are isomorphic through inversion
  auto inv = Homomorphism::from_images(k, k, {0, 3, 2, 1});
  EXPECT_TRUE(is_isomorphic_over_k(identity_over(k), over(inv, "inv")));
}

TEST(IsomorphicOverK, WitnessIsAMorphismOverK) {
  for (const auto& k : {make_cyclic(2), klein(), make_symmetric(3)}) {
    for (const auto& l : small_groups(8)) {
      auto homs = all_homomorphisms(l, k);
      for (std::size_t i = 0; i < homs.size(); ++i)
        for (std::size_t j = 0; j < homs.size(); ++j) {
          auto x = over(homs[i], "x"), y = over(homs[j], "y");
          auto f = find_isomorphism_over_k(x, y);
          // oracle: scan every automorphism of L
          bool any = false;
          for_each_isomorphism(l, l, [&](const Homomorphism& t) {
            any = is_morphism_over_k(t, x, y);
            return any;
          });
          EXPECT_EQ(f.has_value(), any) << l.label() << " over " << k.label();
          if (f) {
            EXPECT_TRUE(f->is_bijective());
            EXPECT_TRUE(is_morphism_over_k(*f, x, y));
          }
        }
    }
  }
}

TEST(QuotientOverK, Examples) {
  auto w = checks::worked_example_over_k();
  EXPECT_TRUE(is_quotient_over_k(w, w));
  auto v = over_trivial(klein());
  auto c2 = over_trivial(make_cyclic(2));
  EXPECT_TRUE(is_quotient_over_k(v, c2));
  EXPECT_FALSE(is_quotient_over_k(c2, v));
  EXPECT_TRUE(is_quotient_over_k(v, over_trivial(make_trivial())));
  EXPECT_FALSE(is_quotient_over_k(over_trivial(make_cyclic(4)), v));
  auto n = Subgroup::whole(w.L);
  EXPECT_THROW(quotient_over_k(w, n), PreconditionError);
}

TEST(QuotientOverK, PreorderAndAntisymmetry) {
  for (const auto& k : small_ks()) {
    auto classes = enumerate_over_k(k, 8);
    for (const auto& a : classes)
      EXPECT_TRUE(is_quotient_over_k(a.representative, a.representative));
    for (const auto& a : classes)
      for (const auto& b : classes) {
        const auto& x = a.representative;
        const auto& y = b.representative;
        if (!is_quotient_over_k(x, y))
          continue;
        if (x.L.order() == y.L.order())
          EXPECT_TRUE(is_isomorphic_over_k(x, y));
        if (is_quotient_over_k(y, x))
          EXPECT_TRUE(is_isomorphic_over_k(x, y));
        for (const auto& c : classes)
          if (is_quotient_over_k(y, c.representative))
            EXPECT_TRUE(is_quotient_over_k(x, c.representative)) << x.label;
      }
  }
}

TEST(BkGroup, Examples) {
  EXPECT_TRUE(is_bk_group(checks::worked_example_over_k()));
  EXPECT_TRUE(is_bk_group(over_trivial(klein())));
  EXPECT_FALSE(is_bk_group(over_trivial(make_cyclic(2))));
  EXPECT_FALSE(is_bk_group(over_trivial(make_cyclic(4))));
  EXPECT_TRUE(is_bk_group(over_trivial(make_trivial())));
  for (const auto& k : {make_cyclic(4), make_symmetric(3), klein()}) {
    auto lat = enumerate_subgroups(k);
    for (const auto& h : lat.subgroups())
      EXPECT_TRUE(is_bk_group(subgroup_over_k(h)));
  }
}

TEST(BkGroup, WorkedExampleMConstants) {
  auto w = checks::worked_example_over_k();
  auto b = beta_k_details(w);
  ASSERT_EQ(b.m_values.size(), 4u);
  EXPECT_EQ(b.m_values[0].second, 1);
  for (std::size_t i = 1; i < 4; ++i)
    EXPECT_EQ(b.m_values[i].second, 0) << b.m_values[i].first.order();
  EXPECT_EQ(b.m_values[1].first.order(), 2u);
  EXPECT_EQ(b.m_values[2].first.order(), 3u);
  EXPECT_EQ(b.m_values[3].first.order(), 6u);
  EXPECT_TRUE(b.q.is_trivial());
}

TEST(BetaK, Examples) {
  auto w = checks::worked_example_over_k();
  EXPECT_TRUE(is_isomorphic_over_k(beta_k(w), w));
  for (std::uint64_t p : {2, 3, 5}) {
    auto b = beta_k(over_trivial(make_cyclic(p)));
    EXPECT_EQ(b.L.order(), 1u);
    auto d = beta_k_details(over_trivial(make_cyclic(p)));
    EXPECT_EQ(d.m_values.back().second, Rational(static_cast<long long>(p - 1)) /
                                            Rational(static_cast<long long>(p)));
  }
  auto v = over_trivial(klein());
  EXPECT_TRUE(is_isomorphic_over_k(beta_k(v), v));
}

TEST(BetaK, PropertiesOverSmallClasses) {
  for (const auto& k : small_ks())
    for (const auto& c : enumerate_over_k(k, 12)) {
      auto r = checks::beta_properties(c.representative);
      EXPECT_TRUE(r.ok) << r.failure;
    }
}

TEST(PPersistent, Examples) {
  EXPECT_TRUE(is_p_persistent(over_trivial(make_dihedral(4)), 2));
  EXPECT_TRUE(is_p_persistent(over_trivial(make_cyclic(9)), 3));
  EXPECT_FALSE(is_p_persistent(over_trivial(klein()), 3));
  for (const auto& k : {make_cyclic(4), make_symmetric(3)}) {
    auto lat = enumerate_subgroups(k);
    for (const auto& h : lat.subgroups())
      for (std::uint64_t p : {2, 3, 5})
        EXPECT_TRUE(is_p_persistent(subgroup_over_k(h), p));
  }
  EXPECT_THROW(is_p_persistent(over_trivial(klein()), 4), PreconditionError);
}

TEST(Classification, SmallExamples) {
  auto one = classify_p_persistent_bk(make_trivial(), 2);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].tag, BkCase::embedding);
  EXPECT_EQ(one[1].tag, BkCase::cp2_extension);
  EXPECT_TRUE(are_isomorphic(one[1].cls.representative.L, klein()));

  auto c4 = classify_p_persistent_bk(make_cyclic(4), 2);
  EXPECT_EQ(c4.size(), 6u);

  auto v = classify_p_persistent_bk(klein(), 2);
  EXPECT_EQ(v.size(), 9u);
  const auto top = v.back();
  EXPECT_EQ(top.cls.representative.L.order(), 4u);
  EXPECT_EQ(top.tag, BkCase::embedding);
  // (C2 x K, j o pi) is not a p-persistent B_K-group
  auto dp = direct_product(make_cyclic(2), klein());
  auto extra = GroupOverK{dp.group, dp.proj2, "C2 x K"};
  EXPECT_FALSE(is_bk_group(extra) && is_p_persistent(extra, 2));
}

TEST(Classification, EmittedGroupsPassDirectChecks) {
  for (const auto& k : {make_trivial(), make_cyclic(2), make_cyclic(3), make_cyclic(4), klein(),
                        make_symmetric(3), make_dihedral(4)})
    for (std::uint64_t p : {2, 3}) {
      auto list = classify_p_persistent_bk(k, p);
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& x = list[i].cls.representative;
        EXPECT_TRUE(is_bk_group(x)) << x.label;
        EXPECT_TRUE(is_p_persistent(x, p)) << x.label;
        EXPECT_TRUE(p_persistence_subgroup(x, p).is_trivial()) << x.label;
        auto ker = x.phi.kernel();
        EXPECT_TRUE(ker.is_central()) << x.label;
        auto kg = as_group(ker).group;
        EXPECT_TRUE(kg.is_abelian());
        EXPECT_TRUE(kg.exponent() == 1 || kg.exponent() == p);
        EXPECT_LE(kg.order(), p * p);
        for (std::size_t j = 0; j < i; ++j)
          EXPECT_FALSE(is_isomorphic_over_k(x, list[j].cls.representative)) << x.label;
      }
    }
}

TEST(Classification, ExhaustiveSearchAgrees) {
  for (const auto& k : {make_cyclic(2), make_cyclic(4), klein()}) {
    auto c = checks::classification_completeness(k, 2, 16);
    EXPECT_EQ(c.missing, 0u) << k.label();
    EXPECT_EQ(c.extra, 0u) << k.label();
    EXPECT_EQ(c.rejected, 0u) << k.label();
    EXPECT_EQ(c.found, c.emitted) << k.label();
  }
}

TEST(Registry, InternsUpToIsomorphism) {
  auto k = make_cyclic(4);
  OverKRegistry reg(k);
  auto inv = Homomorphism::from_images(k, k, {0, 3, 2, 1});
  EXPECT_EQ(reg.intern(identity_over(k)), 0u);
  EXPECT_EQ(reg.intern(over(inv, "inv")), 0u);
  EXPECT_EQ(reg.intern(over(Homomorphism::trivial(k, k), "triv")), 1u);
  EXPECT_EQ(reg.size(), 2u);
  EXPECT_EQ(reg.classes()[0].member_count, 2u);
  EXPECT_EQ(reg.classes()[0].representative.label, "C4");
  EXPECT_THROW(reg.intern(identity_over(make_cyclic(2))), PreconditionError);
}

TEST(AllHomomorphisms, CountsAgreeWithBruteForce) {
  for (const auto& l : small_groups(8))
    for (const auto& k : {make_cyclic(2), make_cyclic(4), make_symmetric(3)}) {
      std::size_t brute = 0;
      // every map on generators, kept if it extends
      auto gens = l.generators();
      std::vector<Elem> img(gens.size(), 0);
      while (true) {
        if (Homomorphism::extend(l, k, gens, img))
          ++brute;
        std::size_t i = 0;
        while (i < img.size() && ++img[i] == k.order())
          img[i++] = 0;
        if (i == img.size())
          break;
      }
      EXPECT_EQ(all_homomorphisms(l, k).size(), brute) << l.label() << " -> " << k.label();
    }
}
