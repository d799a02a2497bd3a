#pragma once

// The four report-producing commands behind the relb tool.

#include <string>
#include <vector>

#include "relb/burnside.hpp"
#include "relb/ideals.hpp"
#include "relb/over_k.hpp"
#include "relb/cli/document.hpp"
#include "relb/cli/report.hpp"
#include "relb/cli/words.hpp"

namespace relb::cli {

struct CommandOptions {
  LatticeLimits limits;
  bool check = true;
};

namespace detail {

inline std::string described(const GroupSpecDocument& doc, const Group& g) {
  const auto id = identify_label(g);
  const auto name = doc.name_of(g);
  std::string s = name + " (order " + std::to_string(g.order());
  if (id != name && id != g.label())
    s += ", " + id;
  return s + ")";
}

inline void record_check(Report& r, bool ok, const std::string& what) {
  r.set("check", ok ? "passed" : "FAILED: " + what);
  if (!ok)
    r.exit_status = 1;
}

inline void skip_check(Report& r) { r.set("check", "skipped"); }

inline GroupOverK resolve_over_k(const GroupSpecDocument& doc, const std::string& k,
                                 const std::string& l, const std::string& phi) {
  const auto& kg = doc.group(k);
  const auto& lg = doc.group(l);
  const auto& f = doc.hom(phi);
  if (!(f.source() == lg) || !(f.target() == kg))
    throw ValidationError("hom " + phi + " does not map " + l + " to " + k);
  return GroupOverK{lg, f, "(" + l + ", " + phi + ")"};
}

} // namespace detail

// Gluck idempotent of the subgroup generated by the given words ("*" for the
// whole group, empty for the trivial subgroup).
inline Report cmd_idempotent(const GroupSpecDocument& doc, const std::string& group_name,
                             const std::string& subgroup, const CommandOptions& opt = {}) {
  Report r;
  const auto& g = doc.group(group_name);
  auto ring = BurnsideRing::of(g, opt.limits);
  const auto& lat = ring.lattice();
  ElementNames names(g);
  const auto h = trim(subgroup) == "*" ? Subgroup::whole(g)
                                       : Subgroup::generated_by(g, parse_word_list(g, subgroup));
  const auto cls = lat.class_of(h);
  auto e = gluck_idempotent(ring, h);

  r.set("group", detail::described(doc, g));
  r.set("subgroup", names.label(h));
  r.set("class", names.class_label(lat, cls));
  r.set("class size", std::to_string(lat.class_size(cls)));
  r.set("normalizer order", std::to_string(lat.normalizer_order(cls)));
  r.set("classes", std::to_string(lat.class_count()));

  Table coeff{"coefficients", {"class", "order", "coefficient"}, {}};
  const auto c = e.to_transitive().coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0)
      coeff.rows.push_back({names.class_label(lat, i),
                            std::to_string(lat.class_subgroup(i).order()), to_string(c[i])});
  Table marks{"marks", {"class", "order", "mark"}, {}};
  auto mv = marks_of(e);
  for (std::size_t i = 0; i < mv.size(); ++i)
    marks.rows.push_back(
        {names.class_label(lat, i), std::to_string(lat.class_subgroup(i).order()), to_string(mv[i])});
  r.tables = {coeff, marks};

  if (opt.check) {
    bool ok = true;
    for (std::size_t i = 0; i < mv.size(); ++i)
      ok = ok && mv[i] == Rational(i == cls ? 1 : 0);
    ok = ok && multiply(e, e) == e;
    detail::record_check(r, ok, "marks vector is not the indicator of the class");
  } else {
    detail::skip_check(r);
  }
  return r;
}

// beta_K(L, phi) with every m_{L,N} for normal N <= Ker phi.
inline Report cmd_beta(const GroupSpecDocument& doc, const std::string& k, const std::string& l,
                       const std::string& phi, const CommandOptions& opt = {}) {
  Report r;
  auto x = detail::resolve_over_k(doc, k, l, phi);
  MConstants m(x.L, opt.limits);
  auto b = beta_k_details(x, m);
  ElementNames ln(x.L), kn(x.K());
  const bool bk = b.q.is_trivial();

  r.set("L", detail::described(doc, x.L));
  r.set("K", detail::described(doc, x.K()));
  r.set("phi", phi);
  r.set("kernel", ln.label(x.phi.kernel()));
  r.set("image", kn.label(x.phi.image()));
  r.set("verdict", bk ? "B_K-group" : "not a B_K-group");
  r.set("Q", ln.label(b.q));
  r.set("beta order", std::to_string(b.beta.L.order()));
  r.set("beta group", identify_label(b.beta.L));
  r.set("beta kernel order", std::to_string(b.beta.phi.kernel().order()));

  Table t{"m_values", {"N", "order", "m"}, {}};
  for (const auto& [n, v] : b.m_values)
    t.rows.push_back({ln.label(n), std::to_string(n.order()), to_string(v)});
  r.tables = {t};

  if (opt.check) {
    bool ok = is_bk_group(b.beta) && is_quotient_over_k(x, b.beta);
    for (const auto& q : beta_k_candidates(x, m))
      ok = ok && is_isomorphic_over_k(quotient_over_k(x, q), b.beta);
    detail::record_check(r, ok, "beta is not a well-defined B_K-group quotient");
  } else {
    detail::skip_check(r);
  }
  return r;
}

// Minimal groups of S_{L,phi} and its dimension at each target group (the
// minimal groups themselves when no targets are given).
inline Report cmd_simple(const GroupSpecDocument& doc, const std::string& k, const std::string& l,
                         const std::string& phi, const std::vector<std::string>& targets,
                         const CommandOptions& opt = {}) {
  Report r;
  auto x = detail::resolve_over_k(doc, k, l, phi);
  if (!is_bk_group(x, MConstants(x.L, opt.limits)))
    throw PreconditionError(x.label + " is not a B_K-group; run 'relb beta' to get its largest "
                            "B_K-group quotient");
  auto mins = minimal_groups(x);
  r.set("L", detail::described(doc, x.L));
  r.set("K", detail::described(doc, x.K()));
  r.set("phi", phi);
  r.set("minimal order", std::to_string(mins.front().order()));

  Table mt{"minimal_groups", {"group", "order", "in spec"}, {}};
  for (const auto& g : mins) {
    std::string same;
    for (const auto& n : doc.group_names())
      if (doc.group(n).order() == g.order() && are_isomorphic(doc.group(n), g))
        same += (same.empty() ? "" : ",") + n;
    mt.rows.push_back({identify_label(g), std::to_string(g.order()), same.empty() ? "-" : same});
  }

  std::vector<std::pair<std::string, Group>> tg;
  for (const auto& t : targets)
    tg.emplace_back(t, doc.group(t));
  if (tg.empty())
    for (const auto& g : mins)
      tg.emplace_back(identify_label(g), g);

  Table dt{"dimensions", {"target", "order", "dim", "basis"}, {}};
  bool ok = true;
  for (const auto& [name, g] : tg) {
    auto basis = simple_basis(x, g, opt.limits);
    auto gk = direct_product(g, x.K());
    auto lat = enumerate_subgroups(gk.group, opt.limits);
    ElementNames gn(gk.group);
    std::string labels;
    for (auto c : basis)
      labels += (labels.empty() ? "" : " ; ") + gn.class_label(lat, c);
    dt.rows.push_back({name, std::to_string(g.order()), std::to_string(basis.size()),
                       labels.empty() ? "-" : labels});
    if (opt.check) {
      bool minimal = false;
      for (const auto& mg : mins)
        minimal = minimal || are_isomorphic(mg, g);
      if (minimal)
        ok = ok && !basis.empty();
      if (g.order() < mins.front().order())
        ok = ok && basis.empty();
    }
  }
  r.tables = {mt, dt};
  if (opt.check)
    detail::record_check(r, ok, "dimensions contradict the minimal groups");
  else
    detail::skip_check(r);
  return r;
}

// Classification of p-persistent B_K-groups and the count of ideals.
inline Report cmd_p_lattice(const GroupSpecDocument& doc, const std::string& k, std::uint64_t p,
                            const CommandOptions& opt = {}) {
  Report r;
  const auto& kg = doc.group(k);
  require_prime(p);
  auto desc = p_ideal_lattice(kg, p);
  auto classified = classify_p_persistent_bk(kg, p);
  auto lat = enumerate_subgroups(kg, opt.limits);
  ElementNames kn(kg);

  Table t{"classification", {"class", "H", "H^[p]", "cases", "component"}, {}};
  std::size_t green = 0;
  for (const auto& comp : desc.components) {
    std::string cases;
    for (const auto& c : classified)
      if (c.k_class == comp.k_class)
        cases += (cases.empty() ? "" : "+") + std::string(case_name(c.tag));
    if (!comp.chain2)
      ++green;
    t.rows.push_back({kn.class_label(lat, comp.k_class), comp.h_label, comp.residual_label, cases,
                      comp.chain2 ? "chain2" : "isolated (Green field)"});
  }
  r.set("K", detail::described(doc, kg));
  r.set("p", std::to_string(p));
  r.set("c_K", std::to_string(desc.c_count));
  r.set("nc_K", std::to_string(desc.nc_count));
  r.set("total ideals", desc.total_ideals.str());
  r.set("Green fields", std::to_string(green));
  r.set("nodes", std::to_string(classified.size()));
  r.tables = {t};

  if (opt.check) {
    auto poset = build_bk_poset(kg, PosetMode::restricted(p));
    const auto closed = closed_subsets(poset).size();
    r.set("covers", std::to_string(poset.covers.size()));
    r.set("closed subsets", std::to_string(closed));
    const bool ok = Integer(closed) == desc.total_ideals;
    r.set("verified", ok ? "yes" : "no");
    detail::record_check(r, ok, "closed-subset count differs from the product formula");
  } else {
    r.set("verified", "skipped");
    detail::skip_check(r);
  }
  return r;
}

} // namespace relb::cli
