#pragma once

// Group definition documents. One definition per line, '#' starts a
// comment:
//
//   group K = cyclic 4 gens k
//   group B = cyclic 3 gens b
//   group C = cyclic 4 gens c
//   group H = semidirect B C : c: b -> b^-1
//   group L = product A H
//   group P = perm 4 gens s t : (1 2 3 4), (1 2)
//   group Q = quotient L : a, b
//   hom phi : L -> K : a -> 1, b -> 1, c -> k
//
// Kinds: trivial, cyclic n, symmetric n, alternating n, dihedral n (order 2n),
// dicyclic n (order 4n), product A B ..., semidirect N H : <action>,
// perm degree : <cycles>, quotient G : <normal generators>. An optional
// "gens x y" renames the generators. Semidirect actions list, per generator
// of H, the images of the generators of N ("h: n -> w, ...; h2: ..."); a
// generator of N left out is fixed. Hom images default to the identity.

#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "relb/constructions.hpp"
#include "relb/cli/words.hpp"

namespace relb::cli {

struct DocumentOptions {
  Validation validation = Validation::full;
  std::size_t max_order = 4096;
};

class GroupSpecDocument {
public:
  static GroupSpecDocument parse(std::istream& in, const DocumentOptions& opt = {}) {
    GroupSpecDocument doc;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos)
        line.resize(hash);
      line = trim(line);
      if (line.empty())
        continue;
      try {
        doc.parse_line(line, opt);
      } catch (const Error& e) {
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (e.kind() == ErrorKind::resource_cap)
          throw CapExceeded(where + e.what());
        if (e.kind() == ErrorKind::parse)
          throw ParseError(where + e.what());
        throw ValidationError(where + e.what());
      }
    }
    return doc;
  }

  static GroupSpecDocument parse_string(const std::string& text, const DocumentOptions& opt = {}) {
    std::istringstream in(text);
    return parse(in, opt);
  }

  bool has_group(const std::string& name) const { return groups_.count(name) > 0; }
  bool has_hom(const std::string& name) const { return homs_.count(name) > 0; }

  const Group& group(const std::string& name) const {
    auto it = groups_.find(name);
    if (it == groups_.end())
      throw ValidationError("unknown group '" + name + "'");
    return it->second;
  }
  const Homomorphism& hom(const std::string& name) const {
    auto it = homs_.find(name);
    if (it == homs_.end())
      throw ValidationError("unknown homomorphism '" + name + "'");
    return it->second;
  }
  // The name a group was defined under: the definition carrying its label,
  // else the first one with the same table, else its label.
  std::string name_of(const Group& g) const {
    if (auto it = groups_.find(g.label()); it != groups_.end() && it->second == g)
      return g.label();
    for (const auto& n : group_order_)
      if (groups_.at(n) == g)
        return n;
    return g.label();
  }

  const std::vector<std::string>& group_names() const { return group_order_; }
  const std::vector<std::string>& hom_names() const { return hom_order_; }

private:
  std::map<std::string, Group> groups_;
  std::map<std::string, Homomorphism> homs_;
  std::vector<std::string> group_order_;
  std::vector<std::string> hom_order_;

  static std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t)
      out.push_back(t);
    return out;
  }

  static std::size_t number(const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      throw ParseError("expected a number, got '" + s + "'");
    }
    if (used != s.size())
      throw ParseError("expected a number, got '" + s + "'");
    return v;
  }

  static void check_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
      throw ParseError("bad name '" + s + "'");
    for (char ch : s)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw ParseError("bad name '" + s + "'");
  }

  void define_group(const std::string& name, Group g) {
    check_identifier(name);
    if (groups_.count(name))
      throw ValidationError("group '" + name + "' defined twice");
    groups_.emplace(name, std::move(g));
    group_order_.push_back(name);
  }

  void parse_line(const std::string& line, const DocumentOptions& opt) {
    auto head = tokens(line.substr(0, line.find_first_of(" \t")));
    const auto kw = head.empty() ? std::string() : head[0];
    const auto rest = trim(line.substr(kw.size()));
    if (kw == "group")
      parse_group(rest, opt);
    else if (kw == "hom")
      parse_hom(rest);
    else
      throw ParseError("expected 'group' or 'hom', got '" + kw + "'");
  }

  // NAME = KIND ARGS [gens ...] [: DETAILS]
  void parse_group(const std::string& text, const DocumentOptions& opt) {
    auto eq = text.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'group NAME = ...'");
    const auto name = trim(text.substr(0, eq));
    auto body = trim(text.substr(eq + 1));
    std::string details;
    bool has_details = false;
    if (auto colon = body.find(':'); colon != std::string::npos) {
      details = trim(body.substr(colon + 1));
      body = trim(body.substr(0, colon));
      has_details = true;
    }
    auto tok = tokens(body);
    if (tok.empty())
      throw ParseError("missing group kind");
    std::vector<std::string> gen_names;
    if (auto it = std::find(tok.begin(), tok.end(), "gens"); it != tok.end()) {
      gen_names.assign(it + 1, tok.end());
      tok.erase(it, tok.end());
      if (gen_names.empty())
        throw ParseError("'gens' needs at least one name");
      for (const auto& g : gen_names)
        check_identifier(g);
    }
    const auto kind = tok[0];
    auto arg = [&](std::size_t i) -> const std::string& {
      if (i >= tok.size())
        throw ParseError(kind + ": missing argument");
      return tok[i];
    };
    auto expect_args = [&](std::size_t n) {
      if (tok.size() != n + 1)
        throw ParseError(kind + " takes " + std::to_string(n) + " argument(s)");
    };
    auto no_details = [&] {
      if (has_details)
        throw ParseError(kind + " takes no ':' section");
    };
    auto bounded = [&](std::size_t order) {
      if (order > opt.max_order)
        throw CapExceeded("group order " + std::to_string(order) + " exceeds --max-order " +
                          std::to_string(opt.max_order));
    };

    Group g;
    if (kind == "trivial") {
      expect_args(0);
      no_details();
      g = make_trivial();
    } else if (kind == "cyclic") {
      expect_args(1);
      no_details();
      const auto n = number(arg(1));
      bounded(n);
      g = make_cyclic(n);
    } else if (kind == "symmetric" || kind == "alternating") {
      expect_args(1);
      no_details();
      const auto n = number(arg(1));
      if (n > 7)
        throw CapExceeded(kind + " " + std::to_string(n) + " is too large");
      g = kind == "symmetric" ? make_symmetric(n) : make_alternating(n);
      bounded(g.order());
    } else if (kind == "dihedral" || kind == "dicyclic") {
      expect_args(1);
      no_details();
      const auto n = number(arg(1));
      bounded(kind == "dihedral" ? 2 * n : 4 * n);
      g = kind == "dihedral" ? make_dihedral(n) : make_dicyclic(n);
    } else if (kind == "product") {
      no_details();
      if (tok.size() < 3)
        throw ParseError("product needs at least two factors");
      g = group(tok[1]);
      for (std::size_t i = 2; i < tok.size(); ++i) {
        bounded(g.order() * group(tok[i]).order());
        g = direct_product(g, group(tok[i])).group;
      }
    } else if (kind == "semidirect") {
      expect_args(2);
      const auto& n = group(arg(1));
      const auto& h = group(arg(2));
      bounded(n.order() * h.order());
      g = semidirect_product_from_generators(n, h, parse_action(n, h, details), name,
                                             opt.validation)
              .group;
    } else if (kind == "perm") {
      expect_args(1);
      const auto degree = number(arg(1));
      if (degree == 0 || degree > 32)
        throw ParseError("perm degree must be between 1 and 32");
      std::vector<std::vector<std::uint32_t>> perms;
      for (const auto& p : split(details, ','))
        if (!p.empty())
          perms.push_back(parse_cycles(p, degree));
      g = from_permutations(degree, perms, name, {}, opt.max_order);
    } else if (kind == "quotient") {
      expect_args(1);
      const auto& parent = group(arg(1));
      auto n = Subgroup::generated_by(parent, parse_word_list(parent, details));
      if (!n.is_normal())
        throw ValidationError("quotient: the listed elements do not generate a normal subgroup");
      g = quotient(parent, n).group;
    } else {
      throw ParseError("unknown group kind '" + kind + "'");
    }
    if (!gen_names.empty()) {
      if (gen_names.size() != g.generators().size())
        throw ValidationError(name + " has " + std::to_string(g.generators().size()) +
                              " generator(s), 'gens' lists " + std::to_string(gen_names.size()));
      std::vector<Elem> ids(g.generators().begin(), g.generators().end());
      g = g.with_generators(ids, gen_names);
    }
    define_group(name, g.relabeled(name));
  }

  // "h: n -> w, n2 -> w; h2: ..." into one automorphism of N per generator of H
  static std::vector<std::vector<Elem>> parse_action(const Group& n, const Group& h,
                                                     const std::string& text) {
    auto hn = h.generator_names();
    auto ngens = n.generators();
    std::vector<std::vector<Elem>> images(hn.size(),
                                          std::vector<Elem>(ngens.begin(), ngens.end()));
    std::vector<bool> given(hn.size(), false);
    for (const auto& clause : split(text, ';')) {
      if (clause.empty())
        continue;
      auto colon = clause.find(':');
      if (colon == std::string::npos)
        throw ParseError("action clause needs 'generator: ...'");
      const auto hname = trim(clause.substr(0, colon));
      std::size_t j = 0;
      while (j < hn.size() && hn[j] != hname)
        ++j;
      if (j == hn.size())
        throw ParseError("unknown generator '" + hname + "' of " + h.label());
      if (given[j])
        throw ParseError("action of '" + hname + "' given twice");
      given[j] = true;
      for (const auto& m : split(clause.substr(colon + 1), ',')) {
        if (m.empty())
          continue;
        auto arrow = m.find("->");
        if (arrow == std::string::npos)
          throw ParseError("expected 'generator -> word' in action");
        const auto src = trim(m.substr(0, arrow));
        auto nn = n.generator_names();
        std::size_t i = 0;
        while (i < nn.size() && nn[i] != src)
          ++i;
        if (i == nn.size())
          throw ParseError("unknown generator '" + src + "' of " + n.label());
        images[j][i] = parse_word(n, m.substr(arrow + 2));
      }
    }
    std::vector<std::vector<Elem>> out;
    for (const auto& im : images)
      out.push_back(automorphism_images(n, ngens, im));
    return out;
  }

  // "(1 2 3)(4 5)" on points 1..degree; "()" is the identity
  static std::vector<std::uint32_t> parse_cycles(const std::string& text, std::size_t degree) {
    std::vector<std::uint32_t> perm(degree);
    for (std::size_t i = 0; i < degree; ++i)
      perm[i] = static_cast<std::uint32_t>(i);
    std::vector<bool> moved(degree, false);
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      if (text[pos] != '(')
        throw ParseError("expected '(' in permutation '" + text + "'");
      auto close = text.find(')', pos);
      if (close == std::string::npos)
        throw ParseError("unbalanced '(' in permutation '" + text + "'");
      std::vector<std::uint32_t> cyc;
      for (const auto& t : tokens(text.substr(pos + 1, close - pos - 1))) {
        const auto p = number(t);
        if (p < 1 || p > degree)
          throw ValidationError("point " + t + " outside 1.." + std::to_string(degree));
        if (moved[p - 1])
          throw ValidationError("point " + t + " repeated in '" + text + "'");
        moved[p - 1] = true;
        cyc.push_back(static_cast<std::uint32_t>(p - 1));
      }
      for (std::size_t i = 0; i < cyc.size(); ++i)
        perm[cyc[i]] = cyc[(i + 1) % cyc.size()];
      pos = close + 1;
    }
    return perm;
  }

  // NAME : SRC -> DST [: gen -> word, ...]
  void parse_hom(const std::string& text) {
    auto first = text.find(':');
    if (first == std::string::npos)
      throw ParseError("expected 'hom NAME : SRC -> DST : ...'");
    const auto name = trim(text.substr(0, first));
    check_identifier(name);
    auto rest = text.substr(first + 1);
    std::string maps;
    if (auto second = rest.find(':'); second != std::string::npos) {
      maps = rest.substr(second + 1);
      rest = rest.substr(0, second);
    }
    auto arrow = rest.find("->");
    if (arrow == std::string::npos)
      throw ParseError("expected 'SRC -> DST'");
    const auto& src = group(trim(rest.substr(0, arrow)));
    const auto& dst = group(trim(rest.substr(arrow + 2)));
    auto sn = src.generator_names();
    auto sg = src.generators();
    std::vector<Elem> images(sg.size(), 0);
    std::vector<bool> given(sg.size(), false);
    for (const auto& m : split(maps, ',')) {
      if (m.empty())
        continue;
      auto a = m.find("->");
      if (a == std::string::npos)
        throw ParseError("expected 'generator -> word'");
      const auto g = trim(m.substr(0, a));
      std::size_t j = 0;
      while (j < sn.size() && sn[j] != g)
        ++j;
      if (j == sn.size())
        throw ParseError("unknown generator '" + g + "' of " + src.label());
      if (given[j])
        throw ParseError("image of '" + g + "' given twice");
      given[j] = true;
      images[j] = parse_word(dst, m.substr(a + 2));
    }
    auto f = Homomorphism::extend(src, dst, sg, images);
    if (!f)
      throw ValidationError("hom " + name + ": the images do not define a homomorphism");
    if (homs_.count(name))
      throw ValidationError("hom '" + name + "' defined twice");
    homs_.emplace(name, std::move(*f));
    hom_order_.push_back(name);
  }
};

} // namespace relb::cli
