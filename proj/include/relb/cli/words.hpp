#pragma once

// Words in the named generators of a group: parsing "a*b^-1*c^2" and naming
// elements by their shortlex-first word.

#include <cctype>
#include <string>
#include <vector>

#include "relb/group.hpp"
#include "relb/lattice.hpp"

namespace relb::cli {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// "1" is the identity; otherwise factors gen or gen^k joined by '*'.
inline Elem parse_word(const Group& g, const std::string& text) {
  const auto w = trim(text);
  if (w.empty())
    throw ParseError("empty word");
  if (w == "1")
    return 0;
  auto names = g.generator_names();
  auto gens = g.generators();
  Elem acc = 0;
  for (const auto& f : split(w, '*')) {
    auto caret = f.find('^');
    const auto name = trim(f.substr(0, caret));
    long long e = 1;
    if (caret != std::string::npos) {
      const auto ex = trim(f.substr(caret + 1));
      try {
        std::size_t used = 0;
        e = std::stoll(ex, &used);
        if (used != ex.size())
          throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad exponent in word '" + w + "'");
      }
    }
    std::size_t j = 0;
    while (j < names.size() && names[j] != name)
      ++j;
    if (j == names.size())
      throw ParseError("unknown generator '" + name + "' of " + g.label());
    Elem x = gens[j];
    if (e < 0) {
      x = g.inv(x);
      e = -e;
    }
    acc = g.mul(acc, g.pow(x, e));
  }
  return acc;
}

inline std::vector<Elem> parse_word_list(const Group& g, const std::string& text) {
  std::vector<Elem> out;
  if (trim(text).empty())
    return out;
  for (const auto& w : split(text, ','))
    out.push_back(parse_word(g, w));
  return out;
}

// Shortlex-first word for every element (generators in their listed order).
class ElementNames {
public:
  explicit ElementNames(const Group& g) : g_(g), word_(g.order()) {
    auto gens = g.generators();
    std::vector<std::vector<std::size_t>> seq(g.order());
    std::vector<bool> seen(g.order(), false);
    seen[0] = true;
    std::vector<Elem> order{0};
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Elem x = order[head];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Elem y = g.mul(x, gens[j]);
        if (seen[y])
          continue;
        seen[y] = true;
        seq[y] = seq[x];
        seq[y].push_back(j);
        order.push_back(y);
      }
    }
    order_ = std::move(order);
    auto names = g.generator_names();
    for (Elem x = 0; x < g.order(); ++x) {
      if (seq[x].empty()) {
        word_[x] = "1";
        continue;
      }
      std::string w;
      for (std::size_t i = 0; i < seq[x].size();) {
        std::size_t k = i;
        while (k < seq[x].size() && seq[x][k] == seq[x][i])
          ++k;
        if (!w.empty())
          w += "*";
        w += names[seq[x][i]];
        if (k - i > 1)
          w += "^" + std::to_string(k - i);
        i = k;
      }
      word_[x] = std::move(w);
    }
  }

  const std::string& operator()(Elem x) const { return word_[x]; }
  // Elements in shortlex order of their words.
  const std::vector<Elem>& shortlex() const { return order_; }

  // Greedy generating set: shortlex-first elements not yet in the span.
  std::vector<Elem> canonical_generators(const Subgroup& h) const {
    std::vector<Elem> gens;
    auto cur = Subgroup::trivial(g_);
    for (Elem x : order_) {
      if (cur.order() == h.order())
        break;
      if (!h.contains(x) || cur.contains(x))
        continue;
      gens.push_back(x);
      cur = Subgroup::generated_by(g_, gens);
    }
    return gens;
  }

  // "order:w1,w2"
  std::string label(const Subgroup& h) const {
    std::string s = std::to_string(h.order()) + ":";
    bool first = true;
    for (Elem x : canonical_generators(h)) {
      if (!first)
        s += ",";
      s += word_[x];
      first = false;
    }
    return s;
  }

  std::string class_label(const SubgroupLattice& lat, std::size_t cls) const {
    return label(lat.class_subgroup(cls));
  }

private:
  Group g_;
  std::vector<std::string> word_;
  std::vector<Elem> order_;
};

} // namespace relb::cli
