#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace relb {

using Elem = std::uint32_t;
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline std::vector<Elem> members_of(const ElementSet& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Elem>(i));
  return out;
}

// Order on equal-sized sets by their sorted member lists: the set holding the
// smallest element of the symmetric difference comes first.
inline bool lex_less(const ElementSet& a, const ElementSet& b) {
  auto diff = a ^ b;
  auto first = diff.find_first();
  if (first == ElementSet::npos)
    return false;
  return a.test(first);
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::vector<std::uint64_t> blocks;
    blocks.reserve(s.num_blocks());
    boost::to_block_range(s, std::back_inserter(blocks));
    std::uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
    for (auto b : blocks) {
      h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

} // namespace relb
