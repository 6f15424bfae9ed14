#pragma once

#include <cstddef>
#include <vector>

#include "hg/core/hypergroup.hpp"
#include "hg/morph/morphism.hpp"

namespace hg {

namespace detail {

// Depth-first assignment of f(1), f(2), ... in increasing value order, so
// complete maps come out lexicographically sorted. Once f(x) is set, every
// condition-i triple with largest index x and the inverse condition on the
// pair {x, r(x)} are checked.
template <class Visit>
void for_each_hom(const Hypergroup& g, const Hypergroup& h, Visit&& visit) {
  const std::size_t n = g.order();
  std::vector<Element> map(n, 0);
  auto consistent = [&](Element x) {
    const Element rx = g.r(x);
    if (rx <= x && map[rx] != h.r(map[x])) return false;
    for (Element a = 0; a <= x; ++a)
      for (Element b = 0; b <= x; ++b) {
        const ElementSet cell = g.cell(a, b);
        const ElementSet target = h.cell(map[a], map[b]);
        for (Element c : cell) {
          if (c > x) break;
          if (a != x && b != x && c != x) continue;
          if (!target.contains(map[c])) return false;
        }
      }
    return true;
  };
  if (!consistent(0)) return;
  auto rec = [&](auto&& self, Element x) -> bool {
    if (x == n) return visit(static_cast<const std::vector<Element>&>(map));
    for (Element v = 0; v < h.order(); ++v) {
      map[x] = v;
      if (consistent(x) && !self(self, x + 1)) return false;
    }
    map[x] = 0;
    return true;
  };
  rec(rec, 1);
}

}  // namespace detail

/// All morphisms g -> h, ordered lexicographically by their value arrays.
/// The zero morphism is always first.
inline std::vector<Morphism> enumerate_hom(const Hypergroup& g, const Hypergroup& h) {
  std::vector<Morphism> out;
  detail::for_each_hom(g, h, [&](const std::vector<Element>& map) {
    out.push_back(Morphism::create(g, h, map));
    return true;
  });
  return out;
}

inline std::size_t count_hom(const Hypergroup& g, const Hypergroup& h) {
  std::size_t count = 0;
  detail::for_each_hom(g, h, [&](const std::vector<Element>&) { ++count; return true; });
  return count;
}

}  // namespace hg
