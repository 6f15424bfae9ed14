#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hg/core/hypergroup.hpp"
#include "hg/morph/morphism.hpp"

namespace hg {

namespace detail {

// Relabelling-invariant profile of one element.
struct ElementProfile {
  bool self_inverse;
  std::size_t square_size;
  std::vector<std::size_t> row_sizes;
  std::vector<std::size_t> col_sizes;

  auto operator<=>(const ElementProfile&) const = default;
};

inline ElementProfile profile(const Hypergroup& g, Element x) {
  ElementProfile p{g.r(x) == x, g.cell(x, x).size(), {}, {}};
  for (Element y = 0; y < g.order(); ++y) {
    p.row_sizes.push_back(g.cell(x, y).size());
    p.col_sizes.push_back(g.cell(y, x).size());
  }
  std::sort(p.row_sizes.begin(), p.row_sizes.end());
  std::sort(p.col_sizes.begin(), p.col_sizes.end());
  return p;
}

inline bool same_invariants(const Hypergroup& g, const Hypergroup& h) {
  if (g.order() != h.order() || g.commutative() != h.commutative()) return false;
  auto sizes = [](const Hypergroup& x) {
    std::vector<std::size_t> s;
    for (const ElementSet& c : x.table().cells) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sizes(g) != sizes(h)) return false;
  std::vector<ElementProfile> pg, ph;
  for (Element x = 0; x < g.order(); ++x) {
    pg.push_back(profile(g, x));
    ph.push_back(profile(h, x));
  }
  std::sort(pg.begin(), pg.end());
  std::sort(ph.begin(), ph.end());
  return pg == ph;
}

}  // namespace detail

/// An isomorphism g -> h (a bijective morphism whose inverse is also a
/// morphism), or nullopt. Backtracking over identity-fixing bijections with
/// per-element invariants as a prefilter.
inline std::optional<Morphism> are_isomorphic(const Hypergroup& g, const Hypergroup& h) {
  if (!detail::same_invariants(g, h)) return std::nullopt;
  const std::size_t n = g.order();
  std::vector<detail::ElementProfile> pg, ph;
  for (Element x = 0; x < n; ++x) {
    pg.push_back(detail::profile(g, x));
    ph.push_back(detail::profile(h, x));
  }
  std::vector<Element> map(n, 0);
  std::vector<Element> back(n, 0);
  ElementSet used = ElementSet::singleton(0);

  // Cells among assigned elements must correspond exactly.
  auto consistent = [&](Element x) {
    const Element rx = g.r(x);
    if (rx <= x && map[rx] != h.r(map[x])) return false;
    for (Element a = 0; a <= x; ++a)
      for (Element b = 0; b <= x; ++b) {
        if (a != x && b != x) continue;
        const ElementSet gc = g.cell(a, b);
        const ElementSet hc = h.cell(map[a], map[b]);
        if (gc.size() != hc.size()) return false;
        for (Element c : gc)
          if (c <= x && !hc.contains(map[c])) return false;
        for (Element d : hc)
          if (used.contains(d) && !gc.contains(back[d])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, Element x) -> bool {
    if (x == n) return true;
    for (Element v = 1; v < n; ++v) {
      if (used.contains(v) || pg[x] != ph[v]) continue;
      map[x] = v;
      back[v] = x;
      used.insert(v);
      if (consistent(x) && self(self, x + 1)) return true;
      used.erase(v);
    }
    return false;
  };
  if (!rec(rec, 1)) return std::nullopt;
  // Confirm both directions through the public checker.
  if (!is_morphism(h, g, back).passed()) return std::nullopt;
  return Morphism::create(g, h, map);
}

/// Relabelling-minimal serialization of a hypergroup: the order, then the
/// inverse map, then every cell as a little-endian bitmask, minimized
/// lexicographically over all permutations fixing the identity.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (std::uint8_t b : bytes) {
      s += digits[b >> 4];
      s += digits[b & 15];
    }
    return s;
  }
  auto operator<=>(const CanonicalForm&) const = default;
};

namespace detail {

inline std::vector<std::uint8_t> serialize_table(const Table& t) {
  const std::size_t width = (t.order + 7) / 8;
  std::vector<std::uint8_t> out;
  out.reserve(1 + t.order + t.cells.size() * width);
  out.push_back(static_cast<std::uint8_t>(t.order));
  for (Element x : t.inv) out.push_back(static_cast<std::uint8_t>(x));
  for (const ElementSet& c : t.cells)
    for (std::size_t k = 0; k < width; ++k)
      out.push_back(static_cast<std::uint8_t>(c.bits() >> (8 * k)));
  return out;
}

}  // namespace detail

inline constexpr std::size_t canonical_form_max_order = 10;

inline CanonicalForm canonical_form(const Hypergroup& g) {
  const std::size_t n = g.order();
  if (n > canonical_form_max_order)
    throw domain_error("canonical_form: order above " +
                       std::to_string(canonical_form_max_order));
  std::vector<Element> perm(n);
  for (Element x = 0; x < n; ++x) perm[x] = x;
  CanonicalForm best{detail::serialize_table(g.table())};
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    auto bytes = detail::serialize_table(relabel_table(g.table(), perm));
    if (bytes < best.bytes) best.bytes = std::move(bytes);
  }
  return best;
}

}  // namespace hg
