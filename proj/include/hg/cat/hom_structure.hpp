#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hg/morph/hom.hpp"

namespace hg {

/// Hom(G,H) with the pointwise star f*g = {h : h(x) in f(x)*g(x) for all x}.
/// Morphisms are referred to by their index in `elements`.
struct HomStructure {
  Hypergroup dom;
  Hypergroup cod;
  std::vector<Morphism> elements;
  std::vector<ElementSet> star;            // row-major, elements x elements
  std::size_t neutral = 0;                 // the zero morphism
  std::vector<std::optional<std::size_t>> inv;  // r(f), absent when not a morphism
  CheckReport report;                      // tags: inverse, nonempty, i, ii
  bool associative = true;
  std::optional<std::array<std::size_t, 3>> nonassociative;  // first failing (f,g,h)

  std::size_t size() const noexcept { return elements.size(); }
  ElementSet at(std::size_t f, std::size_t g) const { return star[f * size() + g]; }
  std::optional<std::size_t> index_of(const std::vector<Element>& map) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (elements[i].map() == map) return i;
    return std::nullopt;
  }
};

namespace detail {

inline ElementSet hom_product(const HomStructure& s, ElementSet a, ElementSet b) {
  ElementSet out;
  for (std::size_t f : a)
    for (std::size_t g : b) out |= s.at(f, g);
  return out;
}

}  // namespace detail

/// (f*g)*h == f*(g*h) under the set extension.
inline bool hom_associates(const HomStructure& s, std::size_t f, std::size_t g, std::size_t h) {
  const ElementSet sf = ElementSet::singleton(f);
  const ElementSet sh = ElementSet::singleton(h);
  return detail::hom_product(s, s.at(f, g), sh) == detail::hom_product(s, sf, s.at(g, h));
}

/// Builds the Hom structure and records which hypergroup axioms it meets.
/// Throws unsupported_error when Hom(G,H) has more than 64 morphisms.
inline HomStructure hom_structure(const Hypergroup& g, const Hypergroup& h) {
  HomStructure s{g, h, enumerate_hom(g, h), {}, 0, {}, {}, true, std::nullopt};
  const std::size_t k = s.size();
  if (k > ElementSet::max_order)
    throw unsupported_error("hom_structure: Hom set has more than 64 morphisms");
  const std::size_t n = g.order();

  s.star.assign(k * k, ElementSet{});
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      ElementSet cell;
      for (std::size_t c = 0; c < k; ++c) {
        bool in = true;
        for (Element x = 0; x < n && in; ++x)
          in = h.cell(s.elements[a].at(x), s.elements[b].at(x)).contains(s.elements[c].at(x));
        if (in) cell.insert(c);
      }
      s.star[a * k + b] = cell;
      if (cell.empty()) s.report.fail("nonempty", {a, b}, "f*g is empty");
    }

  s.inv.assign(k, std::nullopt);
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Element> map(n);
    for (Element x = 0; x < n; ++x) map[x] = h.r(s.elements[a].at(x));
    s.inv[a] = s.index_of(map);
    if (!s.inv[a]) s.report.fail("inverse", {a}, "r(f) is not a morphism");
  }

  // Axiom i where the inverses exist.
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c : s.at(a, b)) {
        if (s.inv[b] && !s.at(c, *s.inv[b]).contains(a)) s.report.fail("i", {a, b, c});
        if (s.inv[a] && !s.at(*s.inv[a], c).contains(b)) s.report.fail("i", {a, b, c});
      }
  // Axiom ii: g in zero*f iff f = g.
  for (std::size_t f = 0; f < k; ++f)
    if (s.at(s.neutral, f) != ElementSet::singleton(f)) s.report.fail("ii", {f});

  for (std::size_t a = 0; a < k && s.associative; ++a)
    for (std::size_t b = 0; b < k && s.associative; ++b)
      for (std::size_t c = 0; c < k && s.associative; ++c)
        if (!hom_associates(s, a, b, c)) {
          s.associative = false;
          s.nonassociative = std::array<std::size_t, 3>{a, b, c};
        }
  return s;
}

/// The star as a Table on morphism indices, when every inverse exists and
/// every cell is nonempty. The zero morphism is index 0 by construction.
inline std::optional<Table> hom_table(const HomStructure& s) {
  if (s.neutral != 0 || s.size() > ElementSet::max_order) return std::nullopt;
  Table t(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (!s.inv[a]) return std::nullopt;
    t.inv[a] = *s.inv[a];
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (s.at(a, b).empty()) return std::nullopt;
      t.at(a, b) = s.at(a, b);
    }
  }
  return t;
}

/// Composition distributes over the star inclusion-wise: for f, f' in
/// Hom(F,G), g, g' in Hom(G,H), every a in g*g' and b in f*f' has
///   a.b in ((gf * gf') * g'f) * g'f'   (star in Hom(F,H)).
/// Witness (f, f', g, g', a, b) as indices into their Hom sets.
inline CheckReport bilinearity_check(const Hypergroup& f_obj, const Hypergroup& g_obj,
                                     const Hypergroup& h_obj) {
  const HomStructure fg = hom_structure(f_obj, g_obj);
  const HomStructure gh = hom_structure(g_obj, h_obj);
  const HomStructure fh = hom_structure(f_obj, h_obj);
  std::map<std::vector<Element>, std::size_t> fh_index;
  for (std::size_t i = 0; i < fh.size(); ++i) fh_index.emplace(fh.elements[i].map(), i);
  auto comp = [&](std::size_t g, std::size_t f) {
    return fh_index.at(compose(gh.elements[g], fg.elements[f]).map());
  };
  CheckReport report;
  for (std::size_t f = 0; f < fg.size(); ++f)
    for (std::size_t f2 = 0; f2 < fg.size(); ++f2)
      for (std::size_t g = 0; g < gh.size(); ++g)
        for (std::size_t g2 = 0; g2 < gh.size(); ++g2) {
          ElementSet rhs = fh.at(comp(g, f), comp(g, f2));
          rhs = detail::hom_product(fh, rhs, ElementSet::singleton(comp(g2, f)));
          rhs = detail::hom_product(fh, rhs, ElementSet::singleton(comp(g2, f2)));
          for (std::size_t a : gh.at(g, g2))
            for (std::size_t b : fg.at(f, f2))
              if (!rhs.contains(comp(a, b))) report.fail("bilinear", {f, f2, g, g2, a, b});
        }
  return report;
}

}  // namespace hg
