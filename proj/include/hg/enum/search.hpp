#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hg/cat/hom_structure.hpp"
#include "hg/construct/subcarrier.hpp"
#include "hg/enum/enumerate.hpp"

namespace hg {

/// A concrete instance of a probed phenomenon.
///   hom-nonassoc   objects (G,H), morphisms (f,g,h) in Hom(G,H)
///   nonfull-image  objects (G,H), morphisms (f)
///   equalizer-gap  objects (E,G,H), morphisms (f,g : G->H, h : E->G)
struct SearchWitness {
  std::string kind;
  std::vector<Hypergroup> objects;
  std::vector<Morphism> morphisms;
  std::string verdict;
};

struct SearchReport {
  std::optional<SearchWitness> witness;
  std::string space;         // what was scanned, in words
  std::size_t objects = 0;   // object tuples examined
  std::size_t instances = 0; // morphism tuples examined
};

namespace detail {

inline std::string range_text(std::size_t max_order, std::size_t classes) {
  return "hypergroup classes of order <= " + std::to_string(max_order) + " (" +
         std::to_string(classes) + " classes)";
}

// f - g = {e in Hom : e(x) in f(x) * g(x)^-1 for all x}.
inline std::vector<std::size_t> difference_set(const std::vector<Morphism>& hom,
                                               const Morphism& f, const Morphism& g) {
  const Hypergroup& h = f.cod();
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < hom.size(); ++e) {
    bool in = true;
    for (Element x = 0; x < f.dom().order() && in; ++x)
      in = h.cell(f.at(x), h.r(g.at(x))).contains(hom[e].at(x));
    if (in) out.push_back(e);
  }
  return out;
}

inline std::string equalizer_verdict(const std::vector<Morphism>& hom, const Morphism& f,
                                     const Morphism& g, const Morphism& h) {
  const bool equal = compose(f, h) == compose(g, h);
  bool zero = false;
  for (std::size_t e : difference_set(hom, f, g)) zero = zero || compose(hom[e], h).is_zero();
  return std::string("f.h = g.h: ") + (equal ? "true" : "false") +
         ", zero in (f-g).h: " + (zero ? "true" : "false");
}

}  // namespace detail

/// First (f,g,h) with (f*g)*h != f*(g*h) in Hom(G,H) over the given pairs.
inline SearchReport search_hom_nonassociative(
    const std::vector<std::pair<Hypergroup, Hypergroup>>& pairs, std::string space) {
  SearchReport rep;
  rep.space = std::move(space);
  for (const auto& [g, h] : pairs) {
    ++rep.objects;
    const HomStructure s = hom_structure(g, h);
    rep.instances += s.size() * s.size() * s.size();
    if (s.nonassociative) {
      const auto [a, b, c] = *s.nonassociative;
      rep.witness = SearchWitness{"hom-nonassoc", {g, h},
                                  {s.elements[a], s.elements[b], s.elements[c]},
                                  "(f*g)*h != f*(g*h)"};
      return rep;
    }
  }
  return rep;
}

/// Scans every ordered pair of enumerated classes up to max_order (<= 4).
inline SearchReport search_hom_nonassociative(std::size_t max_order) {
  if (max_order < 1 || max_order > 4) throw domain_error("search_hom_nonassociative: max_order must be 1..4");
  const auto classes = enumerate_up_to(max_order);
  std::vector<std::pair<Hypergroup, Hypergroup>> pairs;
  for (const auto& g : classes)
    for (const auto& h : classes) pairs.emplace_back(g, h);
  return search_hom_nonassociative(
      pairs, "ordered pairs (G,H) of " + detail::range_text(max_order, classes.size()) +
                 ", all triples of Hom(G,H)");
}

/// First morphism whose image is not a full subcarrier of its codomain.
inline SearchReport search_nonfull_image(std::size_t max_order) {
  if (max_order < 1 || max_order > 4) throw domain_error("search_nonfull_image: max_order must be 1..4");
  const auto classes = enumerate_up_to(max_order);
  SearchReport rep;
  rep.space = "ordered pairs (G,H) of " + detail::range_text(max_order, classes.size()) +
              ", every f in Hom(G,H)";
  for (const auto& g : classes)
    for (const auto& h : classes) {
      ++rep.objects;
      for (const Morphism& f : enumerate_hom(g, h)) {
        ++rep.instances;
        if (!f.full() && !is_full_subcarrier(h, f.image_set())) {
          rep.witness = SearchWitness{"nonfull-image", {g, h}, {f}, "image is not a full subcarrier"};
          return rep;
        }
      }
    }
  return rep;
}

/// First (f, g, h) where "f.h = g.h" and "zero in (f-g).h" disagree.
inline SearchReport search_equalizer_kernel_gap(std::size_t max_order) {
  if (max_order < 1 || max_order > 3)
    throw domain_error("search_equalizer_kernel_gap: max_order must be 1..3");
  const auto classes = enumerate_up_to(max_order);
  SearchReport rep;
  rep.space = "ordered triples (E,G,H) of " + detail::range_text(max_order, classes.size()) +
              ", every f, g in Hom(G,H) and h in Hom(E,G)";
  for (const auto& g : classes)
    for (const auto& h : classes) {
      const auto hom = enumerate_hom(g, h);
      for (const auto& e : classes) {
        ++rep.objects;
        const auto into = enumerate_hom(e, g);
        for (const Morphism& f1 : hom)
          for (const Morphism& f2 : hom)
            for (const Morphism& t : into) {
              ++rep.instances;
              const std::string v = detail::equalizer_verdict(hom, f1, f2, t);
              const bool equal = compose(f1, t) == compose(f2, t);
              const bool zero = v.ends_with("true");
              if (equal != zero) {
                rep.witness = SearchWitness{"equalizer-gap", {e, g, h}, {f1, f2, t}, v};
                return rep;
              }
            }
      }
    }
  return rep;
}

/// Recomputes the witness's verdict through the public checkers.
inline bool replay(const SearchWitness& w) {
  if (w.kind == "hom-nonassoc") {
    if (w.objects.size() != 2 || w.morphisms.size() != 3) return false;
    const HomStructure s = hom_structure(w.objects[0], w.objects[1]);
    std::optional<std::size_t> idx[3];
    for (int i = 0; i < 3; ++i) idx[i] = s.index_of(w.morphisms[i].map());
    if (!idx[0] || !idx[1] || !idx[2]) return false;
    return !hom_associates(s, *idx[0], *idx[1], *idx[2]);
  }
  if (w.kind == "nonfull-image") {
    if (w.morphisms.size() != 1) return false;
    const Morphism& f = w.morphisms[0];
    return is_morphism(f.dom(), f.cod(), f.map()).passed() &&
           !is_full_subcarrier(f.cod(), f.image_set());
  }
  if (w.kind == "equalizer-gap") {
    if (w.objects.size() != 3 || w.morphisms.size() != 3) return false;
    const auto hom = enumerate_hom(w.objects[1], w.objects[2]);
    return detail::equalizer_verdict(hom, w.morphisms[0], w.morphisms[1], w.morphisms[2]) ==
           w.verdict;
  }
  return false;
}

}  // namespace hg
