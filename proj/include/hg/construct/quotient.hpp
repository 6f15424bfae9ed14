#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hg/construct/builders.hpp"
#include "hg/construct/subcarrier.hpp"
#include "hg/morph/morphism.hpp"

namespace hg {

/// G/H together with the data it was built from.
struct QuotientPresentation {
  Hypergroup base;
  SubCarrier sub;                  // the full subcarrier actually used
  bool generated_from_nonfull = false;  // sub = <H> because H was not full
  std::vector<ElementSet> cosets;  // a + H, ordered by least member
  Hypergroup quotient;
  Morphism projection;             // a -> [a], surjective
};

/// a + H.
inline ElementSet coset(const Hypergroup& g, Element a, ElementSet h) {
  return detail::product_of_sets(g.table(), ElementSet::singleton(a), h);
}

/// Quotient of an abelian hypergroup by a subcarrier. A non-full H is first
/// replaced by the subhypergroup it generates. Blocks are the cosets a + H;
/// [a] + [b] is evaluated by chasing all representatives.
inline QuotientPresentation quotient(const Hypergroup& g, const SubCarrier& h) {
  if (!g.commutative()) throw unsupported_error("quotient: base hypergroup is not abelian");
  if (!(h.parent() == g)) throw domain_error("quotient: subcarrier belongs to another hypergroup");
  const bool full = is_full_subcarrier(g, h);
  SubCarrier used = full ? h : generated(g, h.members());

  std::vector<ElementSet> cosets;
  for (Element a = 0; a < g.order(); ++a) {
    const ElementSet c = coset(g, a, used.members());
    bool seen = false;
    for (ElementSet existing : cosets) {
      if (existing == c) { seen = true; break; }
      if (existing.intersects(c))
        throw std::logic_error("quotient: cosets of a full subhypergroup overlap");
    }
    if (!seen) cosets.push_back(c);
  }
  detail::sort_blocks(cosets);

  CheckReport report;
  Table t = detail::block_table(g, cosets, report);
  report.merge(verify_axioms(t));
  if (!report.passed())
    throw validation_error("quotient is not a hypergroup: " + report.summary(), report);
  Hypergroup q = Hypergroup::from_table(std::move(t), detail::block_names(g, cosets));

  std::vector<Element> map(g.order());
  for (Element i = 0; i < cosets.size(); ++i)
    for (Element x : cosets[i]) map[x] = i;
  Morphism pi = Morphism::create(g, q, std::move(map));
  return {g, std::move(used), !full, std::move(cosets), std::move(q), std::move(pi)};
}

/// The two coset comparisons for a full H: `equiv` is x - y within H, and
/// `same_coset` is x + H = y + H. equiv implies same_coset, not conversely.
struct CosetRelation {
  bool equiv = false;
  bool same_coset = false;

  friend bool operator==(const CosetRelation&, const CosetRelation&) = default;
};

inline CosetRelation coset_relation(const Hypergroup& g, const SubCarrier& h, Element x,
                                    Element y) {
  detail::require_element(g.order(), x, "coset_relation");
  detail::require_element(g.order(), y, "coset_relation");
  if (!is_full_subcarrier(g, h)) throw unsupported_error("coset_relation: H is not full");
  CosetRelation rel;
  rel.equiv = g.cell(x, g.r(y)).subset_of(h.members());
  rel.same_coset = coset(g, x, h.members()) == coset(g, y, h.members());
  return rel;
}

}  // namespace hg
