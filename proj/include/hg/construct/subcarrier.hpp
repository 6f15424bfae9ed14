#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hg/core/hypergroup.hpp"
#include "hg/morph/morphism.hpp"

namespace hg {

/// A subset of a hypergroup's carrier that contains the identity and is
/// closed under inverses.
class SubCarrier {
 public:
  static SubCarrier create(Hypergroup parent, ElementSet members) {
    if (!members.subset_of(parent.carrier()))
      throw domain_error("subcarrier leaves the parent carrier");
    CheckReport report;
    if (!members.contains(0)) report.fail("identity", {0}, "identity missing");
    for (Element x : members)
      if (!members.contains(parent.r(x))) report.fail("inverse", {x}, "r(x) missing");
    if (!report.passed())
      throw validation_error("not a subcarrier: " + report.summary(), report);
    return SubCarrier(std::move(parent), members);
  }

  const Hypergroup& parent() const noexcept { return parent_; }
  ElementSet members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element e) const noexcept { return members_.contains(e); }

  friend bool operator==(const SubCarrier& a, const SubCarrier& b) {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

 private:
  SubCarrier(Hypergroup p, ElementSet m) : parent_(std::move(p)), members_(m) {}
  Hypergroup parent_;
  ElementSet members_;
};

/// True iff ambient products of members stay inside, i.e. the inclusion
/// with the restricted table is a full morphism.
inline bool is_full_subcarrier(const Hypergroup& g, ElementSet s) {
  for (Element x : s)
    for (Element y : s)
      if (!g.cell(x, y).subset_of(s)) return false;
  return true;
}

inline bool is_full_subcarrier(const Hypergroup& g, const SubCarrier& s) {
  return is_full_subcarrier(g, s.members());
}

namespace detail {

// a^0 = {1}, a^(k+1) = a^k * a; returns the distinct sets in order until the
// sequence revisits one (after which it is periodic).
inline std::vector<ElementSet> power_sets(const Hypergroup& g, Element a) {
  std::vector<ElementSet> powers{ElementSet::singleton(0)};
  while (true) {
    ElementSet next = detail::product_of_sets(g.table(), powers.back(), ElementSet::singleton(a));
    for (const ElementSet& p : powers)
      if (p == next) return powers;
    powers.push_back(next);
  }
}

}  // namespace detail

/// a^i for i >= 0 (a^0 = {1}).
inline ElementSet power(const Hypergroup& g, Element a, std::size_t i) {
  ElementSet p = ElementSet::singleton(0);
  for (std::size_t k = 0; k < i; ++k)
    p = detail::product_of_sets(g.table(), p, ElementSet::singleton(a));
  return p;
}

/// Union over i, j >= 0 of a^i * a^(-j). For abelian g this is the
/// subhypergroup generated by a.
inline ElementSet power_span(const Hypergroup& g, Element a) {
  detail::require_element(g.order(), a, "power_span");
  const auto pos = detail::power_sets(g, a);
  const auto neg = detail::power_sets(g, g.r(a));
  ElementSet out;
  for (const ElementSet& p : pos)
    for (const ElementSet& q : neg) out |= detail::product_of_sets(g.table(), p, q);
  return out;
}

/// Least subset containing A and the identity that is closed under inverses
/// and products. For abelian g and a single generator the fixpoint is
/// cross-checked against power_span.
inline SubCarrier generated(const Hypergroup& g, ElementSet a) {
  if (a.empty()) throw domain_error("generated: empty generating set");
  if (!a.subset_of(g.carrier())) throw domain_error("generated: set leaves the carrier");
  ElementSet s = a | ElementSet::singleton(0);
  while (true) {
    ElementSet next = s | g.inv_set(s) | detail::product_of_sets(g.table(), s, s);
    if (next == s) break;
    s = next;
  }
  const ElementSet gens = a - ElementSet::singleton(0);
  if (g.commutative() && gens.size() == 1 && power_span(g, gens.min()) != s)
    throw std::logic_error("generated: closure disagrees with the power formula");
  return SubCarrier::create(g, s);
}

/// Table of g restricted to `s` with cells intersected with `s`, relabelled
/// to 0..|s|-1 in increasing order. Throws domain_error if a cell becomes empty.
inline Table restricted_table(const Hypergroup& g, ElementSet s) {
  if (!s.contains(0)) throw domain_error("restriction must contain the identity");
  const std::vector<Element> members = s.to_vector();
  std::vector<Element> local(g.order(), 0);
  for (Element i = 0; i < members.size(); ++i) local[members[i]] = i;
  Table t(members.size());
  for (Element i = 0; i < members.size(); ++i) {
    if (!s.contains(g.r(members[i]))) throw domain_error("restriction is not inverse-closed");
    t.inv[i] = local[g.r(members[i])];
    for (Element j = 0; j < members.size(); ++j) {
      ElementSet c;
      for (Element z : g.cell(members[i], members[j]) & s) c.insert(local[z]);
      if (c.empty()) throw domain_error("restriction produces an empty cell");
      t.at(i, j) = c;
    }
  }
  return t;
}

/// Result of realizing a subcarrier as a hypergroup in its own right.
struct Subhypergroup {
  Hypergroup object;
  Morphism inclusion;
};

/// The intersected restriction of g to `s` with its inclusion. Returns
/// nullopt when that restriction is not a hypergroup.
inline std::optional<Subhypergroup> try_subhypergroup(const Hypergroup& g, ElementSet s) {
  Table t;
  try {
    t = restricted_table(g, s);
  } catch (const domain_error&) {
    return std::nullopt;
  }
  if (!verify_axioms(t, {.stop_at_first = true}).passed()) return std::nullopt;
  std::vector<std::string> names;
  std::vector<Element> map;
  for (Element x : s) {
    names.push_back(g.name(x));
    map.push_back(x);
  }
  try {
    Hypergroup h = Hypergroup::from_table(std::move(t), std::move(names));
    Morphism inc = Morphism::create(h, g, std::move(map));
    return Subhypergroup{std::move(h), std::move(inc)};
  } catch (const validation_error&) {
    return std::nullopt;
  }
}

/// The full subhypergroup on `s` with its (full) inclusion.
inline Subhypergroup subhypergroup(const SubCarrier& s) {
  if (!is_full_subcarrier(s.parent(), s))
    throw unsupported_error("subhypergroup: subcarrier is not full");
  auto sub = try_subhypergroup(s.parent(), s.members());
  if (!sub) throw std::logic_error("full subcarrier failed to restrict to a hypergroup");
  return std::move(*sub);
}

}  // namespace hg
