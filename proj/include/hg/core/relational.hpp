#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "hg/core/hypergroup.hpp"

namespace hg {

using Triple = std::array<Element, 3>;

/// A hypergroup presented as a ternary relation: (x, y, z) in pi iff z in x*y.
struct RelationalHypergroup {
  std::size_t order = 0;
  std::vector<Element> inv;
  Element identity = 0;
  std::vector<Triple> pi;  // sorted, no duplicates

  bool contains(const Triple& t) const {
    return std::binary_search(pi.begin(), pi.end(), t);
  }

  friend bool operator==(const RelationalHypergroup&, const RelationalHypergroup&) = default;
};

inline RelationalHypergroup to_relational(const Hypergroup& g) {
  RelationalHypergroup r;
  r.order = g.order();
  r.inv = g.table().inv;
  r.identity = 0;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      for (Element z : g.cell(x, y)) r.pi.push_back({x, y, z});
  return r;  // generated in lexicographic order
}

/// Conditions I-III of the relational presentation, scanned
/// lexicographically. Tags: "I", "II", "III".
inline CheckReport verify_relational(const RelationalHypergroup& rel) {
  const std::size_t n = rel.order;
  if (n == 0 || n > ElementSet::max_order) throw domain_error("relational: bad order");
  if (rel.inv.size() != n) throw domain_error("relational: inverse map has wrong length");
  detail::require_element(n, rel.identity, "relational identity");
  for (Element x : rel.inv) detail::require_element(n, x, "relational inverse");
  for (const Triple& t : rel.pi)
    for (Element e : t) detail::require_element(n, e, "relational triple");

  // Dense membership cube for the quantifier sweeps.
  std::vector<ElementSet> cube(n * n);
  for (const Triple& t : rel.pi) cube[t[0] * n + t[1]].insert(t[2]);
  auto in = [&](Element x, Element y, Element z) { return cube[x * n + y].contains(z); };

  CheckReport report;
  const auto& r = rel.inv;
  for (const Triple& t : rel.pi) {
    const auto [x, y, z] = t;
    if (!in(z, r[y], x) || !in(r[x], z, y)) report.fail("I", {x, y, z});
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (in(x, rel.identity, y) != (x == y)) report.fail("II", {x, y});
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v)
      for (Element w = 0; w < n; ++w)
        for (Element x = 0; x < n; ++x) {
          bool premise = false;
          for (Element p : cube[u * n + v])
            if (in(p, w, x)) { premise = true; break; }
          if (!premise) continue;
          bool conclusion = false;
          for (Element q : cube[v * n + w])
            if (in(u, q, x)) { conclusion = true; break; }
          if (!conclusion) report.fail("III", {u, v, w, x});
        }
  return report;
}

/// Rebuilds the operation table. Conditions I-III are checked first; the
/// resulting table is then run through the operation-form axioms, and a
/// disagreement between the two presentations is reported under the tag
/// "equivalence". A non-zero identity is swapped into slot 0.
inline Hypergroup from_relational(const RelationalHypergroup& rel) {
  CheckReport report = verify_relational(rel);
  if (!report.passed())
    throw validation_error("relational structure invalid: " + report.summary(), report);
  const std::size_t n = rel.order;
  std::vector<Element> swap(n);
  for (Element x = 0; x < n; ++x) swap[x] = x;
  std::swap(swap[0], swap[rel.identity]);

  Table t(n);
  for (Element x = 0; x < n; ++x) t.inv[swap[x]] = swap[rel.inv[x]];
  for (const Triple& tr : rel.pi) t.at(swap[tr[0]], swap[tr[1]]).insert(swap[tr[2]]);

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (t.at(x, y).empty()) report.fail("equivalence", {x, y}, "empty cell");
  if (report.passed()) {
    CheckReport axioms = verify_axioms(t);
    for (auto& v : axioms.violations) {
      v.detail = "relational conditions hold but axiom " + v.tag + " fails";
      v.tag = "equivalence";
    }
    report.merge(axioms);
  }
  if (!report.passed())
    throw validation_error("relational structure is not a hypergroup: " + report.summary(),
                           report);
  return Hypergroup::from_table(std::move(t));
}

}  // namespace hg
