#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hg/construct/builders.hpp"
#include "hg/morph/morphism.hpp"

namespace hg {

struct DiagramArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  Morphism map;
};

/// A finite commuting diagram of hypergroups over a poset. Node i precedes
/// node j when some chain of arrows leads from i to j; arrow(i, j) is then
/// the (unique) composite G_i -> G_j, and arrow(i, i) is the identity.
class DirectedDiagram {
 public:
  /// Missing composites are filled in along paths. Throws validation_error
  /// for cycles, mismatched endpoints or non-commuting paths.
  static DirectedDiagram create(std::vector<Hypergroup> objects, std::vector<DiagramArrow> arrows) {
    const std::size_t m = objects.size();
    if (m == 0) throw domain_error("diagram: no nodes");
    DirectedDiagram d;
    d.objects_ = std::move(objects);
    d.arrows_.assign(m * m, std::nullopt);
    CheckReport report;
    for (std::size_t i = 0; i < m; ++i) d.arrows_[i * m + i] = Morphism::identity(d.objects_[i]);
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      const auto& a = arrows[k];
      if (a.from >= m || a.to >= m) throw domain_error("diagram: arrow endpoint out of range");
      if (!(a.map.dom() == d.objects_[a.from]) || !(a.map.cod() == d.objects_[a.to])) {
        report.fail("endpoints", {k}, "arrow does not match its node objects");
        continue;
      }
      if (a.from == a.to) {
        if (!(a.map == *d.arrows_[a.from * m + a.from]))
          report.fail("poset", {k}, "non-identity loop");
        continue;
      }
      auto& slot = d.arrows_[a.from * m + a.to];
      if (slot && !(*slot == a.map)) report.fail("commute", {a.from, a.to}, "parallel arrows differ");
      slot = a.map;
    }
    if (!report.passed()) throw validation_error("diagram: " + report.summary(), report);

    // Transitive closure with composites; a newly reached pair takes the
    // first composite found, every other path is compared afterwards.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t k = 0; k < m; ++k) {
            if (i == j || j == k || !d.arrows_[i * m + j] || !d.arrows_[j * m + k]) continue;
            if (!d.arrows_[i * m + k]) {
              d.arrows_[i * m + k] = compose(*d.arrows_[j * m + k], *d.arrows_[i * m + j]);
              changed = true;
            }
          }
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j && d.arrows_[i * m + j] && d.arrows_[j * m + i])
          report.fail("poset", {i, j}, "cycle between distinct nodes");
    if (!report.passed()) throw validation_error("diagram: " + report.summary(), report);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          if (!d.arrows_[i * m + j] || !d.arrows_[j * m + k]) continue;
          if (!(compose(*d.arrows_[j * m + k], *d.arrows_[i * m + j]) == *d.arrows_[i * m + k]))
            report.fail("commute", {i, j, k}, "phi_jk . phi_ij != phi_ik");
        }
    if (!report.passed()) throw validation_error("diagram: " + report.summary(), report);
    return d;
  }

  std::size_t size() const noexcept { return objects_.size(); }
  const Hypergroup& object(std::size_t i) const { return objects_.at(i); }
  const std::vector<Hypergroup>& objects() const noexcept { return objects_; }
  bool leq(std::size_t i, std::size_t j) const { return arrows_.at(i * size() + j).has_value(); }
  const Morphism& arrow(std::size_t i, std::size_t j) const {
    const auto& a = arrows_.at(i * size() + j);
    if (!a) throw domain_error("diagram: nodes are not comparable");
    return *a;
  }

  /// Every two nodes have a common upper bound (a node both reach).
  bool has_common_targets() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (!common_target(i, j)) return false;
    return true;
  }
  /// Every two nodes have a common lower bound (a node reaching both).
  bool has_common_sources() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j) {
        bool found = false;
        for (std::size_t k = 0; k < size() && !found; ++k) found = leq(k, i) && leq(k, j);
        if (!found) return false;
      }
    return true;
  }
  std::optional<std::size_t> common_target(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < size(); ++k)
      if (leq(i, k) && leq(j, k)) return k;
    return std::nullopt;
  }

 private:
  DirectedDiagram() = default;
  std::vector<Hypergroup> objects_;
  std::vector<std::optional<Morphism>> arrows_;  // size x size
};

struct LimitResult {
  Hypergroup object;
  std::vector<Morphism> projections;        // psi_i, one per node
  std::vector<std::vector<Element>> tuples;  // compatible tuple of each element
};

/// Compatible tuples {(g_i) : phi_ij(g_i) = g_j} with the product operation
/// intersected with that set. Accepts diagrams in which every two nodes have
/// a common upper bound or every two have a common lower bound. Throws
/// validation_error if the resulting structure fails an axiom.
inline LimitResult filtered_limit(const DirectedDiagram& d) {
  if (!d.has_common_targets() && !d.has_common_sources()) {
    CheckReport rep;
    rep.fail("filtered", {}, "some pair of nodes has neither a common upper nor lower bound");
    throw validation_error("filtered_limit: diagram is not filtered", rep);
  }
  const std::size_t m = d.size();
  std::vector<std::size_t> radices;
  for (const auto& g : d.objects()) radices.push_back(g.order());
  TupleIndexer ix(radices);
  constexpr std::size_t absent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index_of_code(ix.size(), absent);
  std::vector<std::vector<Element>> tuples;
  for (Element code = 0; code < ix.size(); ++code) {
    auto t = ix.decode(code);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      for (std::size_t j = 0; j < m && ok; ++j)
        if (i != j && d.leq(i, j) && d.arrow(i, j).at(t[i]) != t[j]) ok = false;
    if (!ok) continue;
    index_of_code[code] = tuples.size();
    tuples.push_back(std::move(t));
  }
  Table t;
  try {
    t = detail::tuple_table(d.objects(), tuples, index_of_code, ix);
    check_structure(t);
  } catch (const domain_error& e) {
    CheckReport rep;
    rep.fail("nonempty", {}, e.what());
    throw validation_error("filtered_limit: " + std::string(e.what()), rep);
  }
  std::vector<std::string> names;
  for (const auto& tu : tuples) names.push_back(detail::tuple_name(d.objects(), tu));
  Hypergroup lim = Hypergroup::from_table(std::move(t), std::move(names));
  LimitResult out{lim, {}, tuples};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Element> map;
    for (const auto& tu : tuples) map.push_back(tu[i]);
    out.projections.push_back(Morphism::create(lim, d.object(i), std::move(map)));
  }
  return out;
}

/// The map x -> (rho_i(x)) into the limit for a compatible cone rho_i : E -> G_i.
/// Throws domain_error if the cone is not compatible.
inline Morphism limit_mediator(const LimitResult& lim, const std::vector<Morphism>& cone) {
  if (cone.size() != lim.projections.size()) throw domain_error("cone has wrong arity");
  const Hypergroup& e = cone.front().dom();
  std::vector<Element> map(e.order());
  for (Element x = 0; x < e.order(); ++x) {
    std::vector<Element> tu;
    for (const auto& rho : cone) tu.push_back(rho.at(x));
    std::size_t k = 0;
    while (k < lim.tuples.size() && lim.tuples[k] != tu) ++k;
    if (k == lim.tuples.size()) throw domain_error("cone is not compatible with the diagram");
    map[x] = k;
  }
  return Morphism::create(e, lim.object, std::move(map));
}

struct ColimitResult {
  Hypergroup object;
  std::vector<Morphism> injections;  // psi_i, one per node
  // class_of[i][x] = class of element x of node i.
  std::vector<std::vector<Element>> class_of;
};

/// Disjoint union modulo x_i ~ x_j iff phi_ik(x_i) = phi_jk(x_j) for some
/// common upper bound k, with
///   [x] + [y] = {[z] : z' in phi_ik(x') + phi_jk(y'), x' ~ x, y' ~ y, z' ~ z}.
/// Requires abelian objects and common upper bounds for all pairs. The
/// relation is checked to be an equivalence and the result to be a
/// hypergroup; failures throw validation_error.
inline ColimitResult directed_colimit(const DirectedDiagram& d) {
  CheckReport report;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d.object(i).commutative()) report.fail("abelian", {i});
  if (!d.has_common_targets()) report.fail("directed", {}, "a pair of nodes has no upper bound");
  if (!report.passed()) throw validation_error("directed_colimit: " + report.summary(), report);

  struct Item { std::size_t node; Element x; };
  std::vector<Item> items;
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < d.size(); ++i) {
    offset.push_back(items.size());
    for (Element x = 0; x < d.object(i).order(); ++x) items.push_back({i, x});
  }
  const std::size_t u = items.size();
  auto related = [&](const Item& a, const Item& b) {
    for (std::size_t k = 0; k < d.size(); ++k)
      if (d.leq(a.node, k) && d.leq(b.node, k) &&
          d.arrow(a.node, k).at(a.x) == d.arrow(b.node, k).at(b.x))
        return true;
    return false;
  };
  std::vector<std::vector<bool>> rel(u, std::vector<bool>(u));
  for (std::size_t a = 0; a < u; ++a)
    for (std::size_t b = 0; b < u; ++b) rel[a][b] = related(items[a], items[b]);
  for (std::size_t a = 0; a < u; ++a) {
    if (!rel[a][a]) report.fail("reflexive", {a});
    for (std::size_t b = 0; b < u; ++b) {
      if (rel[a][b] != rel[b][a]) report.fail("symmetric", {a, b});
      for (std::size_t c = 0; c < u; ++c)
        if (rel[a][b] && rel[b][c] && !rel[a][c]) report.fail("transitive", {a, b, c});
    }
  }
  if (!report.passed())
    throw validation_error("directed_colimit: ~ is not an equivalence: " + report.summary(), report);

  std::vector<std::size_t> cls(u, static_cast<std::size_t>(-1));
  std::size_t classes = 0;
  for (std::size_t a = 0; a < u; ++a) {
    if (cls[a] != static_cast<std::size_t>(-1)) continue;
    for (std::size_t b = a; b < u; ++b)
      if (rel[a][b]) cls[b] = classes;
    ++classes;
  }
  if (classes > ElementSet::max_order) throw domain_error("colimit carrier exceeds 64 elements");

  Table t(classes);
  std::vector<bool> inv_set(classes, false);
  for (std::size_t a = 0; a < u; ++a) {
    const auto& it = items[a];
    const Element ia = offset[it.node] + d.object(it.node).r(it.x);
    if (!inv_set[cls[a]]) {
      t.inv[cls[a]] = cls[ia];
      inv_set[cls[a]] = true;
    } else if (t.inv[cls[a]] != cls[ia]) {
      report.fail("inverse-well-defined", {a});
    }
  }
  for (std::size_t a = 0; a < u; ++a)
    for (std::size_t b = 0; b < u; ++b)
      for (std::size_t k = 0; k < d.size(); ++k) {
        const auto& x = items[a];
        const auto& y = items[b];
        if (!d.leq(x.node, k) || !d.leq(y.node, k)) continue;
        const ElementSet prod =
            d.object(k).cell(d.arrow(x.node, k).at(x.x), d.arrow(y.node, k).at(y.x));
        for (Element z : prod) t.at(cls[a], cls[b]).insert(cls[offset[k] + z]);
      }
  if (!report.passed()) throw validation_error("directed_colimit: " + report.summary(), report);
  report.merge(verify_axioms(t));
  if (!report.passed())
    throw validation_error("directed_colimit: result is not a hypergroup: " + report.summary(), report);

  std::vector<std::string> names(classes);
  std::vector<bool> named(classes, false);
  for (std::size_t a = 0; a < u; ++a)
    if (!named[cls[a]]) {
      names[cls[a]] = "[" + d.object(items[a].node).name(items[a].x) + "@" +
                      std::to_string(items[a].node) + "]";
      named[cls[a]] = true;
    }
  Hypergroup col = Hypergroup::from_table(std::move(t), std::move(names));
  ColimitResult out{col, {}, {}};
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<Element> map;
    for (Element x = 0; x < d.object(i).order(); ++x) map.push_back(cls[offset[i] + x]);
    out.class_of.push_back(map);
    out.injections.push_back(Morphism::create(d.object(i), col, std::move(map)));
  }
  return out;
}

/// The map [x_i] -> rho_i(x_i) out of the colimit for a compatible cocone.
/// Throws domain_error when the cocone disagrees on some class.
inline Morphism colimit_mediator(const ColimitResult& col, const std::vector<Morphism>& cocone) {
  if (cocone.size() != col.injections.size()) throw domain_error("cocone has wrong arity");
  const Hypergroup& e = cocone.front().cod();
  std::vector<std::optional<Element>> map(col.object.order());
  for (std::size_t i = 0; i < cocone.size(); ++i)
    for (Element x = 0; x < cocone[i].dom().order(); ++x) {
      auto& slot = map[col.class_of[i][x]];
      if (slot && *slot != cocone[i].at(x)) throw domain_error("cocone is not compatible");
      slot = cocone[i].at(x);
    }
  std::vector<Element> out;
  for (const auto& v : map) out.push_back(v.value());
  return Morphism::create(col.object, e, std::move(out));
}

}  // namespace hg
