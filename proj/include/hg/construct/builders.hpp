#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hg/construct/subcarrier.hpp"
#include "hg/core/hypergroup.hpp"
#include "hg/morph/morphism.hpp"

namespace hg {

/// Singleton-valued hypergroup of a group given by its Cayley table. The
/// identity must sit at index 0. Failures are reported under the group
/// axiom they break: "closure", "identity", "inverse", "associativity".
inline Hypergroup from_group(const std::vector<std::vector<std::size_t>>& cayley,
                             std::vector<std::string> names = {}) {
  const std::size_t n = cayley.size();
  if (n == 0 || n > ElementSet::max_order) throw domain_error("from_group: bad order");
  CheckReport report;
  for (std::size_t a = 0; a < n; ++a) {
    if (cayley[a].size() != n) throw domain_error("from_group: table is not square");
    for (std::size_t b = 0; b < n; ++b)
      if (cayley[a][b] >= n) report.fail("closure", {a, b});
  }
  if (!report.passed())
    throw validation_error("from_group: " + report.summary(), report);
  for (std::size_t a = 0; a < n; ++a)
    if (cayley[0][a] != a || cayley[a][0] != a) report.fail("identity", {a});
  std::vector<Element> inv(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t found = n;
    for (std::size_t b = 0; b < n && found == n; ++b)
      if (cayley[a][b] == 0 && cayley[b][a] == 0) found = b;
    if (found == n)
      report.fail("inverse", {a});
    else
      inv[a] = found;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          report.fail("associativity", {a, b, c});
  if (!report.passed())
    throw validation_error("from_group: not a group: " + report.summary(), report);
  Table t(n);
  t.inv = std::move(inv);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.at(a, b) = ElementSet::singleton(cayley[a][b]);
  return Hypergroup::from_table(std::move(t), std::move(names));
}

namespace detail {

// Orders blocks by their least member; the block holding 0 comes first.
inline void sort_blocks(std::vector<ElementSet>& blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](ElementSet a, ElementSet b) { return a.min() < b.min(); });
}

// Representative chasing over a partition: [A]*[B] collects the block of
// every d in a'*b' with a' in A, b' in B. The inverse of a block is the
// block of r(a') and must not depend on a'.
inline Table block_table(const Hypergroup& g, const std::vector<ElementSet>& blocks,
                         CheckReport& report) {
  const std::size_t m = blocks.size();
  std::vector<Element> block_of(g.order(), 0);
  for (Element i = 0; i < m; ++i)
    for (Element x : blocks[i]) block_of[x] = i;
  Table t(m);
  for (Element i = 0; i < m; ++i) {
    t.inv[i] = block_of[g.r(blocks[i].min())];
    for (Element x : blocks[i])
      if (block_of[g.r(x)] != t.inv[i]) report.fail("inverse-well-defined", {i, x});
    for (Element j = 0; j < m; ++j) {
      ElementSet c;
      for (Element a : blocks[i])
        for (Element b : blocks[j])
          for (Element d : g.cell(a, b)) c.insert(block_of[d]);
      t.at(i, j) = c;
    }
  }
  return t;
}

inline std::vector<std::string> block_names(const Hypergroup& g,
                                            const std::vector<ElementSet>& blocks) {
  std::vector<std::string> names;
  for (ElementSet b : blocks) names.push_back("[" + g.name(b.min()) + "]");
  return names;
}

}  // namespace detail

/// Raw coset structure of a group modulo a subgroup, before any axiom check.
struct CosetTable {
  Table table;
  std::vector<ElementSet> cosets;  // left cosets aH, ordered by least member
  std::vector<std::string> names;
  CheckReport axioms;  // verify_axioms(table) plus inverse well-definedness
};

/// Left cosets aH with [a]*[b] = {[d] : d' in a'b', [a']=[a], [b']=[b], [d']=[d]}.
/// No hypergroup axiom is assumed of the result; `axioms` records the verdict.
inline CosetTable coset_table(const Hypergroup& g, const SubCarrier& h) {
  if (const SipResult sip = sip_check(g); !sip.is_group) {
    CheckReport rep;
    rep.fail("group", {sip.witness}, "base is not a group");
    throw validation_error("coset_space: base is not a group", rep);
  }
  CheckReport sub;
  for (Element x : h.members())
    for (Element y : h.members())
      if (!g.cell(x, y).subset_of(h.members())) sub.fail("subgroup", {x, y}, "xy not in H");
  if (!sub.passed()) throw validation_error("coset_space: H is not a subgroup", sub);

  std::vector<ElementSet> cosets;
  ElementSet covered;
  for (Element a = 0; a < g.order(); ++a) {
    if (covered.contains(a)) continue;
    ElementSet c = detail::product_of_sets(g.table(), ElementSet::singleton(a), h.members());
    cosets.push_back(c);
    covered |= c;
  }
  detail::sort_blocks(cosets);
  CosetTable out;
  out.table = detail::block_table(g, cosets, out.axioms);
  out.axioms.merge(verify_axioms(out.table));
  out.cosets = std::move(cosets);
  out.names = detail::block_names(g, out.cosets);
  return out;
}

/// The coset hypergroup G/H. Throws validation_error (with the axiom witness)
/// when the coset structure is not a hypergroup, which happens for
/// non-normal H because [1]*[a] then spans the whole double coset HaH.
inline Hypergroup coset_space(const Hypergroup& g, const SubCarrier& h) {
  CosetTable ct = coset_table(g, h);
  if (!ct.axioms.passed())
    throw validation_error("coset_space: coset structure is not a hypergroup: " +
                               ct.axioms.summary(),
                           ct.axioms);
  return Hypergroup::from_table(std::move(ct.table), std::move(ct.names));
}

/// Additive hypergroup of the chain 0 < e1 < ... < ek: x + y = max(x, y) for
/// x != y and x + x = [0, x].
inline Hypergroup chain_hypergroup(std::size_t k) {
  if (k < 1) throw domain_error("chain_hypergroup: k must be at least 1");
  if (k + 1 > ElementSet::max_order) throw domain_error("chain_hypergroup: k too large");
  const std::size_t n = k + 1;
  Table t(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      t.at(x, y) = x == y ? ElementSet::prefix(x + 1) : ElementSet::singleton(std::max(x, y));
  t.set_identity_cells();
  std::vector<std::string> names(n);
  for (Element x = 0; x < n; ++x)
    names[x] = x == 0 ? "0" : k <= 25 ? std::string(1, static_cast<char>('a' + x - 1))
                                      : "e" + std::to_string(x);
  return Hypergroup::from_table(std::move(t), std::move(names));
}

/// Mixed-radix coordinates for a finite cartesian product; the first factor
/// is the most significant digit, so the identity tuple has index 0.
class TupleIndexer {
 public:
  explicit TupleIndexer(std::vector<std::size_t> radices) : radices_(std::move(radices)) {
    size_ = 1;
    for (std::size_t r : radices_) {
      if (r == 0) throw domain_error("empty factor");
      size_ *= r;
      if (size_ > ElementSet::max_order)
        throw domain_error("product carrier exceeds 64 elements");
    }
  }
  std::size_t size() const noexcept { return size_; }
  std::size_t arity() const noexcept { return radices_.size(); }

  std::vector<Element> decode(Element index) const {
    std::vector<Element> digits(radices_.size());
    for (std::size_t i = radices_.size(); i-- > 0;) {
      digits[i] = index % radices_[i];
      index /= radices_[i];
    }
    return digits;
  }
  Element encode(const std::vector<Element>& digits) const {
    Element index = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) index = index * radices_[i] + digits[i];
    return index;
  }

 private:
  std::vector<std::size_t> radices_;
  std::size_t size_ = 1;
};

namespace detail {

inline std::string tuple_name(const std::vector<Hypergroup>& factors,
                              const std::vector<Element>& digits) {
  std::string s;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s += '.';
    s += factors[i].name(digits[i]);
  }
  return s;
}

// Odometer step over the cartesian product of `comps`.
inline bool advance(std::vector<std::size_t>& pos,
                    const std::vector<std::vector<Element>>& comps) {
  for (std::size_t i = pos.size(); i-- > 0;) {
    if (++pos[i] < comps[i].size()) return true;
    pos[i] = 0;
  }
  return false;
}

// Componentwise operation on the tuples listed in `tuples`, intersected
// with that list.
inline Table tuple_table(const std::vector<Hypergroup>& factors,
                         const std::vector<std::vector<Element>>& tuples,
                         const std::vector<std::size_t>& index_of_code,
                         const TupleIndexer& ix) {
  const std::size_t m = tuples.size();
  constexpr std::size_t absent = static_cast<std::size_t>(-1);
  Table t(m);
  for (Element a = 0; a < m; ++a) {
    std::vector<Element> inv(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) inv[i] = factors[i].r(tuples[a][i]);
    t.inv[a] = index_of_code[ix.encode(inv)];
    if (t.inv[a] == absent) throw domain_error("tuple set is not inverse-closed");
    for (Element b = 0; b < m; ++b) {
      // Enumerate the cartesian product of the component cells.
      std::vector<std::vector<Element>> comps(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i)
        comps[i] = factors[i].cell(tuples[a][i], tuples[b][i]).to_vector();
      std::vector<std::size_t> pos(factors.size(), 0);
      ElementSet c;
      do {
        std::vector<Element> d(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) d[i] = comps[i][pos[i]];
        const std::size_t k = index_of_code[ix.encode(d)];
        if (k != absent) c.insert(k);
      } while (advance(pos, comps));
      t.at(a, b) = c;
    }
  }
  return t;
}

}  // namespace detail

/// A product (or finite biproduct) together with its structure maps.
struct ProductResult {
  Hypergroup object;
  std::vector<Morphism> projections;
  std::vector<Morphism> injections;  // filled by direct_sum only
  TupleIndexer indexer{{1}};
};

/// Cartesian product with componentwise cells; projections are full and
/// surjective.
inline ProductResult product(const std::vector<Hypergroup>& factors) {
  if (factors.empty()) throw domain_error("product: empty factor list");
  std::vector<std::size_t> radices;
  for (const auto& f : factors) radices.push_back(f.order());
  TupleIndexer ix(radices);
  std::vector<std::vector<Element>> tuples(ix.size());
  std::vector<std::size_t> index_of_code(ix.size());
  std::vector<std::string> names(ix.size());
  for (Element k = 0; k < ix.size(); ++k) {
    tuples[k] = ix.decode(k);
    index_of_code[k] = k;
    names[k] = factors.size() == 1 ? factors[0].name(k) : detail::tuple_name(factors, tuples[k]);
  }
  Table t = detail::tuple_table(factors, tuples, index_of_code, ix);
  Hypergroup p = Hypergroup::from_table(std::move(t), std::move(names));
  ProductResult out{p, {}, {}, ix};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Element> map(ix.size());
    for (Element k = 0; k < ix.size(); ++k) map[k] = tuples[k][i];
    out.projections.push_back(Morphism::create(p, factors[i], std::move(map)));
  }
  return out;
}

/// Finite direct sum of abelian hypergroups: the product carrier with the
/// injections a -> (1, ..., a, ..., 1).
inline ProductResult direct_sum(const std::vector<Hypergroup>& summands) {
  CheckReport report;
  for (std::size_t i = 0; i < summands.size(); ++i)
    if (!summands[i].commutative()) report.fail("abelian", {i}, "summand is not abelian");
  if (!report.passed()) throw validation_error("direct_sum: " + report.summary(), report);
  ProductResult out = product(summands);
  for (std::size_t j = 0; j < summands.size(); ++j) {
    std::vector<Element> map(summands[j].order());
    for (Element a = 0; a < map.size(); ++a) {
      std::vector<Element> digits(summands.size(), 0);
      digits[j] = a;
      map[a] = out.indexer.encode(digits);
    }
    out.injections.push_back(Morphism::create(summands[j], out.object, std::move(map)));
  }
  return out;
}

}  // namespace hg
