#pragma once

#include <cstddef>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include "hg/core/hypergroup.hpp"
#include "hg/morph/iso.hpp"

namespace hg {

inline constexpr std::size_t enumeration_max_order = 6;

namespace detail {

// One representative inverse map per conjugacy class of involutions on the
// non-identity elements: fixed points first, then adjacent 2-cycles.
inline std::vector<std::vector<Element>> canonical_involutions(std::size_t n) {
  std::vector<std::vector<Element>> out;
  const std::size_t m = n - 1;
  for (std::size_t pairs = 0; 2 * pairs <= m; ++pairs) {
    std::vector<Element> inv(n);
    std::iota(inv.begin(), inv.end(), Element{0});
    for (std::size_t p = 0; p < pairs; ++p) {
      const Element a = m - 2 * pairs + 1 + 2 * p;
      inv[a] = a + 1;
      inv[a + 1] = a;
    }
    out.push_back(std::move(inv));
  }
  return out;
}

// Backtracking over membership of z in x*y for x, y, z != 0. Triples in one
// orbit of (x,y,z) -> (z,r(y),x) and (x,y,z) -> (r(x),z,y) (and (y,x,z)
// when commutative) are decided together, so reversibility holds by
// construction. Each cell keeps a lower bound (decided in) and an upper
// bound (not yet excluded); a branch dies when a cell's upper bound is
// empty or the bounds already separate (x*y)*z from x*(y*z).
class TableSearch {
 public:
  TableSearch(std::vector<Element> inv, bool commutative)
      : n_(inv.size()), m_(n_ - 1), inv_(std::move(inv)), commutative_(commutative) {
    build_orbits();
    lo_.assign(n_ * n_, ElementSet{});
    hi_.assign(n_ * n_, ElementSet{});
    const ElementSet nonzero = ElementSet::prefix(n_) - ElementSet::singleton(0);
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        if (x == 0 || y == 0) {
          lo_[x * n_ + y] = hi_[x * n_ + y] = ElementSet::singleton(x == 0 ? y : x);
          continue;
        }
        const ElementSet base = inv_[x] == y ? ElementSet::singleton(0) : ElementSet{};
        lo_[x * n_ + y] = base;
        hi_[x * n_ + y] = base | nonzero;
      }
  }

  template <class Visit>
  void run(Visit&& visit) {
    rec(0, visit);
  }

 private:
  std::size_t var(Element x, Element y, Element z) const {
    return ((x - 1) * m_ + (y - 1)) * m_ + (z - 1);
  }

  void build_orbits() {
    const std::size_t vars = m_ * m_ * m_;
    std::vector<std::size_t> parent(vars);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (Element x = 1; x < n_; ++x)
      for (Element y = 1; y < n_; ++y)
        for (Element z = 1; z < n_; ++z) {
          const std::size_t v = var(x, y, z);
          unite(v, var(z, inv_[y], x));
          unite(v, var(inv_[x], z, y));
          if (commutative_) unite(v, var(y, x, z));
        }
    // Orbits ordered by their first triple in row-major order.
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t v = 0; v < vars; ++v) {
      const std::size_t root = find(v);
      auto [it, fresh] = slot.emplace(root, orbits_.size());
      if (fresh) orbits_.emplace_back();
      orbits_[it->second].push_back(v);
    }
  }

  void set_in(std::size_t orbit) {
    for (std::size_t v : orbits_[orbit]) lo_[cell_of(v)].insert(z_of(v));
  }
  void set_out(std::size_t orbit) {
    for (std::size_t v : orbits_[orbit]) hi_[cell_of(v)].erase(z_of(v));
  }
  void undo_in(std::size_t orbit) {
    for (std::size_t v : orbits_[orbit]) lo_[cell_of(v)].erase(z_of(v));
  }
  void undo_out(std::size_t orbit) {
    for (std::size_t v : orbits_[orbit]) hi_[cell_of(v)].insert(z_of(v));
  }
  std::size_t cell_of(std::size_t v) const {
    const std::size_t xy = v / m_;
    return (xy / m_ + 1) * n_ + (xy % m_ + 1);
  }
  Element z_of(std::size_t v) const { return v % m_ + 1; }

  ElementSet spread(const std::vector<ElementSet>& cells, ElementSet left, Element c) const {
    ElementSet out;
    for (Element u : left) out |= cells[u * n_ + c];
    return out;
  }
  ElementSet spread_right(const std::vector<ElementSet>& cells, Element a, ElementSet right) const {
    ElementSet out;
    for (Element v : right) out |= cells[a * n_ + v];
    return out;
  }

  bool feasible() const {
    for (Element x = 1; x < n_; ++x)
      for (Element y = 1; y < n_; ++y)
        if (hi_[x * n_ + y].empty()) return false;
    for (Element a = 1; a < n_; ++a)
      for (Element b = 1; b < n_; ++b)
        for (Element c = 1; c < n_; ++c) {
          const ElementSet lo_left = spread(lo_, lo_[a * n_ + b], c);
          const ElementSet hi_right = spread_right(hi_, a, hi_[b * n_ + c]);
          if (!lo_left.subset_of(hi_right)) return false;
          const ElementSet lo_right = spread_right(lo_, a, lo_[b * n_ + c]);
          const ElementSet hi_left = spread(hi_, hi_[a * n_ + b], c);
          if (!lo_right.subset_of(hi_left)) return false;
        }
    return true;
  }

  template <class Visit>
  void rec(std::size_t k, Visit& visit) {
    if (k == orbits_.size()) {
      Table t(n_);
      t.inv = inv_;
      t.cells = lo_;
      t.claims_commutative = commutative_;
      visit(std::move(t));
      return;
    }
    set_in(k);
    if (feasible()) rec(k + 1, visit);
    undo_in(k);
    set_out(k);
    if (feasible()) rec(k + 1, visit);
    undo_out(k);
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<Element> inv_;
  bool commutative_;
  std::vector<std::vector<std::size_t>> orbits_;
  std::vector<ElementSet> lo_;
  std::vector<ElementSet> hi_;
};

inline std::vector<Hypergroup> enumerate_uncached(std::size_t n, bool commutative_only) {
  if (n == 1) return {Hypergroup::trivial()};
  using Found = std::map<CanonicalForm, Table>;
  std::vector<std::future<Found>> branches;
  for (auto& inv : canonical_involutions(n))
    branches.push_back(std::async(std::launch::async, [inv, commutative_only]() {
      Found found;
      TableSearch search(inv, commutative_only);
      search.run([&](Table t) {
        if (!verify_axioms(t, {.stop_at_first = true}).passed()) return;
        Hypergroup g = Hypergroup::from_table(std::move(t));
        found.emplace(canonical_form(g), g.table());
      });
      return found;
    }));
  Found all;
  for (auto& b : branches) all.merge(b.get());
  std::vector<Hypergroup> out;
  for (auto& [form, t] : all) {
    t.claims_commutative = false;
    out.push_back(Hypergroup::from_table(std::move(t)));
  }
  return out;
}

}  // namespace detail

/// All hypergroups of order n up to isomorphism, sorted by canonical form.
/// Throws domain_error unless 1 <= n <= 6. Results are cached per process.
inline std::vector<Hypergroup> enumerate_hypergroups(std::size_t n, bool commutative_only = false) {
  if (n < 1 || n > enumeration_max_order)
    throw domain_error("enumerate_hypergroups: order must be between 1 and 6");
  static std::mutex lock;
  static std::map<std::pair<std::size_t, bool>, std::vector<Hypergroup>> cache;
  {
    std::lock_guard guard(lock);
    if (auto it = cache.find({n, commutative_only}); it != cache.end()) return it->second;
  }
  auto classes = detail::enumerate_uncached(n, commutative_only);
  std::lock_guard guard(lock);
  return cache.emplace(std::pair{n, commutative_only}, std::move(classes)).first->second;
}

/// Concatenation of enumerate_hypergroups(1..max_order).
inline std::vector<Hypergroup> enumerate_up_to(std::size_t max_order, bool commutative_only = false) {
  std::vector<Hypergroup> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto part = enumerate_hypergroups(n, commutative_only);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace hg
