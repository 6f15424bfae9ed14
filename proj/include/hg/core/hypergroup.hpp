#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hg/core/check_report.hpp"
#include "hg/core/element_set.hpp"
#include "hg/core/errors.hpp"

namespace hg {

/// Unvalidated multivalued operation on {0, ..., order-1}: an inverse map
/// and an order x order array of cells. This is what verifiers inspect;
/// a `Hypergroup` is a Table that passed them.
struct Table {
  std::size_t order = 0;
  std::vector<Element> inv;
  std::vector<ElementSet> cells;  // row-major, cells[x * order + y] = x * y
  bool claims_commutative = false;  // ask verify_axioms to check axiom iv too

  Table() = default;
  explicit Table(std::size_t n)
      : order(n), inv(n), cells(n * n) {
    for (Element x = 0; x < n; ++x) inv[x] = x;
  }

  ElementSet& at(Element x, Element y) { return cells[x * order + y]; }
  ElementSet at(Element x, Element y) const { return cells[x * order + y]; }

  // Forced cells 0*x = x*0 = {x}.
  void set_identity_cells() {
    for (Element x = 0; x < order; ++x) {
      at(0, x) = ElementSet::singleton(x);
      at(x, 0) = ElementSet::singleton(x);
    }
  }

  friend bool operator==(const Table& a, const Table& b) {
    return a.order == b.order && a.inv == b.inv && a.cells == b.cells;
  }
};

namespace detail {

inline void require_element(std::size_t order, Element e, const char* what) {
  if (e >= order)
    throw domain_error(std::string(what) + ": element " + std::to_string(e) +
                       " out of range for order " + std::to_string(order));
}

inline ElementSet product_of_sets(const Table& t, ElementSet a, ElementSet b) {
  ElementSet out;
  for (Element x : a)
    for (Element y : b) out |= t.at(x, y);
  return out;
}

}  // namespace detail

/// Throws domain_error unless `t` has the right dimensions, a total inverse
/// map into the carrier and nonempty in-range cells.
inline void check_structure(const Table& t) {
  if (t.order == 0 || t.order > ElementSet::max_order)
    throw domain_error("carrier order must lie in [1, 64], got " +
                       std::to_string(t.order));
  if (t.inv.size() != t.order)
    throw domain_error("inverse map has wrong length");
  if (t.cells.size() != t.order * t.order)
    throw domain_error("operation table has wrong dimensions");
  for (Element x = 0; x < t.order; ++x) detail::require_element(t.order, t.inv[x], "inverse");
  const ElementSet carrier = ElementSet::prefix(t.order);
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    if (t.cells[i].empty())
      throw domain_error("cell (" + std::to_string(i / t.order) + "," +
                         std::to_string(i % t.order) + ") is empty");
    if (!t.cells[i].subset_of(carrier))
      throw domain_error("cell (" + std::to_string(i / t.order) + "," +
                         std::to_string(i % t.order) + ") leaves the carrier");
  }
}

struct VerifyOptions {
  bool stop_at_first = false;
};

/// Checks axioms i (reversibility), ii (identity), iii (set-extended
/// associativity) and, when `t.claims_commutative`, iv. Witnesses are
/// scanned lexicographically per axiom: i -> (x,y,z) with z in x*y,
/// ii -> (x,y), iii -> (x,y,z), iv -> (x,y).
inline CheckReport verify_axioms(const Table& t, VerifyOptions opt = {}) {
  check_structure(t);
  CheckReport report;
  const std::size_t n = t.order;
  auto done = [&] { return opt.stop_at_first && !report.passed(); };

  for (Element x = 0; x < n && !done(); ++x)
    for (Element y = 0; y < n && !done(); ++y)
      for (Element z : t.at(x, y)) {
        if (!t.at(z, t.inv[y]).contains(x))
          report.fail("i", {x, y, z}, "x not in z*r(y)");
        else if (!t.at(t.inv[x], z).contains(y))
          report.fail("i", {x, y, z}, "y not in r(x)*z");
        if (done()) break;
      }

  for (Element x = 0; x < n && !done(); ++x)
    for (Element y = 0; y < n && !done(); ++y)
      if (t.at(0, x).contains(y) != (x == y))
        report.fail("ii", {x, y}, x == y ? "x not in 1*x" : "y in 1*x with y != x");

  for (Element x = 0; x < n && !done(); ++x)
    for (Element y = 0; y < n && !done(); ++y)
      for (Element z = 0; z < n && !done(); ++z) {
        const ElementSet left =
            detail::product_of_sets(t, t.at(x, y), ElementSet::singleton(z));
        const ElementSet right =
            detail::product_of_sets(t, ElementSet::singleton(x), t.at(y, z));
        if (left != right) report.fail("iii", {x, y, z}, "(x*y)*z != x*(y*z)");
      }

  if (t.claims_commutative)
    for (Element x = 0; x < n && !done(); ++x)
      for (Element y = x + 1; y < n && !done(); ++y)
        if (t.at(x, y) != t.at(y, x)) report.fail("iv", {x, y}, "x*y != y*x");

  return report;
}

/// Re-evaluates one axiom instance named by a verify_axioms violation.
/// Returns true when that instance fails on `t`. Throws domain_error for
/// unknown tags, wrong witness arity or out-of-range indices.
inline bool violation_holds(const Table& t, const Violation& v) {
  check_structure(t);
  const auto& w = v.witness;
  std::size_t arity = 0;
  if (v.tag == "i" || v.tag == "iii") arity = 3;
  if (v.tag == "ii" || v.tag == "iv") arity = 2;
  if (arity == 0) throw domain_error("cannot replay tag '" + v.tag + "'");
  if (w.size() != arity)
    throw domain_error("witness for '" + v.tag + "' needs " + std::to_string(arity) + " indices");
  for (Element e : w) detail::require_element(t.order, e, "witness");
  if (v.tag == "i") {
    const auto [x, y, z] = std::array{w[0], w[1], w[2]};
    return t.at(x, y).contains(z) &&
           (!t.at(z, t.inv[y]).contains(x) || !t.at(t.inv[x], z).contains(y));
  }
  if (v.tag == "ii") return t.at(0, w[0]).contains(w[1]) != (w[0] == w[1]);
  if (v.tag == "iii")
    return detail::product_of_sets(t, t.at(w[0], w[1]), ElementSet::singleton(w[2])) !=
           detail::product_of_sets(t, ElementSet::singleton(w[0]), t.at(w[1], w[2]));
  return t.at(w[0], w[1]) != t.at(w[1], w[0]);
}

/// Element labels "e", "a", "b", ... used when a construction has no better names.
inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0)
      names[i] = "e";
    else if (i <= 26)
      names[i] = std::string(1, static_cast<char>('a' + i - 1));
    else
      names[i] = "x" + std::to_string(i);
  }
  return names;
}

/// A finite hypergroup with identity 0. Immutable; copies share storage.
class Hypergroup {
 public:
  /// Validates structure, axioms i-iii, the stored inverse and the unit
  /// row/column; throws validation_error carrying the failing report.
  static Hypergroup from_table(Table t, std::vector<std::string> names = {}) {
    check_structure(t);
    if (!names.empty() && names.size() != t.order)
      throw domain_error("name list has wrong length");
    CheckReport report = verify_axioms(t);
    if (report.passed()) report = cross_check(t);
    if (!report.passed())
      throw validation_error("not a hypergroup: " + report.summary(), report);
    auto d = std::make_shared<Data>();
    d->table = std::move(t);
    d->table.claims_commutative = false;
    d->commutative = compute_commutative(d->table);
    d->names = names.empty() ? default_names(d->table.order) : std::move(names);
    return Hypergroup(std::move(d));
  }

  /// The one-element hypergroup.
  static Hypergroup trivial(std::string name = "e") {
    Table t(1);
    t.set_identity_cells();
    return from_table(std::move(t), {std::move(name)});
  }

  std::size_t order() const noexcept { return d_->table.order; }
  ElementSet carrier() const noexcept { return ElementSet::prefix(order()); }
  const Table& table() const noexcept { return d_->table; }
  bool commutative() const noexcept { return d_->commutative; }

  Element inv(Element a) const {
    detail::require_element(order(), a, "inv");
    return d_->table.inv[a];
  }
  ElementSet mul(Element a, Element b) const {
    detail::require_element(order(), a, "mul");
    detail::require_element(order(), b, "mul");
    return d_->table.at(a, b);
  }
  // Unchecked access for inner loops.
  ElementSet cell(Element a, Element b) const noexcept { return d_->table.at(a, b); }
  Element r(Element a) const noexcept { return d_->table.inv[a]; }

  ElementSet inv_set(ElementSet a) const noexcept {
    ElementSet out;
    for (Element x : a) out.insert(r(x));
    return out;
  }

  const std::vector<std::string>& names() const noexcept { return d_->names; }
  const std::string& name(Element a) const { return d_->names.at(a); }
  std::optional<Element> find(std::string_view label) const {
    auto it = std::find(d_->names.begin(), d_->names.end(), label);
    if (it == d_->names.end()) return std::nullopt;
    return static_cast<Element>(it - d_->names.begin());
  }

  Hypergroup with_names(std::vector<std::string> names) const {
    if (names.size() != order()) throw domain_error("name list has wrong length");
    auto d = std::make_shared<Data>(*d_);
    d->names = std::move(names);
    return Hypergroup(std::move(d));
  }

  bool is_trivial() const noexcept { return order() == 1; }

  // Structural equality of the operation; labels are ignored.
  friend bool operator==(const Hypergroup& a, const Hypergroup& b) {
    return a.d_ == b.d_ || a.d_->table == b.d_->table;
  }

 private:
  struct Data {
    Table table;
    bool commutative = false;
    std::vector<std::string> names;
  };

  explicit Hypergroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  static bool compute_commutative(const Table& t) {
    for (Element x = 0; x < t.order; ++x)
      for (Element y = x + 1; y < t.order; ++y)
        if (t.at(x, y) != t.at(y, x)) return false;
    return true;
  }

  // The inverse stored in the table must be the unique b with 0 in a*b, and
  // the unit row/column must be the forced singletons.
  static CheckReport cross_check(const Table& t) {
    CheckReport report;
    for (Element a = 0; a < t.order; ++a) {
      for (Element b = 0; b < t.order; ++b)
        if (t.at(a, b).contains(0) != (b == t.inv[a]))
          report.fail("r", {a, b}, "stored inverse disagrees with the table");
      if (t.at(a, 0) != ElementSet::singleton(a) || t.at(0, a) != ElementSet::singleton(a))
        report.fail("unit", {a}, "identity row/column is not {x}");
    }
    return report;
  }

  std::shared_ptr<const Data> d_;
};

inline ElementSet mul(const Hypergroup& g, Element a, Element b) { return g.mul(a, b); }

/// Union of a*b over a in A, b in B.
inline ElementSet mul_sets(const Hypergroup& g, ElementSet a, ElementSet b) {
  if (a.empty() || b.empty()) throw domain_error("mul_sets: empty operand");
  if (!a.subset_of(g.carrier()) || !b.subset_of(g.carrier()))
    throw domain_error("mul_sets: operand leaves the carrier");
  return detail::product_of_sets(g.table(), a, b);
}

inline CheckReport verify_axioms(const Hypergroup& g) { return verify_axioms(g.table()); }

inline bool is_commutative(const Hypergroup& g) noexcept { return g.commutative(); }

/// Basic identities that hold in every hypergroup:
///   identity-inverse    r(1) = 1
///   involution          r(r(a)) = a
///   reverse-membership  c in a*b  iff  r(c) in r(b)*r(a)
///   reverse-product     r(a*b) = r(b)*r(a) as sets
inline CheckReport check_basic_identities(const Hypergroup& g) {
  CheckReport report;
  const std::size_t n = g.order();
  if (g.r(0) != 0) report.fail("identity-inverse", {0});
  for (Element a = 0; a < n; ++a)
    if (g.r(g.r(a)) != a) report.fail("involution", {a});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (g.cell(a, b).contains(c) != g.cell(g.r(b), g.r(a)).contains(g.r(c)))
          report.fail("reverse-membership", {a, b, c});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (g.inv_set(g.cell(a, b)) != g.cell(g.r(b), g.r(a)))
        report.fail("reverse-product", {a, b});
  return report;
}

/// Outcome of the strong-inversion-property test.
struct SipResult {
  bool is_group = false;
  Element witness = 0;  // when !is_group: an a with no unique b such that a*b = {1}

  friend bool operator==(const SipResult&, const SipResult&) = default;
};

/// IsGroup iff every non-identity a has exactly one b with a*b = {1}. When
/// that holds every cell must be a singleton; a violation throws logic_error.
inline SipResult sip_check(const Hypergroup& g) {
  const std::size_t n = g.order();
  const ElementSet unit = ElementSet::singleton(0);
  for (Element a = 1; a < n; ++a) {
    std::size_t count = 0;
    for (Element b = 1; b < n; ++b)
      if (g.cell(a, b) == unit) ++count;
    if (count != 1) return {false, a};
  }
  for (const ElementSet& c : g.table().cells)
    if (!c.is_singleton())
      throw std::logic_error("SIP holds but a cell is not a singleton");
  return {true, 0};
}

/// Table of y*x, i.e. the opposite hypergroup.
inline Table opposite_table(const Hypergroup& g) {
  Table t = g.table();
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) t.at(x, y) = g.cell(y, x);
  return t;
}

/// Relabels along `perm` (old index -> new index); perm must fix 0.
inline Table relabel_table(const Table& t, std::span<const Element> perm) {
  if (perm.size() != t.order) throw domain_error("relabel: permutation length");
  if (perm[0] != 0) throw domain_error("relabel: permutation must fix the identity");
  std::vector<bool> seen(t.order, false);
  for (Element p : perm) {
    detail::require_element(t.order, p, "relabel");
    if (seen[p]) throw domain_error("relabel: not a permutation");
    seen[p] = true;
  }
  Table out(t.order);
  for (Element x = 0; x < t.order; ++x) {
    out.inv[perm[x]] = perm[t.inv[x]];
    for (Element y = 0; y < t.order; ++y) {
      ElementSet c;
      for (Element z : t.at(x, y)) c.insert(perm[z]);
      out.at(perm[x], perm[y]) = c;
    }
  }
  return out;
}

inline Hypergroup relabel(const Hypergroup& g, std::span<const Element> perm) {
  std::vector<std::string> names(g.order());
  for (Element x = 0; x < g.order(); ++x) names[perm[x]] = g.name(x);
  return Hypergroup::from_table(relabel_table(g.table(), perm), std::move(names));
}

}  // namespace hg
