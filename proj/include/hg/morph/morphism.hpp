#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hg/core/hypergroup.hpp"

namespace hg {

/// Checks the three morphism conditions for a total map dom -> cod:
///   i    c in a*b  =>  f(c) in f(a)*f(b)       witness (a,b,c)
///   ii   f(r(a)) = r(f(a))                      witness (a)
///   iii  f(1) = 1                               witness ()
inline CheckReport is_morphism(const Hypergroup& dom, const Hypergroup& cod,
                               std::span<const Element> map) {
  if (map.size() != dom.order())
    throw domain_error("morphism map must be total on the domain carrier");
  for (Element v : map) detail::require_element(cod.order(), v, "morphism value");
  CheckReport report;
  for (Element a = 0; a < dom.order(); ++a)
    for (Element b = 0; b < dom.order(); ++b) {
      const ElementSet target = cod.cell(map[a], map[b]);
      for (Element c : dom.cell(a, b))
        if (!target.contains(map[c])) report.fail("i", {a, b, c}, "f(c) not in f(a)*f(b)");
    }
  for (Element a = 0; a < dom.order(); ++a)
    if (map[dom.r(a)] != cod.r(map[a])) report.fail("ii", {a}, "f(r(a)) != r(f(a))");
  if (map[0] != 0) report.fail("iii", {}, "f(1) != 1");
  return report;
}

namespace detail {

inline ElementSet image_of(std::span<const Element> map, ElementSet s) {
  ElementSet out;
  for (Element x : s) out.insert(map[x]);
  return out;
}

inline bool map_is_full(const Hypergroup& dom, const Hypergroup& cod,
                        std::span<const Element> map) {
  for (Element a = 0; a < dom.order(); ++a)
    for (Element b = 0; b < dom.order(); ++b)
      if (image_of(map, dom.cell(a, b)) != cod.cell(map[a], map[b])) return false;
  return true;
}

}  // namespace detail

/// A morphism of hypergroups together with its endpoints.
class Morphism {
 public:
  /// Throws validation_error if `map` violates a morphism condition.
  static Morphism create(Hypergroup dom, Hypergroup cod, std::vector<Element> map) {
    CheckReport report = is_morphism(dom, cod, map);
    if (!report.passed())
      throw validation_error("not a morphism: " + report.summary(), report);
    return Morphism(std::move(dom), std::move(cod), std::move(map));
  }

  static Morphism identity(const Hypergroup& g) {
    std::vector<Element> map(g.order());
    for (Element x = 0; x < g.order(); ++x) map[x] = x;
    return Morphism(g, g, std::move(map));
  }

  /// The constant-identity map, which is always a morphism.
  static Morphism zero(const Hypergroup& dom, const Hypergroup& cod) {
    return Morphism(dom, cod, std::vector<Element>(dom.order(), 0));
  }

  const Hypergroup& dom() const noexcept { return dom_; }
  const Hypergroup& cod() const noexcept { return cod_; }
  const std::vector<Element>& map() const noexcept { return map_; }
  Element operator()(Element a) const {
    detail::require_element(dom_.order(), a, "morphism argument");
    return map_[a];
  }
  Element at(Element a) const noexcept { return map_[a]; }

  bool full() const noexcept { return full_; }
  bool is_zero() const noexcept {
    for (Element v : map_)
      if (v != 0) return false;
    return true;
  }
  bool injective() const noexcept {
    ElementSet seen;
    for (Element v : map_) {
      if (seen.contains(v)) return false;
      seen.insert(v);
    }
    return true;
  }
  bool surjective() const noexcept { return image_set() == cod_.carrier(); }
  ElementSet image_set() const noexcept {
    ElementSet s;
    for (Element v : map_) s.insert(v);
    return s;
  }

  // Same endpoints (as operations) and the same map.
  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.map_ == b.map_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

 private:
  Morphism(Hypergroup dom, Hypergroup cod, std::vector<Element> map)
      : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
    full_ = detail::map_is_full(dom_, cod_, map_);
  }

  Hypergroup dom_;
  Hypergroup cod_;
  std::vector<Element> map_;
  bool full_ = false;
};

/// f(a*b) = f(a)*f(b) for all a, b.
inline bool is_full(const Morphism& f) noexcept { return f.full(); }

/// g after f. Throws domain_error when cod(f) and dom(g) differ.
inline Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.cod() == g.dom()))
    throw domain_error("compose: codomain of f is not the domain of g");
  std::vector<Element> map(f.dom().order());
  for (Element x = 0; x < map.size(); ++x) map[x] = g.at(f.at(x));
  return Morphism::create(f.dom(), g.cod(), std::move(map));
}

}  // namespace hg
