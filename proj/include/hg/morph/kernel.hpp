#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hg/construct/quotient.hpp"
#include "hg/construct/subcarrier.hpp"
#include "hg/morph/morphism.hpp"

namespace hg {

struct KernelResult {
  SubCarrier carrier;     // {g : f(g) = 1}
  Hypergroup object;
  Morphism inclusion;     // full
};

/// Ker f with its inclusion. The kernel carrier is always a full
/// subcarrier; a violation throws logic_error.
inline KernelResult kernel(const Morphism& f) {
  ElementSet k;
  for (Element x = 0; x < f.dom().order(); ++x)
    if (f.at(x) == 0) k.insert(x);
  SubCarrier s = SubCarrier::create(f.dom(), k);
  if (!is_full_subcarrier(f.dom(), s))
    throw std::logic_error("kernel carrier is not a full subcarrier");
  Subhypergroup sub = subhypergroup(s);
  return {std::move(s), std::move(sub.object), std::move(sub.inclusion)};
}

struct ImageResult {
  SubCarrier carrier;  // {f(g)}
  bool full_subcarrier = false;
  // Restriction of the codomain to the image (cells intersected with it)
  // with its inclusion; absent when that restriction is not a hypergroup.
  std::optional<Subhypergroup> sub;
};

/// Im f. When f is full the image is a full subcarrier and its inclusion is
/// a full morphism.
inline ImageResult image(const Morphism& f) {
  SubCarrier s = SubCarrier::create(f.cod(), f.image_set());
  const bool full = is_full_subcarrier(f.cod(), s);
  if (f.full() && !full) throw std::logic_error("image of a full morphism is not full");
  return {s, full, try_subhypergroup(f.cod(), s.members())};
}

struct CokernelOptions {
  // Quotient by the subhypergroup generated by Im f when f is not full,
  // instead of rejecting it.
  bool force_generated = false;
};

struct CokernelResult {
  Hypergroup object;
  Morphism projection;
  QuotientPresentation presentation;
};

/// cod(f) / Im(f) with its projection. Requires an abelian codomain and a
/// full f (unless force_generated).
inline CokernelResult cokernel(const Morphism& f, CokernelOptions opt = {}) {
  if (!f.cod().commutative()) throw unsupported_error("cokernel: codomain is not abelian");
  if (!f.full() && !opt.force_generated)
    throw unsupported_error("cokernel: morphism is not full");
  SubCarrier im = SubCarrier::create(f.cod(), f.image_set());
  QuotientPresentation q = quotient(f.cod(), im);
  return {q.quotient, q.projection, std::move(q)};
}

/// The canonical map dom/Ker f -> Im f, [a] -> f(a), for a full morphism
/// between abelian hypergroups. The map is checked to be well defined,
/// bijective, full, and to have a morphism inverse; any failure throws
/// validation_error.
inline Morphism first_iso(const Morphism& f) {
  if (!f.full()) throw unsupported_error("first_iso: morphism is not full");
  if (!f.dom().commutative() || !f.cod().commutative())
    throw unsupported_error("first_iso: endpoints must be abelian");
  const KernelResult ker = kernel(f);
  const QuotientPresentation q = quotient(f.dom(), ker.carrier);
  const ImageResult im = image(f);
  if (!im.sub) throw std::logic_error("first_iso: image of a full morphism did not restrict");
  const Hypergroup& target = im.sub->object;
  const std::vector<Element> members = im.carrier.members().to_vector();
  std::vector<Element> local(f.cod().order(), 0);
  for (Element i = 0; i < members.size(); ++i) local[members[i]] = i;

  CheckReport report;
  std::vector<Element> map(q.cosets.size(), 0);
  for (Element i = 0; i < q.cosets.size(); ++i) {
    map[i] = local[f.at(q.cosets[i].min())];
    for (Element a : q.cosets[i])
      if (local[f.at(a)] != map[i]) report.fail("well-defined", {i, a});
  }
  std::vector<Element> back(target.order(), 0);
  ElementSet hit;
  for (Element i = 0; i < map.size(); ++i) {
    if (hit.contains(map[i])) report.fail("injective", {i});
    hit.insert(map[i]);
    back[map[i]] = i;
  }
  if (hit != target.carrier()) report.fail("surjective", {});
  if (!report.passed())
    throw validation_error("first_iso: " + report.summary(), report);
  report.merge(is_morphism(q.quotient, target, map));
  if (report.passed()) report.merge(is_morphism(target, q.quotient, back));
  if (!report.passed())
    throw validation_error("first_iso: " + report.summary(), report);
  Morphism iso = Morphism::create(q.quotient, target, std::move(map));
  if (!iso.full()) {
    report.fail("full", {});
    throw validation_error("first_iso: induced map is not full", report);
  }
  return iso;
}

}  // namespace hg
