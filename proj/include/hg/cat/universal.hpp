#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hg/construct/diagram.hpp"
#include "hg/morph/hom.hpp"
#include "hg/morph/kernel.hpp"

namespace hg {

/// Carrier of Im f equals the carrier of Ker(Coker f).
inline bool check_image_full(const Morphism& f, CokernelOptions opt = {}) {
  const CokernelResult c = cokernel(f, opt);
  return kernel(c.projection).carrier.members() == f.image_set();
}

namespace detail {

// Number of m in `candidates` with pred(m), stopping at 2.
inline std::size_t count_upto_two(const std::vector<Morphism>& candidates,
                                  const std::function<bool(const Morphism&)>& pred) {
  std::size_t n = 0;
  for (const auto& m : candidates)
    if (pred(m) && ++n == 2) break;
  return n;
}

}  // namespace detail

/// Every t : E -> dom f with f.t = 0 factors uniquely through Ker f.
/// Witness (test index, index of t in Hom(E, dom f), number of factorizations).
inline CheckReport universal_kernel_check(const Morphism& f, const std::vector<Hypergroup>& tests) {
  const KernelResult ker = kernel(f);
  CheckReport report;
  for (std::size_t e = 0; e < tests.size(); ++e) {
    const auto ts = enumerate_hom(tests[e], f.dom());
    const auto bars = enumerate_hom(tests[e], ker.object);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (!compose(f, ts[i]).is_zero()) continue;
      const std::size_t n = detail::count_upto_two(
          bars, [&](const Morphism& m) { return compose(ker.inclusion, m) == ts[i]; });
      if (n != 1) report.fail("kernel", {e, i, n}, n == 0 ? "no factorization" : "not unique");
    }
  }
  return report;
}

/// Every t : cod f -> E with t.f = 0 factors uniquely through Coker f.
/// Witness (test index, index of t in Hom(cod f, E), number of factorizations).
inline CheckReport universal_cokernel_check(const Morphism& f, const std::vector<Hypergroup>& tests,
                                            CokernelOptions opt = {}) {
  const CokernelResult c = cokernel(f, opt);
  CheckReport report;
  for (std::size_t e = 0; e < tests.size(); ++e) {
    const auto ts = enumerate_hom(f.cod(), tests[e]);
    const auto bars = enumerate_hom(c.object, tests[e]);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (!compose(ts[i], f).is_zero()) continue;
      const std::size_t n = detail::count_upto_two(
          bars, [&](const Morphism& m) { return compose(m, c.projection) == ts[i]; });
      if (n != 1) report.fail("cokernel", {e, i, n}, n == 0 ? "no factorization" : "not unique");
    }
  }
  return report;
}

/// G (+) H with projections is a product and with injections a coproduct
/// against every test object. Tags "product" / "coproduct", witness
/// (test index, first map index, second map index, number of mediators).
inline CheckReport biproduct_check(const Hypergroup& g, const Hypergroup& h,
                                   const std::vector<Hypergroup>& tests) {
  const ProductResult p = direct_sum({g, h});
  const Morphism& p1 = p.projections[0];
  const Morphism& p2 = p.projections[1];
  const Morphism& i1 = p.injections[0];
  const Morphism& i2 = p.injections[1];
  CheckReport report;
  for (std::size_t e = 0; e < tests.size(); ++e) {
    const auto to_g = enumerate_hom(tests[e], g);
    const auto to_h = enumerate_hom(tests[e], h);
    const auto into = enumerate_hom(tests[e], p.object);
    for (std::size_t a = 0; a < to_g.size(); ++a)
      for (std::size_t b = 0; b < to_h.size(); ++b) {
        const std::size_t n = detail::count_upto_two(into, [&](const Morphism& m) {
          return compose(p1, m) == to_g[a] && compose(p2, m) == to_h[b];
        });
        if (n != 1) report.fail("product", {e, a, b, n});
      }
    const auto from_g = enumerate_hom(g, tests[e]);
    const auto from_h = enumerate_hom(h, tests[e]);
    const auto out = enumerate_hom(p.object, tests[e]);
    for (std::size_t a = 0; a < from_g.size(); ++a)
      for (std::size_t b = 0; b < from_h.size(); ++b) {
        const std::size_t n = detail::count_upto_two(out, [&](const Morphism& m) {
          return compose(m, i1) == from_g[a] && compose(m, i2) == from_h[b];
        });
        if (n != 1) report.fail("coproduct", {e, a, b, n});
      }
  }
  return report;
}

/// The one-element hypergroup is initial and terminal: |Hom(T,G)| = |Hom(G,T)| = 1.
inline CheckReport zero_object_check(const std::vector<Hypergroup>& tests) {
  const Hypergroup t = Hypergroup::trivial();
  CheckReport report;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    if (const auto n = count_hom(t, tests[i]); n != 1) report.fail("initial", {i, n});
    if (const auto n = count_hom(tests[i], t); n != 1) report.fail("terminal", {i, n});
  }
  return report;
}

namespace detail {

// Calls visit(choice) for every tuple picking one morphism per node from
// homs[i] such that ok(i, j, choice) holds for all already-chosen j < i.
inline void for_each_cone(const std::vector<std::vector<Morphism>>& homs,
                          const std::function<bool(std::size_t, std::size_t,
                                                   const std::vector<std::size_t>&)>& ok,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> choice(homs.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == homs.size()) {
      visit(choice);
      return;
    }
    for (std::size_t c = 0; c < homs[i].size(); ++c) {
      choice[i] = c;
      bool good = true;
      for (std::size_t j = 0; j < i && good; ++j) good = ok(i, j, choice);
      if (good) self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// The limit projections are compatible, and every compatible cone from a
/// test object factors uniquely through the limit. Tags "compatible"
/// (i, j) and "mediator" (test index, number of mediators, cone indices...).
inline CheckReport universal_limit_check(const DirectedDiagram& d, const LimitResult& lim,
                                         const std::vector<Hypergroup>& tests) {
  CheckReport report;
  const std::size_t m = d.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (d.leq(i, j) && !(compose(d.arrow(i, j), lim.projections[i]) == lim.projections[j]))
        report.fail("compatible", {i, j});
  for (std::size_t e = 0; e < tests.size(); ++e) {
    std::vector<std::vector<Morphism>> homs;
    for (std::size_t i = 0; i < m; ++i) homs.push_back(enumerate_hom(tests[e], d.object(i)));
    const auto into = enumerate_hom(tests[e], lim.object);
    auto ok = [&](std::size_t i, std::size_t j, const std::vector<std::size_t>& c) {
      if (d.leq(i, j)) return compose(d.arrow(i, j), homs[i][c[i]]) == homs[j][c[j]];
      if (d.leq(j, i)) return compose(d.arrow(j, i), homs[j][c[j]]) == homs[i][c[i]];
      return true;
    };
    detail::for_each_cone(homs, ok, [&](const std::vector<std::size_t>& c) {
      const std::size_t n = detail::count_upto_two(into, [&](const Morphism& x) {
        for (std::size_t i = 0; i < m; ++i)
          if (!(compose(lim.projections[i], x) == homs[i][c[i]])) return false;
        return true;
      });
      if (n != 1) {
        std::vector<std::size_t> w{e, n};
        w.insert(w.end(), c.begin(), c.end());
        report.fail("mediator", w);
      }
    });
  }
  return report;
}

/// Colimit counterpart of universal_limit_check, for cocones into test objects.
inline CheckReport universal_colimit_check(const DirectedDiagram& d, const ColimitResult& col,
                                           const std::vector<Hypergroup>& tests) {
  CheckReport report;
  const std::size_t m = d.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (d.leq(i, j) && !(compose(col.injections[j], d.arrow(i, j)) == col.injections[i]))
        report.fail("compatible", {i, j});
  for (std::size_t e = 0; e < tests.size(); ++e) {
    std::vector<std::vector<Morphism>> homs;
    for (std::size_t i = 0; i < m; ++i) homs.push_back(enumerate_hom(d.object(i), tests[e]));
    const auto out = enumerate_hom(col.object, tests[e]);
    auto ok = [&](std::size_t i, std::size_t j, const std::vector<std::size_t>& c) {
      if (d.leq(i, j)) return compose(homs[j][c[j]], d.arrow(i, j)) == homs[i][c[i]];
      if (d.leq(j, i)) return compose(homs[i][c[i]], d.arrow(j, i)) == homs[j][c[j]];
      return true;
    };
    detail::for_each_cone(homs, ok, [&](const std::vector<std::size_t>& c) {
      const std::size_t n = detail::count_upto_two(out, [&](const Morphism& x) {
        for (std::size_t i = 0; i < m; ++i)
          if (!(compose(x, col.injections[i]) == homs[i][c[i]])) return false;
        return true;
      });
      if (n != 1) {
        std::vector<std::size_t> w{e, n};
        w.insert(w.end(), c.begin(), c.end());
        report.fail("mediator", w);
      }
    });
  }
  return report;
}

/// X_0 -> X_1 -> ... -> X_k. full[i] marks arrows that must be full.
struct ExactSequence {
  std::vector<Hypergroup> objects;
  std::vector<Morphism> arrows;
  std::vector<bool> full;
};

/// Exactness by carrier equality Im(arrow i-1) = Ker(arrow i) at every
/// interior object; a sequence with exactly two arrows is read as
/// 0 -> X -> Y -> Z -> 0 and additionally needs an injective first and a
/// surjective second arrow. Malformed input or a violated fullness flag
/// throws validation_error before exactness is judged.
inline CheckReport exactness_check(const ExactSequence& s) {
  CheckReport pre;
  if (s.objects.size() != s.arrows.size() + 1 || s.arrows.empty())
    throw domain_error("exact sequence needs k arrows between k+1 objects");
  for (std::size_t i = 0; i < s.objects.size(); ++i)
    if (!s.objects[i].commutative()) pre.fail("abelian", {i});
  for (std::size_t i = 0; i < s.arrows.size(); ++i) {
    if (!(s.arrows[i].dom() == s.objects[i]) || !(s.arrows[i].cod() == s.objects[i + 1]))
      pre.fail("endpoints", {i});
    if (i < s.full.size() && s.full[i] && !s.arrows[i].full()) pre.fail("full", {i});
  }
  if (!pre.passed()) throw validation_error("exact sequence: " + pre.summary(), pre);

  CheckReport report;
  for (std::size_t i = 1; i < s.arrows.size(); ++i) {
    if (!compose(s.arrows[i], s.arrows[i - 1]).is_zero()) report.fail("composite", {i});
    if (s.arrows[i - 1].image_set() != kernel(s.arrows[i]).carrier.members())
      report.fail("exact", {i}, "image and kernel carriers differ");
  }
  if (s.arrows.size() == 2) {
    if (!s.arrows[0].injective()) report.fail("injective", {0});
    if (!s.arrows[1].surjective()) report.fail("surjective", {1});
  }
  return report;
}

}  // namespace hg
