#pragma once

// Small hypergroups used throughout the tests, built from first principles
// (Cayley tables, literal cells) rather than through the constructors under
// test where that matters.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "hg/hg.hpp"

namespace fx {

using hg::ElementSet;
using hg::Hypergroup;
using hg::Table;

inline Hypergroup T() { return Hypergroup::trivial(); }

inline Hypergroup Z2() {
  Table t(2);
  t.set_identity_cells();
  t.at(1, 1) = {0};
  return Hypergroup::from_table(t, {"e", "g"});
}

inline Hypergroup K2() {
  Table t(2);
  t.set_identity_cells();
  t.at(1, 1) = {0, 1};
  return Hypergroup::from_table(t, {"e", "g"});
}

// Chain 0 < a < b: x+y = max for x != y, x+x = [0,x].
inline Hypergroup V3() {
  Table t(3);
  t.set_identity_cells();
  t.at(1, 1) = {0, 1};
  t.at(1, 2) = {2};
  t.at(2, 1) = {2};
  t.at(2, 2) = {0, 1, 2};
  return Hypergroup::from_table(t, {"0", "a", "b"});
}

inline Hypergroup Z3() {
  return hg::from_group({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {"0", "1", "2"});
}

// S3 as permutations of {0,1,2}, listed e, (12), (13), (23), (123), (132).
inline const std::vector<std::array<int, 3>>& s3_perms() {
  static const std::vector<std::array<int, 3>> p{
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  return p;
}

inline std::vector<std::vector<std::size_t>> s3_cayley() {
  const auto& p = s3_perms();
  std::vector<std::vector<std::size_t>> c(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      // (p_i p_j)(x) = p_i(p_j(x))
      std::array<int, 3> q{};
      for (int x = 0; x < 3; ++x) q[x] = p[i][p[j][x]];
      c[i][j] = static_cast<std::size_t>(std::find(p.begin(), p.end(), q) - p.begin());
    }
  return c;
}

inline Hypergroup S3() {
  return hg::from_group(s3_cayley(), {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

inline hg::SubCarrier sub(const Hypergroup& g, ElementSet s) { return hg::SubCarrier::create(g, s); }

// f : V3 -> K2 with 0, a -> e and b -> g.
inline hg::Morphism v3_to_k2() { return hg::Morphism::create(V3(), K2(), {0, 0, 1}); }

// Inclusion {0,a} -> V3.
inline hg::Morphism v3_inclusion() {
  return hg::subhypergroup(sub(V3(), {0, 1})).inclusion;
}

inline bool all_singletons(const Hypergroup& g) {
  for (const auto& c : g.table().cells)
    if (!c.is_singleton()) return false;
  return true;
}

}  // namespace fx
