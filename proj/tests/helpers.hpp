#ifndef RINGCOVER_TESTS_HELPERS_HPP
#define RINGCOVER_TESTS_HELPERS_HPP

// Deliberately naive re-implementations used as independent cross-checks for
// the library's optimized algorithms. Everything here trades speed for
// obviousness and must only be run on small rings.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "ringcover/iso.hpp"
#include "ringcover/rebuild.hpp"
#include "ringcover/ring.hpp"
#include "ringcover/subset.hpp"

namespace ringcover::test {

inline SubsetMask mask_of(std::size_t n, const std::vector<elem_t>& elems) {
  SubsetMask m(n);
  for (elem_t e : elems) m.set(e);
  return m;
}

inline bool is_subgroup_naive(const FiniteRing& r, const SubsetMask& m) {
  if (!m.test(0)) return false;
  const std::vector<elem_t> elems = m.elements();
  for (elem_t x : elems)
    for (elem_t y : elems)
      if (!m.test(r.add(x, y))) return false;
  return true;  // finite and +-closed implies closed under negation
}

/// Every additive subgroup, found by testing all subsets. Only for n <= 16.
inline std::vector<SubsetMask> brute_force_subgroups(const FiniteRing& r) {
  const std::size_t n = r.size();
  std::vector<SubsetMask> out;
  for (std::uint32_t bits = 1; bits < (1u << n); bits += 2) {  // bit 0 always set
    SubsetMask m(n);
    for (elem_t e = 0; e < n; ++e)
      if ((bits >> e) & 1) m.set(e);
    if (is_subgroup_naive(r, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const SubsetMask& a, const SubsetMask& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

/// Smallest number of candidates (at most `limit`) whose union covers the
/// universe, by trying every combination in increasing size.
inline std::optional<std::size_t> brute_force_min_cover(const SubsetMask& universe,
                                                        const std::vector<SubsetMask>& candidates,
                                                        std::size_t limit) {
  if (universe.empty()) return 0;
  const std::size_t m = candidates.size();
  for (std::size_t size = 1; size <= limit && size <= m; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      SubsetMask u = candidates[idx[0]];
      for (std::size_t i = 1; i < size; ++i) u |= candidates[idx[i]];
      if (u.contains(universe)) return size;
      // next combination
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == m - size + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

/// An isomorphic copy of r: its multiplication table conjugated by a random
/// additive automorphism, re-presented on the same shape.
inline FiniteRing scramble(const FiniteRing& r, std::mt19937& rng) {
  const auto autos = additive_automorphisms(r.shape());
  const auto& s = autos[std::uniform_int_distribution<std::size_t>(0, autos.size() - 1)(rng)];
  std::vector<elem_t> inv(s.size());
  for (elem_t x = 0; x < s.size(); ++x) inv[s[x]] = x;
  const std::size_t n = r.size();
  RepresentedRing rebuilt = represent_tables(
      n, [&](elem_t x, elem_t y) { return r.add(x, y); },
      [&](elem_t x, elem_t y) { return inv[r.mul(s[x], s[y])]; });
  return rebuilt.ring;
}

/// True iff w.map is a ring isomorphism a -> b.
inline bool valid_witness(const FiniteRing& a, const FiniteRing& b,
                          const std::vector<elem_t>& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (elem_t y : map) {
    if (y >= b.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (elem_t x = 0; x < a.size(); ++x)
    for (elem_t y = 0; y < a.size(); ++y) {
      if (map[a.add(x, y)] != b.add(map[x], map[y])) return false;
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
    }
  return true;
}

}  // namespace ringcover::test

#endif
