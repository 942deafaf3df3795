#include "ringcover/quotient.hpp"

#include <algorithm>

#include "ringcover/errors.hpp"
#include "ringcover/lattice.hpp"
#include "ringcover/rebuild.hpp"

namespace ringcover {

FactorRing factor_ring(const FiniteRing& r, const SubsetMask& ideal) {
  const SubgroupRecord rec = classify_subset(r, ideal);
  if (!rec.is(MemberClass::TwoSidedIdeal))
    throw NotAnIdealError("subgroup of size " + std::to_string(ideal.count()) +
                          " is not a two-sided ideal");

  const std::size_t n = r.size();
  const std::vector<elem_t> members = ideal.elements();

  // Coset representative: the smallest element of x + I.
  std::vector<elem_t> rep(n);
  for (elem_t x = 0; x < n; ++x) {
    elem_t best = r.add(x, members.front());
    for (elem_t i : members) best = std::min(best, r.add(x, i));
    rep[x] = best;
  }

  std::vector<elem_t> reps;
  for (elem_t x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);

  auto coset_id = [&](elem_t x) {
    return static_cast<elem_t>(std::lower_bound(reps.begin(), reps.end(), rep[x]) -
                               reps.begin());
  };

  auto add = [&](elem_t a, elem_t b) { return coset_id(r.add(reps[a], reps[b])); };
  auto mul = [&](elem_t a, elem_t b) { return coset_id(r.mul(reps[a], reps[b])); };
  RepresentedRing rebuilt = represent_tables(reps.size(), add, mul);

  FactorRing out{std::move(rebuilt.ring), std::vector<elem_t>(n)};
  for (elem_t x = 0; x < n; ++x) out.projection[x] = rebuilt.to_ring[coset_id(x)];
  return out;
}

}  // namespace ringcover
