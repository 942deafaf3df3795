#ifndef RINGCOVER_ISO_HPP
#define RINGCOVER_ISO_HPP

#include <optional>
#include <vector>

#include "ringcover/ring.hpp"

namespace ringcover {

/// Ring isomorphism as a full element map: map[x] is the image of domain
/// element x in the codomain.
struct IsoWitness {
  std::vector<elem_t> map;
};

/// Search for a ring isomorphism a -> b. Cheap invariants (additive order
/// multiset, square-order multiset) run first; then generator images are
/// backtracked with incremental injectivity and multiplication checks.
std::optional<IsoWitness> is_isomorphic(const FiniteRing& a, const FiniteRing& b);

/// Every additive automorphism of the shape's group, as full element maps,
/// in a deterministic order.
std::vector<std::vector<elem_t>> additive_automorphisms(const AbelianGroupShape& shape);

}  // namespace ringcover

#endif
