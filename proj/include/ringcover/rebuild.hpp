#ifndef RINGCOVER_REBUILD_HPP
#define RINGCOVER_REBUILD_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "ringcover/ring.hpp"

namespace ringcover {

/// A ring rebuilt on a fresh presentation from raw operation tables, together
/// with the index map from the input labeling to the new ring's elements.
struct RepresentedRing {
  FiniteRing ring;
  std::vector<elem_t> to_ring;  // input index -> ring element index
};

/// Re-present a ring given only by total operation tables over indices
/// 0..n-1 (index 0 must be the additive zero). A generating basis of the
/// additive group is found by greedy cyclic decomposition: split off an
/// element of maximal additive order, recurse on the quotient, lift. The
/// resulting map is an isomorphism onto the returned ring.
RepresentedRing represent_tables(std::size_t n,
                                 const std::function<elem_t(elem_t, elem_t)>& add,
                                 const std::function<elem_t(elem_t, elem_t)>& mul,
                                 std::size_t max_order = kDefaultMaxOrder);

}  // namespace ringcover

#endif
