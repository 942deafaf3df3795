#ifndef RINGCOVER_QUOTIENT_HPP
#define RINGCOVER_QUOTIENT_HPP

#include <vector>

#include "ringcover/ring.hpp"
#include "ringcover/subset.hpp"

namespace ringcover {

struct FactorRing {
  FiniteRing ring;
  std::vector<elem_t> projection;  // element of R -> element of ring
};

/// Quotient by a two-sided ideal, re-presented on a fresh basis. Throws
/// NotASubgroupError / NotAnIdealError when the mask is not a two-sided
/// ideal.
FactorRing factor_ring(const FiniteRing& r, const SubsetMask& ideal);

}  // namespace ringcover

#endif
