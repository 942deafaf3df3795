#ifndef RINGCOVER_RING_HPP
#define RINGCOVER_RING_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ringcover/presentation.hpp"
#include "ringcover/shape.hpp"

namespace ringcover {

/// A validated finite ring. Elements are indices in [0, n); addition is the
/// shape's componentwise sum and multiplication the bilinear extension of the
/// presentation's generator products. Operation tables are precomputed for
/// n <= 512 and evaluated on demand above that. Immutable after construction.
class FiniteRing {
 public:
  std::size_t size() const { return n_; }
  const AbelianGroupShape& shape() const { return pres_.shape; }
  const RingPresentation& presentation() const { return pres_; }

  elem_t add(elem_t x, elem_t y) const {
    return add_tab_.empty() ? pres_.shape.add(x, y) : add_tab_[x * n_ + y];
  }
  elem_t neg(elem_t x) const { return neg_tab_.empty() ? pres_.shape.neg(x) : neg_tab_[x]; }
  elem_t sub(elem_t x, elem_t y) const { return add(x, neg(y)); }
  elem_t mul(elem_t x, elem_t y) const {
    return mul_tab_.empty() ? mul_eval(x, y) : mul_tab_[x * n_ + y];
  }

  elem_t zero() const { return 0; }
  std::uint32_t additive_order(elem_t x) const { return pres_.shape.element_order(x); }
  bool additive_cyclic() const { return pres_.shape.cyclic(); }

  Coords coords_of(elem_t e) const { return pres_.shape.coords_of(e); }
  elem_t index_of(const Coords& c) const { return pres_.shape.index_of(c); }

  /// The two-sided multiplicative identity, if one exists. The order-1 ring
  /// reports its sole element.
  std::optional<elem_t> identity() const;

  friend FiniteRing validate_presentation(const RingPresentation& pres, std::size_t max_order);

 private:
  explicit FiniteRing(RingPresentation pres);
  elem_t mul_eval(elem_t x, elem_t y) const;

  RingPresentation pres_;
  std::size_t n_ = 1;
  std::vector<elem_t> generator_idx_;         // index of each g_i
  std::vector<elem_t> gen_product_idx_;       // index of each g_i * g_j, k*k
  std::vector<elem_t> add_tab_, mul_tab_, neg_tab_;
};

/// Check well-definedness and generator associativity, then build the ring.
/// Throws IllDefinedError, NonAssociativeError, or TooLargeError.
FiniteRing validate_presentation(const RingPresentation& pres,
                                 std::size_t max_order = kDefaultMaxOrder);

/// Same additive group, reversed multiplication.
FiniteRing opposite(const FiniteRing& r);

/// Componentwise ring structure on the concatenated shape.
FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s,
                          std::size_t max_order = kDefaultMaxOrder);

std::optional<elem_t> has_identity(const FiniteRing& r);

}  // namespace ringcover

#endif
