#ifndef RINGCOVER_SHAPE_HPP
#define RINGCOVER_SHAPE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ringcover {

/// Canonical element index in [0, |G|).
using elem_t = std::uint32_t;

/// Coordinate tuple of an element, one residue per generator.
using Coords = std::vector<std::uint32_t>;

/// Default element-count limit for ring construction.
inline constexpr std::size_t kDefaultMaxOrder = 4096;

/// Shape of a finite abelian group: generator orders m_1..m_k, each >= 2.
/// The group is Z_{m_1} x ... x Z_{m_k}; elements are coordinate tuples
/// addressed by a row-major mixed-radix index (last coordinate fastest).
/// An empty shape (k = 0) is the trivial group of order 1.
class AbelianGroupShape {
 public:
  AbelianGroupShape() = default;
  explicit AbelianGroupShape(std::vector<std::uint32_t> orders,
                             std::size_t max_order = kDefaultMaxOrder);

  std::size_t rank() const { return orders_.size(); }
  std::size_t order() const { return order_; }
  const std::vector<std::uint32_t>& orders() const { return orders_; }

  elem_t index_of(const Coords& c) const;
  Coords coords_of(elem_t e) const;
  void coords_of(elem_t e, Coords& out) const;

  elem_t add(elem_t x, elem_t y) const;
  elem_t neg(elem_t x) const;
  elem_t scale(std::uint64_t s, elem_t x) const;

  /// Index of the basis element g_i.
  elem_t generator(std::size_t i) const;

  /// Additive order of an element.
  std::uint32_t element_order(elem_t x) const;

  /// True iff the group is cyclic (pairwise coprime orders; order 1 counts).
  bool cyclic() const;

  bool operator==(const AbelianGroupShape&) const = default;

 private:
  std::vector<std::uint32_t> orders_;
  std::vector<std::size_t> stride_;
  std::size_t order_ = 1;
};

}  // namespace ringcover

#endif
