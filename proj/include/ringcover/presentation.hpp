#ifndef RINGCOVER_PRESENTATION_HPP
#define RINGCOVER_PRESENTATION_HPP

#include <cstddef>
#include <vector>

#include "ringcover/shape.hpp"

namespace ringcover {

/// Structure-constant presentation of a finite ring: an additive-group shape
/// plus the k x k generator products, products[i][j] = coords of g_i * g_j.
struct RingPresentation {
  AbelianGroupShape shape;
  std::vector<Coords> products;  // k*k entries, row-major

  RingPresentation() = default;
  RingPresentation(AbelianGroupShape s, std::vector<Coords> prods)
      : shape(std::move(s)), products(std::move(prods)) {}

  /// All-zero products on the given shape.
  static RingPresentation zero(AbelianGroupShape s);

  const Coords& product(std::size_t i, std::size_t j) const {
    return products[i * shape.rank() + j];
  }
  Coords& product(std::size_t i, std::size_t j) { return products[i * shape.rank() + j]; }

  bool operator==(const RingPresentation&) const = default;
};

}  // namespace ringcover

#endif
