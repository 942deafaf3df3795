#include "ringcover/shape.hpp"

#include <numeric>
#include <string>

#include "ringcover/errors.hpp"

namespace ringcover {

AbelianGroupShape::AbelianGroupShape(std::vector<std::uint32_t> orders, std::size_t max_order)
    : orders_(std::move(orders)) {
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] < 2)
      throw ParseError("shape order m_" + std::to_string(i) + " = " +
                       std::to_string(orders_[i]) + " must be >= 2");
  }
  std::size_t n = 1;
  for (auto m : orders_) {
    if (n > max_order / m)
      throw TooLargeError("group order exceeds the element-count limit " +
                          std::to_string(max_order));
    n *= m;
  }
  order_ = n;
  stride_.assign(orders_.size(), 1);
  for (std::size_t i = orders_.size(); i-- > 1;)
    stride_[i - 1] = stride_[i] * orders_[i];
}

elem_t AbelianGroupShape::index_of(const Coords& c) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx += (c[i] % orders_[i]) * stride_[i];
  return static_cast<elem_t>(idx);
}

Coords AbelianGroupShape::coords_of(elem_t e) const {
  Coords c(orders_.size());
  coords_of(e, c);
  return c;
}

void AbelianGroupShape::coords_of(elem_t e, Coords& out) const {
  out.resize(orders_.size());
  std::size_t rem = e;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(rem / stride_[i]);
    rem %= stride_[i];
  }
}

elem_t AbelianGroupShape::add(elem_t x, elem_t y) const {
  std::size_t idx = 0, rx = x, ry = y;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::uint32_t cx = static_cast<std::uint32_t>(rx / stride_[i]);
    std::uint32_t cy = static_cast<std::uint32_t>(ry / stride_[i]);
    rx %= stride_[i];
    ry %= stride_[i];
    std::uint32_t s = cx + cy;
    if (s >= orders_[i]) s -= orders_[i];
    idx += s * stride_[i];
  }
  return static_cast<elem_t>(idx);
}

elem_t AbelianGroupShape::neg(elem_t x) const {
  std::size_t idx = 0, rx = x;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::uint32_t cx = static_cast<std::uint32_t>(rx / stride_[i]);
    rx %= stride_[i];
    idx += (cx == 0 ? 0 : orders_[i] - cx) * stride_[i];
  }
  return static_cast<elem_t>(idx);
}

elem_t AbelianGroupShape::scale(std::uint64_t s, elem_t x) const {
  std::size_t idx = 0, rx = x;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::uint32_t cx = static_cast<std::uint32_t>(rx / stride_[i]);
    rx %= stride_[i];
    idx += static_cast<std::size_t>((s * cx) % orders_[i]) * stride_[i];
  }
  return static_cast<elem_t>(idx);
}

elem_t AbelianGroupShape::generator(std::size_t i) const {
  return static_cast<elem_t>(stride_[i]);
}

std::uint32_t AbelianGroupShape::element_order(elem_t x) const {
  // lcm over coordinates of m_i / gcd(m_i, c_i)
  std::uint64_t ord = 1;
  std::size_t rx = x;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::uint32_t cx = static_cast<std::uint32_t>(rx / stride_[i]);
    rx %= stride_[i];
    std::uint32_t oi = orders_[i] / std::gcd(orders_[i], cx == 0 ? orders_[i] : cx);
    ord = std::lcm(ord, static_cast<std::uint64_t>(oi));
  }
  return static_cast<std::uint32_t>(ord);
}

bool AbelianGroupShape::cyclic() const {
  for (std::size_t i = 0; i < orders_.size(); ++i)
    for (std::size_t j = i + 1; j < orders_.size(); ++j)
      if (std::gcd(orders_[i], orders_[j]) != 1) return false;
  return true;
}

}  // namespace ringcover
