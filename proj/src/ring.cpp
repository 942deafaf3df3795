#include "ringcover/ring.hpp"

#include <string>

#include "ringcover/errors.hpp"

namespace ringcover {

namespace {

constexpr std::size_t kTableLimit = 512;

std::string pos(std::size_t i, std::size_t j) {
  return "products[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

}  // namespace

FiniteRing::FiniteRing(RingPresentation pres) : pres_(std::move(pres)) {
  const auto& shape = pres_.shape;
  const std::size_t k = shape.rank();
  n_ = shape.order();
  generator_idx_.resize(k);
  for (std::size_t i = 0; i < k; ++i) generator_idx_[i] = shape.generator(i);
  gen_product_idx_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      gen_product_idx_[i * k + j] = shape.index_of(pres_.product(i, j));
}

elem_t FiniteRing::mul_eval(elem_t x, elem_t y) const {
  const auto& shape = pres_.shape;
  const std::size_t k = shape.rank();
  const auto& orders = shape.orders();
  thread_local Coords cx, cy;
  thread_local std::vector<std::uint64_t> acc;
  shape.coords_of(x, cx);
  shape.coords_of(y, cy);
  acc.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (cx[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (cy[j] == 0) continue;
      const std::uint64_t s = std::uint64_t{cx[i]} * cy[j];
      const Coords& p = pres_.product(i, j);
      for (std::size_t t = 0; t < k; ++t) acc[t] += s * p[t];
    }
  }
  Coords res(k);
  for (std::size_t t = 0; t < k; ++t) res[t] = static_cast<std::uint32_t>(acc[t] % orders[t]);
  return shape.index_of(res);
}

std::optional<elem_t> FiniteRing::identity() const {
  // e is a two-sided identity iff it fixes every generator on both sides;
  // bilinearity extends that to all elements.
  const std::size_t k = pres_.shape.rank();
  for (elem_t e = 0; e < n_; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const elem_t g = generator_idx_[i];
      ok = mul(e, g) == g && mul(g, e) == g;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<elem_t> has_identity(const FiniteRing& r) { return r.identity(); }

FiniteRing validate_presentation(const RingPresentation& pres, std::size_t max_order) {
  const auto& shape = pres.shape;
  const std::size_t k = shape.rank();
  const auto& orders = shape.orders();

  if (shape.order() > max_order)
    throw TooLargeError("ring order " + std::to_string(shape.order()) +
                        " exceeds the element-count limit " + std::to_string(max_order));
  if (pres.products.size() != k * k)
    throw ParseError("products must be a " + std::to_string(k) + "x" + std::to_string(k) +
                     " array, got " + std::to_string(pres.products.size()) + " entries");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Coords& c = pres.product(i, j);
      if (c.size() != k)
        throw ParseError(pos(i, j) + " has " + std::to_string(c.size()) +
                         " coordinates, expected " + std::to_string(k));
      for (std::size_t t = 0; t < k; ++t)
        if (c[t] >= orders[t])
          throw ParseError(pos(i, j) + " coordinate " + std::to_string(t) + " is " +
                           std::to_string(c[t]) + ", must be < " + std::to_string(orders[t]));
    }

  // well-definedness: m_i c_{ij}^t = m_j c_{ij}^t = 0 (mod m_t)
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Coords& c = pres.product(i, j);
      for (std::size_t t = 0; t < k; ++t) {
        if ((std::uint64_t{orders[i]} * c[t]) % orders[t] != 0)
          throw IllDefinedError(i, j, t,
                                "IllDefined: m_" + std::to_string(i) + " * " + pos(i, j) +
                                    "[" + std::to_string(t) + "] = " +
                                    std::to_string(orders[i]) + " * " + std::to_string(c[t]) +
                                    " is not 0 mod " + std::to_string(orders[t]));
        if ((std::uint64_t{orders[j]} * c[t]) % orders[t] != 0)
          throw IllDefinedError(i, j, t,
                                "IllDefined: m_" + std::to_string(j) + " * " + pos(i, j) +
                                    "[" + std::to_string(t) + "] = " +
                                    std::to_string(orders[j]) + " * " + std::to_string(c[t]) +
                                    " is not 0 mod " + std::to_string(orders[t]));
      }
    }

  FiniteRing ring(pres);

  // associativity on generators; bilinearity extends it to all triples
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < k; ++t) {
        const elem_t gi = ring.generator_idx_[i];
        const elem_t gj = ring.generator_idx_[j];
        const elem_t gt = ring.generator_idx_[t];
        const elem_t lhs = ring.mul_eval(ring.gen_product_idx_[i * k + j], gt);
        const elem_t rhs = ring.mul_eval(gi, ring.mul_eval(gj, gt));
        if (lhs != rhs)
          throw NonAssociativeError(
              i, j, t,
              "NonAssociative: (g" + std::to_string(i) + " g" + std::to_string(j) + ") g" +
                  std::to_string(t) + " != g" + std::to_string(i) + " (g" + std::to_string(j) +
                  " g" + std::to_string(t) + ")");
        (void)gi;
        (void)gj;
      }

  if (ring.n_ <= kTableLimit) {
    const std::size_t n = ring.n_;
    ring.neg_tab_.resize(n);
    for (elem_t x = 0; x < n; ++x) ring.neg_tab_[x] = shape.neg(x);
    ring.add_tab_.resize(n * n);
    ring.mul_tab_.resize(n * n);
    for (elem_t x = 0; x < n; ++x)
      for (elem_t y = 0; y < n; ++y) {
        ring.add_tab_[x * n + y] = shape.add(x, y);
        ring.mul_tab_[x * n + y] = ring.mul_eval(x, y);
      }
  }
  return ring;
}

FiniteRing opposite(const FiniteRing& r) {
  const std::size_t k = r.shape().rank();
  RingPresentation op(r.shape(), std::vector<Coords>(k * k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) op.product(i, j) = r.presentation().product(j, i);
  return validate_presentation(op, r.size());
}

FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s, std::size_t max_order) {
  const std::size_t kr = r.shape().rank(), ks = s.shape().rank(), k = kr + ks;
  std::vector<std::uint32_t> orders = r.shape().orders();
  orders.insert(orders.end(), s.shape().orders().begin(), s.shape().orders().end());
  AbelianGroupShape shape(std::move(orders), max_order);

  std::vector<Coords> prods(k * k, Coords(k, 0));
  for (std::size_t i = 0; i < kr; ++i)
    for (std::size_t j = 0; j < kr; ++j) {
      const Coords& c = r.presentation().product(i, j);
      for (std::size_t t = 0; t < kr; ++t) prods[i * k + j][t] = c[t];
    }
  for (std::size_t i = 0; i < ks; ++i)
    for (std::size_t j = 0; j < ks; ++j) {
      const Coords& c = s.presentation().product(i, j);
      for (std::size_t t = 0; t < ks; ++t) prods[(kr + i) * k + (kr + j)][kr + t] = c[t];
    }
  return validate_presentation(RingPresentation(std::move(shape), std::move(prods)), max_order);
}

RingPresentation RingPresentation::zero(AbelianGroupShape s) {
  const std::size_t k = s.rank();
  return RingPresentation(std::move(s), std::vector<Coords>(k * k, Coords(k, 0)));
}

}  // namespace ringcover
