#include "ringcover/rebuild.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ringcover/errors.hpp"

namespace ringcover {

namespace {

struct TableGroup {
  std::size_t n = 1;
  std::vector<elem_t> add;  // n*n

  elem_t sum(elem_t x, elem_t y) const { return add[x * n + y]; }

  std::uint32_t order_of(elem_t x) const {
    std::uint32_t ord = 1;
    elem_t acc = x;
    while (acc != 0) {
      acc = sum(acc, x);
      ++ord;
    }
    return ord;
  }

  elem_t multiple(std::uint32_t s, elem_t x) const {
    elem_t acc = 0;
    for (std::uint32_t i = 0; i < s; ++i) acc = sum(acc, x);
    return acc;
  }
};

// Basis of the additive group: generator ids with their orders, maximal
// order first. Quotients are rebuilt as TableGroups on coset min-reps;
// lifts pick the smallest coset member of matching order.
struct BasisEntry {
  elem_t gen;
  std::uint32_t order;
};

std::vector<BasisEntry> abelian_basis(const TableGroup& g) {
  if (g.n == 1) return {};

  elem_t best = 0;
  std::uint32_t best_ord = 1;
  for (elem_t x = 0; x < g.n; ++x) {
    std::uint32_t o = g.order_of(x);
    if (o > best_ord) {
      best = x;
      best_ord = o;
    }
  }

  // cosets of <best>
  std::vector<elem_t> cyc;
  {
    elem_t acc = 0;
    do {
      cyc.push_back(acc);
      acc = g.sum(acc, best);
    } while (acc != 0);
  }
  std::vector<elem_t> coset_min(g.n);
  for (elem_t x = 0; x < g.n; ++x) {
    elem_t mn = x;
    for (elem_t c : cyc) mn = std::min(mn, g.sum(x, c));
    coset_min[x] = mn;
  }
  std::vector<elem_t> reps;  // sorted distinct min-reps
  for (elem_t x = 0; x < g.n; ++x)
    if (coset_min[x] == x) reps.push_back(x);
  std::vector<elem_t> coset_id(g.n);
  for (elem_t x = 0; x < g.n; ++x)
    coset_id[x] = static_cast<elem_t>(
        std::lower_bound(reps.begin(), reps.end(), coset_min[x]) - reps.begin());

  TableGroup q;
  q.n = reps.size();
  q.add.resize(q.n * q.n);
  for (std::size_t a = 0; a < q.n; ++a)
    for (std::size_t b = 0; b < q.n; ++b)
      q.add[a * q.n + b] = coset_id[g.sum(reps[a], reps[b])];

  std::vector<BasisEntry> basis{{best, best_ord}};
  for (const BasisEntry& qe : abelian_basis(q)) {
    // lift: an element of the coset with the same order as the coset itself
    elem_t lifted = static_cast<elem_t>(g.n);
    for (elem_t x = 0; x < g.n && lifted == g.n; ++x)
      if (coset_id[x] == qe.gen && g.order_of(x) == qe.order) lifted = x;
    assert(lifted < g.n);
    basis.push_back({lifted, qe.order});
  }
  return basis;
}

}  // namespace

RepresentedRing represent_tables(std::size_t n,
                                 const std::function<elem_t(elem_t, elem_t)>& add,
                                 const std::function<elem_t(elem_t, elem_t)>& mul,
                                 std::size_t max_order) {
  TableGroup g;
  g.n = n;
  g.add.resize(n * n);
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y) g.add[x * n + y] = add(x, y);

  const std::vector<BasisEntry> basis = abelian_basis(g);
  const std::size_t k = basis.size();

  std::vector<std::uint32_t> orders(k);
  for (std::size_t i = 0; i < k; ++i) orders[i] = basis[i].order;
  AbelianGroupShape shape(orders, max_order);
  if (shape.order() != n)
    throw std::logic_error("represent_tables: basis does not span the group");

  // input index of each coordinate tuple, walked in mixed-radix order
  std::vector<elem_t> from_ring(n);
  {
    Coords c(k, 0);
    for (elem_t e = 0; e < n; ++e) {
      elem_t v = 0;
      for (std::size_t i = 0; i < k; ++i) v = g.sum(v, g.multiple(c[i], basis[i].gen));
      from_ring[e] = v;
      for (std::size_t i = k; i-- > 0;) {
        if (++c[i] < orders[i]) break;
        c[i] = 0;
      }
    }
  }
  std::vector<elem_t> to_ring(n, static_cast<elem_t>(n));
  for (elem_t e = 0; e < n; ++e) {
    if (to_ring[from_ring[e]] != n)
      throw std::logic_error("represent_tables: basis coordinates collide");
    to_ring[from_ring[e]] = e;
  }

  std::vector<Coords> prods(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      prods[i * k + j] = shape.coords_of(to_ring[mul(basis[i].gen, basis[j].gen)]);

  FiniteRing ring = validate_presentation(RingPresentation(std::move(shape), std::move(prods)),
                                          max_order);
  return RepresentedRing{std::move(ring), std::move(to_ring)};
}

}  // namespace ringcover
