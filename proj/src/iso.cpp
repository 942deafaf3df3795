#include "ringcover/iso.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ringcover {

namespace {

constexpr elem_t kUnset = ~elem_t{0};

// Backtracking search over generator images of the domain shape. The partial
// map always covers the span of the generators assigned so far; assigning
// g_i extends it by every c*g_i + s with s in the old span, failing fast on
// an injectivity clash. Multiplication constraints are verified as soon as
// both factors and the product lie inside the span.
class IsoSearch {
 public:
  IsoSearch(const FiniteRing& a, const FiniteRing& b, bool check_mult)
      : a_(a), b_(b), check_mult_(check_mult), n_(a.size()) {}

  // First complete isomorphism in search order, or empty.
  std::optional<std::vector<elem_t>> first() {
    run_all_ = false;
    init();
    dfs(0);
    return found_ ? std::optional(map_) : std::nullopt;
  }

  // All complete isomorphisms, in search order.
  std::vector<std::vector<elem_t>> all() {
    run_all_ = true;
    init();
    dfs(0);
    return collected_;
  }

 private:
  void init() {
    const auto& orders = a_.shape().orders();
    k_ = orders.size();
    map_.assign(n_, kUnset);
    used_.assign(n_, false);
    map_[0] = 0;
    used_[0] = true;
    span_ = {0};
    gen_img_.assign(k_, kUnset);
    found_ = false;
    collected_.clear();

    // Candidate images of g_i: codomain elements of matching additive order.
    by_order_.clear();
    for (elem_t y = 0; y < n_; ++y) by_order_[b_.additive_order(y)].push_back(y);
  }

  void dfs(std::size_t depth) {
    if (found_ && !run_all_) return;
    if (depth == k_) {
      if (run_all_) {
        collected_.push_back(map_);
      } else {
        found_ = true;
      }
      return;
    }
    const std::uint32_t m = a_.shape().orders()[depth];
    auto it = by_order_.find(m);
    if (it == by_order_.end()) return;
    for (elem_t y : it->second) {
      if (used_[y]) continue;
      if (assign(depth, y)) {
        dfs(depth + 1);
        if (found_ && !run_all_) return;
      }
      rollback(depth);
    }
  }

  // Extend the map by g_depth -> y; returns false on any clash (rollback via
  // the recorded trail either way).
  bool assign(std::size_t depth, elem_t y) {
    const elem_t g = a_.shape().generator(depth);
    const std::uint32_t m = a_.shape().orders()[depth];
    trail_mark_.push_back(trail_.size());
    span_mark_.push_back(span_.size());
    gen_img_[depth] = y;

    const std::size_t old_span = span_.size();
    elem_t cg = 0, cy = 0;  // c*g and c*y, stepped additively
    for (std::uint32_t c = 1; c < m; ++c) {
      cg = a_.add(cg, g);
      cy = b_.add(cy, y);
      for (std::size_t s = 0; s < old_span; ++s) {
        const elem_t x = a_.add(cg, span_[s]);
        const elem_t fx = b_.add(cy, map_[span_[s]]);
        if (used_[fx]) return false;
        map_[x] = fx;
        used_[fx] = true;
        trail_.push_back({x, fx});
        span_.push_back(x);
      }
    }

    if (check_mult_) {
      for (std::size_t i = 0; i <= depth; ++i)
        for (std::size_t j = 0; j <= depth; ++j) {
          const elem_t gi = a_.shape().generator(i);
          const elem_t gj = a_.shape().generator(j);
          const elem_t p = a_.mul(gi, gj);
          if (map_[p] == kUnset) continue;  // settled at a later depth
          if (map_[p] != b_.mul(gen_img_[i], gen_img_[j])) return false;
        }
    }
    return true;
  }

  void rollback(std::size_t depth) {
    const std::size_t tm = trail_mark_.back();
    trail_mark_.pop_back();
    while (trail_.size() > tm) {
      const auto [x, fx] = trail_.back();
      trail_.pop_back();
      map_[x] = kUnset;
      used_[fx] = false;
    }
    span_.resize(span_mark_.back());
    span_mark_.pop_back();
    gen_img_[depth] = kUnset;
  }

  const FiniteRing& a_;
  const FiniteRing& b_;
  bool check_mult_;
  std::size_t n_, k_ = 0;
  bool run_all_ = false, found_ = false;

  std::vector<elem_t> map_;
  std::vector<char> used_;
  std::vector<elem_t> span_;
  std::vector<elem_t> gen_img_;
  std::vector<std::pair<elem_t, elem_t>> trail_;
  std::vector<std::size_t> trail_mark_, span_mark_;
  std::map<std::uint32_t, std::vector<elem_t>> by_order_;
  std::vector<std::vector<elem_t>> collected_;
};

// Isomorphism-invariant fingerprint: sorted (additive order of x, additive
// order of x*x, x*x == x) triples.
std::vector<std::array<std::uint32_t, 3>> fingerprint(const FiniteRing& r) {
  std::vector<std::array<std::uint32_t, 3>> fp;
  fp.reserve(r.size());
  for (elem_t x = 0; x < r.size(); ++x) {
    const elem_t sq = r.mul(x, x);
    fp.push_back({r.additive_order(x), r.additive_order(sq), sq == x ? 1u : 0u});
  }
  std::sort(fp.begin(), fp.end());
  return fp;
}

}  // namespace

std::optional<IsoWitness> is_isomorphic(const FiniteRing& a, const FiniteRing& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (fingerprint(a) != fingerprint(b)) return std::nullopt;

  auto map = IsoSearch(a, b, /*check_mult=*/true).first();
  if (!map) return std::nullopt;
  return IsoWitness{std::move(*map)};
}

std::vector<std::vector<elem_t>> additive_automorphisms(const AbelianGroupShape& shape) {
  const FiniteRing zero = validate_presentation(RingPresentation::zero(shape), shape.order());
  return IsoSearch(zero, zero, /*check_mult=*/false).all();
}

}  // namespace ringcover
