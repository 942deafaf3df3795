#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "ringcover/census.hpp"
#include "ringcover/errors.hpp"
#include "ringcover/families.hpp"
#include "ringcover/iso.hpp"
#include "ringcover/lattice.hpp"
#include "ringcover/quotient.hpp"
#include "ringcover/ring.hpp"

using namespace ringcover;

namespace {

FiniteRing zero_ring(std::vector<std::uint32_t> orders) {
  return validate_presentation(RingPresentation::zero(AbelianGroupShape(std::move(orders))));
}

}  // namespace

TEST_CASE("isomorphism witnesses are genuine isomorphisms") {
  std::mt19937 rng(2024);
  const std::vector<FiniteRing> rings = {build_family(Family::R2, 2),
                                         build_family(Family::R4, 3),
                                         build_named(NamedRing::W)};
  for (const FiniteRing& r : rings) {
    const FiniteRing sc = test::scramble(r, rng);
    const auto w = is_isomorphic(r, sc);
    REQUIRE(w.has_value());
    CHECK(test::valid_witness(r, sc, w->map));
    // and backwards
    const auto back = is_isomorphic(sc, r);
    REQUIRE(back.has_value());
    CHECK(test::valid_witness(sc, r, back->map));
  }
}

TEST_CASE("isomorphism is reflexive with the identity available") {
  const FiniteRing r = build_family(Family::R4, 2);
  const auto w = is_isomorphic(r, r);
  REQUIRE(w.has_value());
  CHECK(test::valid_witness(r, r, w->map));
}

TEST_CASE("non-isomorphic pairs are rejected") {
  CHECK_FALSE(is_isomorphic(build_family(Family::R1, 2), build_family(Family::R2, 2)).has_value());
  CHECK_FALSE(is_isomorphic(build_family(Family::R2, 2), build_family(Family::R3, 2)).has_value());
  // same order, different additive groups
  CHECK_FALSE(is_isomorphic(zero_ring({4}), zero_ring({2, 2})).has_value());
  // different orders
  CHECK_FALSE(is_isomorphic(zero_ring({4}), zero_ring({2, 2, 2})).has_value());
}

TEST_CASE("additive automorphism group sizes") {
  CHECK(additive_automorphisms(AbelianGroupShape({2, 2})).size() == 6);     // GL(2,2)
  CHECK(additive_automorphisms(AbelianGroupShape({3, 3})).size() == 48);    // GL(2,3)
  CHECK(additive_automorphisms(AbelianGroupShape({2, 2, 2})).size() == 168);  // GL(3,2)
  CHECK(additive_automorphisms(AbelianGroupShape({4})).size() == 2);
  CHECK(additive_automorphisms(AbelianGroupShape({2, 4})).size() == 8);
  CHECK(additive_automorphisms(AbelianGroupShape({5})).size() == 4);
}

TEST_CASE("every reported automorphism preserves addition and is a bijection") {
  const AbelianGroupShape s({2, 4});
  const FiniteRing r = zero_ring({2, 4});
  for (const auto& a : additive_automorphisms(s)) CHECK(test::valid_witness(r, r, a));
}

TEST_CASE("factor ring by the zero ideal is the ring itself") {
  const FiniteRing r = build_family(Family::R2, 3);
  SubsetMask zero(r.size());
  zero.set(0);
  const FactorRing q = factor_ring(r, zero);
  CHECK(q.ring.size() == r.size());
  CHECK(is_isomorphic(q.ring, r).has_value());
  CHECK(test::valid_witness(r, q.ring, q.projection));
}

TEST_CASE("factor ring by the whole ring is trivial") {
  const FiniteRing r = build_family(Family::R4, 2);
  const FactorRing q = factor_ring(r, SubsetMask::full(r.size()));
  CHECK(q.ring.size() == 1);
  for (elem_t x = 0; x < r.size(); ++x) CHECK(q.projection[x] == 0);
}

TEST_CASE("quotients of R4 recover R2 and R3") {
  for (std::uint32_t p : {2u, 3u}) {
    const FiniteRing r4 = build_family(Family::R4, p);
    const elem_t b = r4.shape().generator(1), c = r4.shape().generator(2);
    const FactorRing qb = factor_ring(r4, generated_member(r4, {b}, MemberClass::TwoSidedIdeal));
    CHECK(qb.ring.size() == p * p);
    CHECK(is_isomorphic(qb.ring, build_family(Family::R2, p)).has_value());
    const FactorRing qc = factor_ring(r4, generated_member(r4, {c}, MemberClass::TwoSidedIdeal));
    CHECK(is_isomorphic(qc.ring, build_family(Family::R3, p)).has_value());
  }
}

TEST_CASE("the projection of a factor ring is a surjective homomorphism") {
  const FiniteRing r = build_family(Family::R4, 2);
  const SubsetMask ideal = generated_member(r, {r.shape().generator(1)},
                                            MemberClass::TwoSidedIdeal);
  const FactorRing q = factor_ring(r, ideal);
  std::set<elem_t> image;
  for (elem_t x = 0; x < r.size(); ++x) {
    image.insert(q.projection[x]);
    for (elem_t y = 0; y < r.size(); ++y) {
      CHECK(q.projection[r.add(x, y)] == q.ring.add(q.projection[x], q.projection[y]));
      CHECK(q.projection[r.mul(x, y)] == q.ring.mul(q.projection[x], q.projection[y]));
    }
  }
  CHECK(image.size() == q.ring.size());
  // the kernel is exactly the ideal
  for (elem_t x = 0; x < r.size(); ++x) CHECK((q.projection[x] == 0) == ideal.test(x));
}

TEST_CASE("factor_ring rejects non-ideals and non-subgroups") {
  const FiniteRing r2 = build_family(Family::R2, 2);
  const elem_t a = r2.shape().generator(0);
  // <a> is a left ideal but not two-sided
  CHECK_THROWS_AS(factor_ring(r2, additive_closure(r2, {a})), NotAnIdealError);
  SubsetMask bad(4);
  bad.set(0);
  bad.set(a);
  bad.set(r2.shape().generator(1));  // {0, a, b}: not additively closed
  CHECK_THROWS_AS(factor_ring(r2, bad), NotASubgroupError);
}

TEST_CASE("canonical forms match exactly for isomorphic rings") {
  CHECK(canonical_form(build_named(NamedRing::Y)) ==
        canonical_form(build_family(Family::R2, 2)));
  CHECK(canonical_form(build_named(NamedRing::Z)) ==
        canonical_form(build_family(Family::R3, 2)));
  CHECK(canonical_form(build_named(NamedRing::X)) ==
        canonical_form(build_family(Family::R1, 2)));
  CHECK(canonical_form(build_family(Family::R2, 2)) !=
        canonical_form(build_family(Family::R3, 2)));
  // determinism across repeated calls
  CHECK(canonical_form(build_family(Family::R4, 2)) == canonical_form(build_family(Family::R4, 2)));
}

TEST_CASE("canonical form equality agrees with the isomorphism search on random pairs") {
  // pool: every ring structure on C2 x C2, plus scrambles of larger rings
  std::vector<RingPresentation> pool;
  enumerate_rings(CensusSpec{AbelianGroupShape({2, 2})},
                  [&](const RingPresentation& p) { pool.push_back(p); });
  REQUIRE(pool.size() > 10);

  std::mt19937 rng(777);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t isomorphic_pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteRing a = validate_presentation(pool[pick(rng)]);
    const FiniteRing b = validate_presentation(pool[pick(rng)]);
    const bool same_key = canonical_form(a) == canonical_form(b);
    const auto witness = is_isomorphic(a, b);
    CHECK(same_key == witness.has_value());
    if (witness.has_value()) {
      ++isomorphic_pairs;
      CHECK(test::valid_witness(a, b, witness->map));
    }
  }
  CHECK(isomorphic_pairs > 0);  // the experiment actually exercised both branches
}

TEST_CASE("canonical form is invariant under scrambling") {
  std::mt19937 rng(31);
  for (auto f : {Family::R2, Family::R3, Family::R4})
    for (int i = 0; i < 5; ++i) {
      const FiniteRing r = build_family(f, 2);
      CHECK(canonical_form(test::scramble(r, rng)) == canonical_form(r));
    }
}
