#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ringcover/census.hpp"
#include "ringcover/errors.hpp"
#include "ringcover/families.hpp"
#include "ringcover/iso.hpp"
#include "ringcover/ring.hpp"

using namespace ringcover;

namespace {

std::vector<RingPresentation> collect(const CensusSpec& spec) {
  std::vector<RingPresentation> out;
  enumerate_rings(spec, [&](const RingPresentation& p) { out.push_back(p); });
  return out;
}

std::set<std::vector<Coords>> product_set(const std::vector<RingPresentation>& v) {
  std::set<std::vector<Coords>> out;
  for (const auto& p : v) out.insert(p.products);
  return out;
}

bool histograms_equal(const CensusResult& a, const CensusResult& b) {
  return a.histogram == b.histogram && a.classes.size() == b.classes.size();
}

}  // namespace

TEST_CASE("raw candidate space sizes") {
  CHECK(census_space(AbelianGroupShape({2, 2})) == 256.0L);
  CHECK(census_space(AbelianGroupShape({2, 4})) == 512.0L);
  CHECK(census_space(AbelianGroupShape({3, 3})) == 6561.0L);
  CHECK(census_space(AbelianGroupShape({2, 2, 2})) == 134217728.0L);  // 8^9
  CHECK(census_space(AbelianGroupShape({8})) == 8.0L);
  CHECK(census_space(AbelianGroupShape({9})) == 9.0L);
}

TEST_CASE("shapes of an order cover every abelian group once") {
  auto as_orders = [](const std::vector<AbelianGroupShape>& v) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& s : v) out.push_back(s.orders());
    return out;
  };
  using VV = std::vector<std::vector<std::uint32_t>>;
  CHECK(as_orders(shapes_of_order(4)) == VV{{4}, {2, 2}});
  CHECK(as_orders(shapes_of_order(8)) == VV{{8}, {2, 4}, {2, 2, 2}});
  CHECK(as_orders(shapes_of_order(9)) == VV{{9}, {3, 3}});
  CHECK(as_orders(shapes_of_order(6)) == VV{{2, 3}});
  CHECK(as_orders(shapes_of_order(12)) == VV{{4, 3}, {2, 2, 3}});
  CHECK(shapes_of_order(1).size() == 1);
  CHECK(shapes_of_order(1)[0].order() == 1);
  CHECK(shapes_of_order(7).size() == 1);
}

TEST_CASE("enumeration on C2 x C2 matches the raw 256-candidate filter") {
  // oracle: try all 4^4 structure-constant assignments through the validator
  std::vector<RingPresentation> valid;
  const AbelianGroupShape shape({2, 2});
  for (int bits = 0; bits < 256; ++bits) {
    std::vector<Coords> prods(4);
    for (int slot = 0; slot < 4; ++slot) {
      const int v = (bits >> (2 * slot)) & 3;
      prods[slot] = {static_cast<std::uint32_t>(v >> 1), static_cast<std::uint32_t>(v & 1)};
    }
    try {
      validate_presentation(RingPresentation(shape, prods));
      valid.emplace_back(shape, prods);
    } catch (const RingError&) {
    }
  }

  const auto pruned = collect(CensusSpec{shape});
  CHECK(pruned.size() == valid.size());
  CHECK(product_set(pruned) == product_set(valid));

  // the zero table and both idempotent exchange tables are present
  const auto have = product_set(pruned);
  const std::size_t k = 2;
  auto tab = [&](Coords aa, Coords ab, Coords ba, Coords bb) {
    return std::vector<Coords>{aa, ab, ba, bb};
  };
  (void)k;
  CHECK(have.count(tab({0, 0}, {0, 0}, {0, 0}, {0, 0})) == 1);  // zero ring
  CHECK(have.count(tab({1, 0}, {0, 1}, {1, 0}, {0, 1})) == 1);  // ab = b, ba = a
  CHECK(have.count(tab({1, 0}, {1, 0}, {0, 1}, {0, 1})) == 1);  // ab = a, ba = b
  CHECK(have.count(tab({1, 0}, {0, 0}, {0, 0}, {0, 1})) == 1);  // diagonal idempotents
}

TEST_CASE("enumeration modes emit the same set") {
  for (auto orders : std::vector<std::vector<std::uint32_t>>{{2, 2}, {2, 4}, {3, 3}, {8}}) {
    const AbelianGroupShape shape(orders);
    const auto pruned = collect({shape, 1, EnumerationMode::Pruned});
    const auto full = collect({shape, 1, EnumerationMode::FullScan});
    CHECK(pruned.size() == full.size());
    CHECK(product_set(pruned) == product_set(full));
  }
}

TEST_CASE("a cyclic shape has one candidate per choice of g*g, all associative") {
  const auto rings = collect(CensusSpec{AbelianGroupShape({8})});
  CHECK(rings.size() == 8);
  for (const auto& p : rings) CHECK_NOTHROW(validate_presentation(p));
}

TEST_CASE("census space guards") {
  CHECK_THROWS_AS(collect(CensusSpec{AbelianGroupShape({3, 3, 3})}), SpaceTooLargeError);
  CHECK_THROWS_AS(census(CensusSpec{AbelianGroupShape({5, 5})}), SpaceTooLargeError);
  try {
    census(CensusSpec{AbelianGroupShape({3, 3, 3})});
    FAIL("expected SpaceTooLargeError");
  } catch (const SpaceTooLargeError& e) {
    CHECK(e.raw_count > 1e9L);
  }
}

TEST_CASE("census merges classes deterministically across worker counts") {
  const CensusResult one = census({AbelianGroupShape({2, 2, 2}), 1});
  const CensusResult four = census({AbelianGroupShape({2, 2, 2}), 4});
  CHECK(histograms_equal(one, four));
  REQUIRE(one.classes.size() == four.classes.size());
  for (std::size_t i = 0; i < one.classes.size(); ++i) {
    CHECK(one.classes[i].rep == four.classes[i].rep);
    CHECK(one.classes[i].profile == four.classes[i].profile);
  }
}

TEST_CASE("census is mode-independent") {
  const CensusResult pruned = census({AbelianGroupShape({2, 4}), 1, EnumerationMode::Pruned});
  const CensusResult full = census({AbelianGroupShape({2, 4}), 1, EnumerationMode::FullScan});
  CHECK(histograms_equal(pruned, full));
  for (std::size_t i = 0; i < pruned.classes.size(); ++i)
    CHECK(pruned.classes[i].rep == full.classes[i].rep);
}

TEST_CASE("census class counts for small orders") {
  // regression values, cross-checked by running both enumeration modes
  const std::size_t expected[] = {0, 1, 2, 2, 11, 2, 4, 2, 52, 11};
  for (std::size_t order = 1; order <= 9; ++order) {
    const CensusResult pruned = census_order(order, 1, EnumerationMode::Pruned);
    CHECK(pruned.classes.size() == expected[order]);
    if (order != 8) {  // the full scan of 8^9 candidates is left to the pruned mode
      const CensusResult full = census_order(order, 1, EnumerationMode::FullScan);
      CHECK(histograms_equal(pruned, full));
    }
  }
}

TEST_CASE("census representatives are valid and pairwise non-isomorphic") {
  for (std::size_t order : {4, 9}) {
    const CensusResult res = census_order(order);
    std::vector<FiniteRing> rings;
    for (const auto& cls : res.classes) rings.push_back(validate_presentation(cls.rep));
    for (std::size_t i = 0; i < rings.size(); ++i)
      for (std::size_t j = i + 1; j < rings.size(); ++j)
        CHECK_FALSE(is_isomorphic(rings[i], rings[j]).has_value());
  }
  // order 8: sampled pairs
  const CensusResult res8 = census_order(8);
  REQUIRE(res8.classes.size() == 52);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, res8.classes.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const FiniteRing a = validate_presentation(res8.classes[i].rep);
    const FiniteRing b = validate_presentation(res8.classes[j].rep);
    CHECK_FALSE(is_isomorphic(a, b).has_value());
  }
}

TEST_CASE("histogram counts sum to the class count") {
  for (std::size_t order : {4, 8, 9}) {
    const CensusResult res = census_order(order);
    std::size_t total = 0;
    for (const auto& [prof, count] : res.histogram) total += count;
    CHECK(total == res.classes.size());
  }
}

TEST_CASE("order-4 coverable classes match the published profiles") {
  const CensusResult res = census_order(4);
  CHECK(res.classes.size() == 11);
  const auto rows = profile_table(res);
  REQUIRE(rows.size() == 4);
  const ExtNat three(3), inf = ExtNat::inf();
  CHECK(rows[0].sigma == three);
  CHECK(rows[0].eta_left == three);
  CHECK(rows[0].eta_right == three);
  CHECK(rows[0].eta == three);
  CHECK(rows[0].count == 1);
  CHECK(rows[1].eta_left == three);
  CHECK(rows[1].eta_right == inf);
  CHECK(rows[1].count == 1);
  CHECK(rows[2].eta_left == inf);
  CHECK(rows[2].eta_right == three);
  CHECK(rows[2].count == 1);
  CHECK(rows[3].eta_left == inf);
  CHECK(rows[3].eta_right == inf);
  CHECK(rows[3].eta == inf);
  CHECK(rows[3].count == 1);
}

TEST_CASE("order-9 coverable classes match the published profiles") {
  const CensusResult res = census_order(9);
  CHECK(res.classes.size() == 11);
  const auto rows = profile_table(res);
  REQUIRE(rows.size() == 3);
  const ExtNat four(4), inf = ExtNat::inf();
  CHECK((rows[0].sigma == four && rows[0].eta_left == four && rows[0].eta_right == four &&
         rows[0].eta == four && rows[0].count == 1));
  CHECK((rows[1].sigma == four && rows[1].eta_left == four && rows[1].eta_right == inf &&
         rows[1].eta == inf && rows[1].count == 1));
  CHECK((rows[2].sigma == four && rows[2].eta_left == inf && rows[2].eta_right == four &&
         rows[2].eta == inf && rows[2].count == 1));
  // no coverable class has every ideal value infinite at order 9
  for (const auto& row : rows) CHECK_FALSE((row.eta_left.is_inf() && row.eta_right.is_inf()));
}

TEST_CASE("order-8 coverable classes match the published counts") {
  const CensusResult res = census_order(8);
  CHECK(res.classes.size() == 52);
  const auto rows = profile_table(res);
  REQUIRE(rows.size() == 5);
  const ExtNat three(3), inf = ExtNat::inf();
  struct Row {
    ExtNat l, r, e;
    std::size_t count;
  };
  const Row want[5] = {{three, three, three, 17},
                       {three, three, inf, 1},
                       {three, inf, inf, 5},
                       {inf, three, inf, 5},
                       {inf, inf, inf, 6}};
  for (int i = 0; i < 5; ++i) {
    CHECK(rows[i].sigma == three);
    CHECK(rows[i].eta_left == want[i].l);
    CHECK(rows[i].eta_right == want[i].r);
    CHECK(rows[i].eta == want[i].e);
    CHECK(rows[i].count == want[i].count);
  }
}

TEST_CASE("profile_table drops non-coverable classes unless asked") {
  const CensusResult res = census({AbelianGroupShape({5}), 1});
  CHECK(profile_table(res).empty());  // cyclic additive group: nothing coverable
  const auto all = profile_table(res, true);
  REQUIRE(all.size() == 1);
  CHECK(all[0].sigma.is_inf());
  CHECK(all[0].count == res.classes.size());
}

TEST_CASE("coverable classes at prime-square order attain sigma_add = p + 1") {
  for (std::size_t order : {4, 9}) {
    const std::uint32_t p = order == 4 ? 2 : 3;
    const CensusResult res = census_order(order);
    for (const auto& cls : res.classes)
      if (!cls.profile.sigma.is_inf()) CHECK(cls.profile.sigma_add == ExtNat(p + 1));
  }
}

TEST_CASE("canonical dedup keeps one representative per isomorphism class") {
  // every ring on C2 x C2 maps to a census representative with equal key
  const AbelianGroupShape shape({2, 2});
  const CensusResult res = census(CensusSpec{shape});
  std::set<std::string> keys;
  for (const auto& cls : res.classes)
    keys.insert(canonical_form(validate_presentation(cls.rep)).key);
  CHECK(keys.size() == res.classes.size());
  enumerate_rings(CensusSpec{shape}, [&](const RingPresentation& p) {
    CHECK(keys.count(canonical_form(validate_presentation(p)).key) == 1);
  });
}
