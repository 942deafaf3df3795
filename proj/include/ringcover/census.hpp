#ifndef RINGCOVER_CENSUS_HPP
#define RINGCOVER_CENSUS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ringcover/covering.hpp"
#include "ringcover/presentation.hpp"
#include "ringcover/ring.hpp"
#include "ringcover/shape.hpp"

namespace ringcover {

/// How the candidate space is traversed. Both modes produce the same set of
/// presentations; Pruned rejects partial assignments as soon as a completed
/// generator triple fails associativity, FullScan checks finished tables.
enum class EnumerationMode { Pruned, FullScan };

struct CensusSpec {
  AbelianGroupShape shape;
  std::size_t workers = 1;
  EnumerationMode mode = EnumerationMode::Pruned;
  bool allow_large = false;  // lift the order/space guards
};

/// Dedup key: two rings compare equal iff they are isomorphic. Built from
/// the invariant-factor shape of the additive group plus the minimal
/// multiplication table over all additive automorphisms.
struct CanonicalForm {
  std::string key;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const FiniteRing& r);

/// Raw candidate count for the shape, before associativity filtering.
long double census_space(const AbelianGroupShape& shape);

/// Every structure-constant assignment on the shape that is well-defined and
/// associative, without isomorphism dedup. Emission order depends on the
/// mode; the emitted set does not. Throws SpaceTooLargeError when the shape
/// exceeds the exhaustive bounds and allow_large is unset.
void enumerate_rings(const CensusSpec& spec,
                     const std::function<void(const RingPresentation&)>& emit);

struct CensusClass {
  RingPresentation rep;
  CoveringProfile profile;
};

struct CensusResult {
  std::vector<AbelianGroupShape> shapes;
  std::vector<CensusClass> classes;                  // deterministic order
  std::map<CoveringProfile, std::size_t> histogram;  // over all classes
};

/// Enumerate, deduplicate up to isomorphism, and profile every class on one
/// shape. Deterministic for any worker count.
CensusResult census(const CensusSpec& spec);

/// Merged census over every abelian group of the order (one shape per group
/// isomorphism class).
CensusResult census_order(std::size_t order, std::size_t workers = 1,
                          EnumerationMode mode = EnumerationMode::Pruned);

/// One shape per isomorphism class of abelian groups of the order: primary
/// decomposition, ascending primes, cyclic parts of each prime ascending.
std::vector<AbelianGroupShape> shapes_of_order(std::size_t order);

/// One table row: the four displayed invariants and the class count.
struct ProfileRow {
  ExtNat sigma, eta_left, eta_right, eta;
  std::size_t count = 0;
};

/// Histogram rows (classes merged over sigma_add), sorted ascending by the
/// displayed tuple; rows with infinite sigma are dropped unless all is set.
std::vector<ProfileRow> profile_table(const CensusResult& result, bool all = false);

}  // namespace ringcover

#endif
