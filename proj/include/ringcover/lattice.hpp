#ifndef RINGCOVER_LATTICE_HPP
#define RINGCOVER_LATTICE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ringcover/ring.hpp"
#include "ringcover/subset.hpp"

namespace ringcover {

/// Kinds of additive subgroup, ordered so that each later kind implies the
/// subring property: TwoSidedIdeal => LeftIdeal and RightIdeal => Subring
/// => Subgroup.
enum class MemberClass : std::uint8_t {
  Subgroup = 0,
  Subring = 1,
  LeftIdeal = 2,
  RightIdeal = 3,
  TwoSidedIdeal = 4,
};
inline constexpr std::size_t kMemberClassCount = 5;

std::string to_string(MemberClass cls);

/// One additive subgroup together with its classification and per-class
/// maximality among the proper members of that class.
struct SubgroupRecord {
  SubsetMask mask;
  std::array<bool, kMemberClassCount> flags{};
  std::array<bool, kMemberClassCount> maximal{};

  bool is(MemberClass cls) const { return flags[static_cast<std::size_t>(cls)]; }
  bool maximal_in(MemberClass cls) const {
    return maximal[static_cast<std::size_t>(cls)];
  }
};

/// Smallest additive subgroup containing the seed (always contains 0).
SubsetMask additive_closure(const FiniteRing& ring, const std::vector<elem_t>& seed);

/// All additive subgroups of the ring, each once, sorted by size then mask.
std::vector<SubsetMask> enumerate_subgroups(const FiniteRing& ring);

/// Classification flags of an additive subgroup; maximal flags are left
/// unset. Throws NotASubgroupError if the mask is not a subgroup.
SubgroupRecord classify_subset(const FiniteRing& ring, const SubsetMask& mask);

/// Smallest member of the given class containing the seed.
SubsetMask generated_member(const FiniteRing& ring, const std::vector<elem_t>& seed,
                            MemberClass cls);

/// Masks of the proper members of the class that are maximal under inclusion
/// among proper members, sorted by size then mask.
std::vector<SubsetMask> maximal_members(const std::vector<SubgroupRecord>& records,
                                        MemberClass cls);

/// Full lattice pass: enumerate, classify, and fill every maximal flag.
std::vector<SubgroupRecord> analyze_lattice(const FiniteRing& ring);

}  // namespace ringcover

#endif
