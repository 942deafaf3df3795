#ifndef RINGCOVER_COVERING_HPP
#define RINGCOVER_COVERING_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ringcover/lattice.hpp"
#include "ringcover/ring.hpp"
#include "ringcover/subset.hpp"

namespace ringcover {

/// Natural number extended with infinity. Infinity is stored as the maximal
/// raw value, so the default ordering is already infinity-absorbing.
class ExtNat {
 public:
  constexpr ExtNat() = default;  // infinity
  constexpr explicit ExtNat(std::uint64_t v) : raw_(v) {}

  static constexpr ExtNat inf() { return ExtNat(); }

  constexpr bool is_inf() const { return raw_ == kInfRaw; }
  /// Finite value; meaningless when is_inf().
  constexpr std::uint64_t value() const { return raw_; }

  auto operator<=>(const ExtNat&) const = default;

  friend constexpr ExtNat min(ExtNat a, ExtNat b) { return a <= b ? a : b; }

 private:
  static constexpr std::uint64_t kInfRaw = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t raw_ = kInfRaw;
};

std::string to_string(ExtNat v);  // decimal digits, or "inf"

/// Set-cover instance: cover every universe element by candidate masks.
struct CoverProblem {
  SubsetMask universe;
  std::vector<SubsetMask> candidates;
};

struct CoverResult {
  ExtNat value;
  /// When finite: the minimal cover whose mask sequence (listed in
  /// ascending mask order) is lexicographically smallest.
  std::vector<SubsetMask> witness;
};

/// The five invariants, in the fixed order sigma_add, sigma, eta_left,
/// eta_right, eta (matching MemberClass order).
struct CoveringProfile {
  ExtNat sigma_add;
  ExtNat sigma;
  ExtNat eta_left;
  ExtNat eta_right;
  ExtNat eta;

  auto operator<=>(const CoveringProfile&) const = default;
};

struct ProfileResult {
  CoveringProfile profile;
  /// Indexed by MemberClass; entries for shortcut-derived infinities carry
  /// no witness.
  std::array<CoverResult, kMemberClassCount> covers;
};

/// Exact minimum set cover (branch and bound), with deterministic witness.
/// An empty universe is covered by zero candidates. Candidates are assumed
/// to be proper subgroups of the ambient group (each misses some universe
/// element, and no two of them cover), which makes three a sound floor.
CoverResult min_cover(const CoverProblem& problem);

/// Cover the ring by maximal proper members of the class.
CoverResult covering_number(const FiniteRing& ring, MemberClass cls);

/// All five invariants from a single lattice pass, with shortcuts: a cyclic
/// (or trivial) additive group forces every value to infinity, an identity
/// element forces the three ideal values to infinity.
CoveringProfile profile(const FiniteRing& ring);
ProfileResult profile_with_witnesses(const FiniteRing& ring);

}  // namespace ringcover

#endif
