#ifndef RINGCOVER_FAMILIES_HPP
#define RINGCOVER_FAMILIES_HPP

#include <cstdint>
#include <string>

#include "ringcover/ring.hpp"

namespace ringcover {

/// The four families with presentations, for any prime p:
///   R1: pa = pb = 0, all products zero                   (order p^2)
///   R2: a^2 = a, b^2 = b, ab = b, ba = a                 (order p^2)
///   R3: a^2 = a, b^2 = b, ab = a, ba = b                 (order p^2)
///   R4: a^2 = a, ba = b, ac = c, other products zero     (order p^3)
enum class Family { R1, R2, R3, R4 };

/// Small matrix (sub)rings, rebuilt on a structure-constant presentation by
/// closing the defining matrices under + and * :
///   X     order 4 inside M2(Z4), every product zero
///   Y, Z  order 4 inside M2(Z2)
///   V     order 4, the diagonal idempotents of M2(Z2); has identity
///   W     order 8, matrices [[a,0,0],[b,a,0],[c,0,a]] over Z2; has identity
///   M2Z2  all of M2(Z2), order 16
///   M2Z4  all of M2(Z4), order 256
enum class NamedRing { X, Y, Z, V, W, M2Z2, M2Z4 };

FiniteRing build_family(Family name, std::uint32_t p,
                        std::size_t max_order = kDefaultMaxOrder);

FiniteRing build_named(NamedRing name);

bool is_prime(std::uint32_t n);

Family family_from_string(const std::string& s);          // throws ParseError
NamedRing named_ring_from_string(const std::string& s);   // throws ParseError
std::string to_string(Family f);
std::string to_string(NamedRing n);

}  // namespace ringcover

#endif
