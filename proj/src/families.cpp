#include "ringcover/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "ringcover/errors.hpp"
#include "ringcover/rebuild.hpp"

namespace ringcover {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteRing build_family(Family name, std::uint32_t p, std::size_t max_order) {
  if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");

  const std::size_t k = (name == Family::R4) ? 3 : 2;
  AbelianGroupShape shape(std::vector<std::uint32_t>(k, p), max_order);
  std::vector<Coords> prods(k * k, Coords(k, 0));
  auto set = [&](std::size_t i, std::size_t j, std::size_t t) { prods[i * k + j][t] = 1; };

  switch (name) {
    case Family::R1:
      break;
    case Family::R2:
      set(0, 0, 0);  // a^2 = a
      set(1, 1, 1);  // b^2 = b
      set(0, 1, 1);  // ab = b
      set(1, 0, 0);  // ba = a
      break;
    case Family::R3:
      set(0, 0, 0);
      set(1, 1, 1);
      set(0, 1, 0);  // ab = a
      set(1, 0, 1);  // ba = b
      break;
    case Family::R4:
      set(0, 0, 0);  // a^2 = a
      set(1, 0, 1);  // ba = b
      set(0, 2, 2);  // ac = c
      break;
  }
  return validate_presentation(RingPresentation(std::move(shape), std::move(prods)), max_order);
}

namespace {

// Dense d x d matrix over Z_m, entries row-major. Lexicographic entry order
// fixes the element numbering of the closed ring.
struct SmallMatrix {
  std::uint8_t dim;
  std::uint8_t mod;
  std::array<std::uint8_t, 9> a{};

  friend SmallMatrix operator+(const SmallMatrix& x, const SmallMatrix& y) {
    SmallMatrix r{x.dim, x.mod, {}};
    for (std::size_t i = 0; i < std::size_t{x.dim} * x.dim; ++i)
      r.a[i] = static_cast<std::uint8_t>((x.a[i] + y.a[i]) % x.mod);
    return r;
  }
  friend SmallMatrix operator*(const SmallMatrix& x, const SmallMatrix& y) {
    SmallMatrix r{x.dim, x.mod, {}};
    for (std::size_t i = 0; i < x.dim; ++i)
      for (std::size_t j = 0; j < x.dim; ++j) {
        unsigned s = 0;
        for (std::size_t t = 0; t < x.dim; ++t) s += x.a[i * x.dim + t] * y.a[t * x.dim + j];
        r.a[i * x.dim + j] = static_cast<std::uint8_t>(s % x.mod);
      }
    return r;
  }
  auto operator<=>(const SmallMatrix&) const = default;
};

SmallMatrix make(std::uint8_t dim, std::uint8_t mod, std::initializer_list<std::uint8_t> entries) {
  SmallMatrix m{dim, mod, {}};
  std::copy(entries.begin(), entries.end(), m.a.begin());
  return m;
}

FiniteRing close_and_represent(std::vector<SmallMatrix> seed) {
  const SmallMatrix zero{seed.front().dim, seed.front().mod, {}};
  std::vector<SmallMatrix> elems{zero};
  for (const auto& m : seed)
    if (std::find(elems.begin(), elems.end(), m) == elems.end()) elems.push_back(m);

  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t sz = elems.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j)
        for (const SmallMatrix& c : {elems[i] + elems[j], elems[i] * elems[j]})
          if (std::find(elems.begin(), elems.end(), c) == elems.end()) {
            elems.push_back(c);
            grew = true;
          }
  }
  std::sort(elems.begin(), elems.end());

  std::map<SmallMatrix, elem_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<elem_t>(i);
  auto add = [&](elem_t x, elem_t y) { return index.at(elems[x] + elems[y]); };
  auto mul = [&](elem_t x, elem_t y) { return index.at(elems[x] * elems[y]); };
  return represent_tables(elems.size(), add, mul).ring;
}

}  // namespace

FiniteRing build_named(NamedRing name) {
  switch (name) {
    case NamedRing::X:
      return close_and_represent({make(2, 4, {2, 0, 0, 0}), make(2, 4, {0, 0, 0, 2})});
    case NamedRing::Y:
      return close_and_represent({make(2, 2, {1, 0, 0, 0}), make(2, 2, {0, 1, 0, 0})});
    case NamedRing::Z:
      return close_and_represent({make(2, 2, {0, 1, 0, 0}), make(2, 2, {0, 0, 0, 1})});
    case NamedRing::V:
      return close_and_represent({make(2, 2, {1, 0, 0, 0}), make(2, 2, {0, 0, 0, 1})});
    case NamedRing::W:
      return close_and_represent({make(3, 2, {1, 0, 0, 0, 1, 0, 0, 0, 1}),
                                  make(3, 2, {0, 0, 0, 1, 0, 0, 0, 0, 0}),
                                  make(3, 2, {0, 0, 0, 0, 0, 0, 1, 0, 0})});
    case NamedRing::M2Z2:
      return close_and_represent({make(2, 2, {1, 0, 0, 0}), make(2, 2, {0, 1, 0, 0}),
                                  make(2, 2, {0, 0, 1, 0}), make(2, 2, {0, 0, 0, 1})});
    case NamedRing::M2Z4:
      return close_and_represent({make(2, 4, {1, 0, 0, 0}), make(2, 4, {0, 1, 0, 0}),
                                  make(2, 4, {0, 0, 1, 0}), make(2, 4, {0, 0, 0, 1})});
  }
  throw ParseError("unknown named ring");
}

Family family_from_string(const std::string& s) {
  if (s == "R1") return Family::R1;
  if (s == "R2") return Family::R2;
  if (s == "R3") return Family::R3;
  if (s == "R4") return Family::R4;
  throw ParseError("unknown family '" + s + "' (expected R1, R2, R3, or R4)");
}

NamedRing named_ring_from_string(const std::string& s) {
  if (s == "X") return NamedRing::X;
  if (s == "Y") return NamedRing::Y;
  if (s == "Z") return NamedRing::Z;
  if (s == "V") return NamedRing::V;
  if (s == "W") return NamedRing::W;
  if (s == "M2Z2") return NamedRing::M2Z2;
  if (s == "M2Z4") return NamedRing::M2Z4;
  throw ParseError("unknown named ring '" + s + "' (expected X, Y, Z, V, W, M2Z2, or M2Z4)");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::R1: return "R1";
    case Family::R2: return "R2";
    case Family::R3: return "R3";
    case Family::R4: return "R4";
  }
  return "?";
}

std::string to_string(NamedRing n) {
  switch (n) {
    case NamedRing::X: return "X";
    case NamedRing::Y: return "Y";
    case NamedRing::Z: return "Z";
    case NamedRing::V: return "V";
    case NamedRing::W: return "W";
    case NamedRing::M2Z2: return "M2Z2";
    case NamedRing::M2Z4: return "M2Z4";
  }
  return "?";
}

}  // namespace ringcover
