#ifndef RINGCOVER_ERRORS_HPP
#define RINGCOVER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringcover {

/// Base class for all errors raised by the library.
struct RingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A structure constant violates the generator-order condition
/// m_i * c_{ij}^t = 0 (mod m_t) or m_j * c_{ij}^t = 0 (mod m_t).
struct IllDefinedError : RingError {
  IllDefinedError(std::size_t i, std::size_t j, std::size_t t, const std::string& what)
      : RingError(what), i(i), j(j), t(t) {}
  std::size_t i, j, t;  // 0-based positions into products[i][j], coordinate t
};

/// Generator associativity (g_i g_j) g_t == g_i (g_j g_t) fails.
struct NonAssociativeError : RingError {
  NonAssociativeError(std::size_t i, std::size_t j, std::size_t t, const std::string& what)
      : RingError(what), i(i), j(j), t(t) {}
  std::size_t i, j, t;  // the violating generator triple, 0-based
};

/// Requested group/ring exceeds the configured element-count limit.
struct TooLargeError : RingError {
  using RingError::RingError;
};

/// Census candidate space exceeds the exhaustive-search bounds.
struct SpaceTooLargeError : RingError {
  SpaceTooLargeError(long double raw_count, const std::string& what)
      : RingError(what), raw_count(raw_count) {}
  long double raw_count;
};

struct NotPrimeError : RingError {
  using RingError::RingError;
};

struct NotAnIdealError : RingError {
  using RingError::RingError;
};

struct NotASubgroupError : RingError {
  using RingError::RingError;
};

/// Malformed input files or arguments (distinct from mathematical rejection).
struct ParseError : RingError {
  using RingError::RingError;
};

}  // namespace ringcover

#endif
