#ifndef RINGCOVER_SUBSET_HPP
#define RINGCOVER_SUBSET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ringcover/shape.hpp"

namespace ringcover {

/// Bit-vector set over the element indices of a fixed ring.
/// Masks compare as multiword integers (highest word first), which gives the
/// deterministic total order used for sorting and witness tie-breaking.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(std::size_t universe_size);

  static SubsetMask full(std::size_t universe_size);

  std::size_t universe_size() const { return n_; }

  bool test(elem_t e) const { return (words_[e >> 6] >> (e & 63)) & 1; }
  void set(elem_t e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void reset(elem_t e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const;
  bool empty() const;

  /// Superset test: does this contain every element of other?
  bool contains(const SubsetMask& other) const;

  SubsetMask& operator|=(const SubsetMask& o);
  SubsetMask& operator&=(const SubsetMask& o);
  SubsetMask& subtract(const SubsetMask& o);  // set difference

  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }

  bool operator==(const SubsetMask& o) const { return n_ == o.n_ && words_ == o.words_; }
  std::strong_ordering operator<=>(const SubsetMask& o) const;

  /// Some element present in this but absent from other; n if none.
  elem_t first_in_difference(const SubsetMask& other) const;

  std::vector<elem_t> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
        f(static_cast<elem_t>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetMaskHash {
  std::size_t operator()(const SubsetMask& m) const { return m.hash(); }
};

}  // namespace ringcover

#endif
