#include "ringcover/subset.hpp"

#include <bit>

namespace ringcover {

SubsetMask::SubsetMask(std::size_t universe_size)
    : n_(universe_size), words_((universe_size + 63) / 64, 0) {}

SubsetMask SubsetMask::full(std::size_t universe_size) {
  SubsetMask m(universe_size);
  for (std::size_t e = 0; e < universe_size; ++e) m.set(static_cast<elem_t>(e));
  return m;
}

std::size_t SubsetMask::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool SubsetMask::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool SubsetMask::contains(const SubsetMask& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (other.words_[i] & ~words_[i]) return false;
  return true;
}

SubsetMask& SubsetMask::operator|=(const SubsetMask& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

SubsetMask& SubsetMask::operator&=(const SubsetMask& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

SubsetMask& SubsetMask::subtract(const SubsetMask& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

std::strong_ordering SubsetMask::operator<=>(const SubsetMask& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  for (std::size_t i = words_.size(); i-- > 0;)
    if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

elem_t SubsetMask::first_in_difference(const SubsetMask& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t diff = words_[i] & ~other.words_[i];
    if (diff) return static_cast<elem_t>(i * 64 + std::countr_zero(diff));
  }
  return static_cast<elem_t>(n_);
}

std::vector<elem_t> SubsetMask::elements() const {
  std::vector<elem_t> out;
  out.reserve(count());
  for_each([&](elem_t e) { out.push_back(e); });
  return out;
}

std::size_t SubsetMask::hash() const {
  std::size_t h = n_;
  for (auto w : words_) h = h * 0x9e3779b97f4a7c15ULL + w;
  return h;
}

}  // namespace ringcover
