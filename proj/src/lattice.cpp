#include "ringcover/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "ringcover/errors.hpp"

namespace ringcover {

namespace {

// Close the marked set under addition in place. Newly produced sums are
// appended to the work vector, so every pair is eventually combined.
void close_additively(const FiniteRing& ring, SubsetMask& mask) {
  std::vector<elem_t> elems = mask.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const elem_t s = ring.add(elems[i], elems[j]);
      if (!mask.test(s)) {
        mask.set(s);
        elems.push_back(s);
      }
    }
}

bool is_subgroup(const FiniteRing& ring, const SubsetMask& mask) {
  if (mask.universe_size() != ring.size() || !mask.test(ring.zero())) return false;
  const std::vector<elem_t> elems = mask.elements();
  for (elem_t x : elems)
    for (elem_t y : elems)
      if (!mask.test(ring.add(x, y))) return false;
  return true;
}

void sort_masks(std::vector<SubsetMask>& masks) {
  std::sort(masks.begin(), masks.end(), [](const SubsetMask& a, const SubsetMask& b) {
    const std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
}

}  // namespace

std::string to_string(MemberClass cls) {
  switch (cls) {
    case MemberClass::Subgroup: return "subgroup";
    case MemberClass::Subring: return "subring";
    case MemberClass::LeftIdeal: return "left-ideal";
    case MemberClass::RightIdeal: return "right-ideal";
    case MemberClass::TwoSidedIdeal: return "two-sided-ideal";
  }
  return "?";
}

SubsetMask additive_closure(const FiniteRing& ring, const std::vector<elem_t>& seed) {
  SubsetMask mask(ring.size());
  mask.set(ring.zero());
  for (elem_t e : seed) mask.set(e);
  close_additively(ring, mask);
  return mask;
}

std::vector<SubsetMask> enumerate_subgroups(const FiniteRing& ring) {
  const std::size_t n = ring.size();
  std::unordered_set<SubsetMask, SubsetMaskHash> seen;
  std::vector<SubsetMask> queue;

  for (elem_t x = 0; x < n; ++x) {
    SubsetMask cyc = additive_closure(ring, {x});
    if (seen.insert(cyc).second) queue.push_back(std::move(cyc));
  }

  // Join-closure: combine every discovered pair until no new subgroup appears.
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (queue[i].contains(queue[j]) || queue[j].contains(queue[i])) continue;
      SubsetMask join = queue[i] | queue[j];
      close_additively(ring, join);
      if (seen.insert(join).second) queue.push_back(std::move(join));
    }

  sort_masks(queue);
  return queue;
}

SubgroupRecord classify_subset(const FiniteRing& ring, const SubsetMask& mask) {
  if (!is_subgroup(ring, mask))
    throw NotASubgroupError("subset of size " + std::to_string(mask.count()) +
                            " is not an additive subgroup");

  SubgroupRecord rec;
  rec.mask = mask;
  rec.flags[static_cast<std::size_t>(MemberClass::Subgroup)] = true;

  const std::vector<elem_t> elems = mask.elements();
  const std::size_t n = ring.size();

  bool subring = true;
  for (std::size_t i = 0; subring && i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (!mask.test(ring.mul(elems[i], elems[j]))) {
        subring = false;
        break;
      }

  bool left = true;  // r*s stays inside for every r in R
  for (elem_t r = 0; left && r < n; ++r)
    for (elem_t s : elems)
      if (!mask.test(ring.mul(r, s))) {
        left = false;
        break;
      }

  bool right = true;  // s*r stays inside for every r in R
  for (elem_t r = 0; right && r < n; ++r)
    for (elem_t s : elems)
      if (!mask.test(ring.mul(s, r))) {
        right = false;
        break;
      }

  rec.flags[static_cast<std::size_t>(MemberClass::Subring)] = subring;
  rec.flags[static_cast<std::size_t>(MemberClass::LeftIdeal)] = left;
  rec.flags[static_cast<std::size_t>(MemberClass::RightIdeal)] = right;
  rec.flags[static_cast<std::size_t>(MemberClass::TwoSidedIdeal)] = left && right;
  return rec;
}

SubsetMask generated_member(const FiniteRing& ring, const std::vector<elem_t>& seed,
                            MemberClass cls) {
  SubsetMask mask = additive_closure(ring, seed);
  const std::size_t n = ring.size();
  const bool prod = cls != MemberClass::Subgroup;
  const bool left = cls == MemberClass::LeftIdeal || cls == MemberClass::TwoSidedIdeal;
  const bool right = cls == MemberClass::RightIdeal || cls == MemberClass::TwoSidedIdeal;

  for (;;) {
    std::vector<elem_t> fresh;
    const std::vector<elem_t> elems = mask.elements();
    auto need = [&](elem_t e) {
      if (!mask.test(e)) {
        mask.set(e);
        fresh.push_back(e);
      }
    };
    if (prod)
      for (elem_t x : elems)
        for (elem_t y : elems) need(ring.mul(x, y));
    if (left)
      for (elem_t r = 0; r < n; ++r)
        for (elem_t s : elems) need(ring.mul(r, s));
    if (right)
      for (elem_t r = 0; r < n; ++r)
        for (elem_t s : elems) need(ring.mul(s, r));
    if (fresh.empty()) return mask;
    close_additively(ring, mask);
  }
}

std::vector<SubsetMask> maximal_members(const std::vector<SubgroupRecord>& records,
                                        MemberClass cls) {
  std::vector<const SubsetMask*> proper;
  for (const auto& rec : records)
    if (rec.is(cls) && rec.mask.count() < rec.mask.universe_size())
      proper.push_back(&rec.mask);

  std::vector<SubsetMask> out;
  for (const SubsetMask* m : proper) {
    bool covered = false;
    for (const SubsetMask* other : proper)
      if (other != m && other->contains(*m) && !(*other == *m)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(*m);
  }
  sort_masks(out);
  return out;
}

std::vector<SubgroupRecord> analyze_lattice(const FiniteRing& ring) {
  std::vector<SubgroupRecord> records;
  for (const SubsetMask& mask : enumerate_subgroups(ring))
    records.push_back(classify_subset(ring, mask));

  for (std::size_t c = 0; c < kMemberClassCount; ++c) {
    const auto cls = static_cast<MemberClass>(c);
    for (const SubsetMask& mask : maximal_members(records, cls))
      for (auto& rec : records)
        if (rec.mask == mask) rec.maximal[c] = true;
  }
  return records;
}

}  // namespace ringcover
