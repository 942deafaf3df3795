#include "ringcover/covering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ringcover {

std::string to_string(ExtNat v) { return v.is_inf() ? "inf" : std::to_string(v.value()); }

namespace {

elem_t first_element(const SubsetMask& m) {
  elem_t r = 0;
  bool found = false;
  m.for_each([&](elem_t e) {
    if (!found) {
      r = e;
      found = true;
    }
  });
  return r;
}

std::size_t greedy_cover_size(const SubsetMask& universe, const std::vector<SubsetMask>& restr) {
  SubsetMask uncovered = universe;
  std::size_t picked = 0;
  while (!uncovered.empty()) {
    std::size_t best_gain = 0, best_i = 0;
    for (std::size_t i = 0; i < restr.size(); ++i) {
      const std::size_t gain = (restr[i] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best_i = i;
      }
    }
    uncovered.subtract(restr[best_i]);
    ++picked;
  }
  return picked;
}

// Phase 1: exact minimum cover size. Branches on the first uncovered element,
// trying the candidates that contain it in descending fresh-coverage order.
class ValueSearch {
 public:
  ValueSearch(const SubsetMask& universe, const std::vector<SubsetMask>& restr)
      : universe_(universe), restr_(restr) {
    for (const auto& c : restr_) max_cov_ = std::max(max_cov_, c.count());
    // Two proper subgroups never exhaust a group, hence the floor of three.
    floor_ = std::max<std::size_t>(3, (universe_.count() + max_cov_ - 1) / max_cov_);
  }

  std::size_t minimum(std::size_t upper) {
    best_ = std::max(upper, floor_);
    dfs(universe_, 0);
    return best_;
  }

 private:
  void dfs(const SubsetMask& uncovered, std::size_t chosen) {
    if (best_ <= floor_) return;
    if (uncovered.empty()) {
      best_ = chosen;
      return;
    }
    const std::size_t lb = (uncovered.count() + max_cov_ - 1) / max_cov_;
    if (chosen + lb >= best_) return;

    const elem_t e = first_element(uncovered);
    std::vector<std::pair<std::size_t, std::size_t>> branch;  // (gain, index)
    for (std::size_t i = 0; i < restr_.size(); ++i)
      if (restr_[i].test(e)) branch.emplace_back((restr_[i] & uncovered).count(), i);
    std::sort(branch.begin(), branch.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [gain, i] : branch) {
      (void)gain;
      SubsetMask next = uncovered;
      next.subtract(restr_[i]);
      dfs(next, chosen + 1);
    }
  }

  const SubsetMask& universe_;
  const std::vector<SubsetMask>& restr_;
  std::size_t max_cov_ = 1;
  std::size_t floor_ = 3;
  std::size_t best_ = 0;
};

// Phase 2: with the exact size known, pick the lexicographically smallest
// witness. Candidates arrive sorted ascending by mask, so the first cover
// found by increasing-index combinations is the lex-minimal sequence.
class WitnessSearch {
 public:
  WitnessSearch(const SubsetMask& universe, const std::vector<SubsetMask>& cands,
                const std::vector<SubsetMask>& restr)
      : universe_(universe), cands_(cands), restr_(restr) {
    suffix_.assign(cands_.size() + 1, SubsetMask(universe.universe_size()));
    for (std::size_t i = cands_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] | restr_[i];
  }

  std::vector<SubsetMask> find(std::size_t k) {
    std::vector<SubsetMask> out;
    SubsetMask covered(universe_.universe_size());
    go(0, k, covered, out);
    return out;
  }

 private:
  bool go(std::size_t start, std::size_t left, const SubsetMask& covered,
          std::vector<SubsetMask>& out) {
    if (left == 0) return covered.contains(universe_);
    if (!(covered | suffix_[start]).contains(universe_)) return false;
    for (std::size_t i = start; i + left <= cands_.size(); ++i) {
      SubsetMask with = covered | restr_[i];
      if (!(with | suffix_[i + 1]).contains(universe_)) continue;
      out.push_back(cands_[i]);
      if (go(i + 1, left - 1, with, out)) return true;
      out.pop_back();
    }
    return false;
  }

  const SubsetMask& universe_;
  const std::vector<SubsetMask>& cands_;
  const std::vector<SubsetMask>& restr_;
  std::vector<SubsetMask> suffix_;
};

}  // namespace

CoverResult min_cover(const CoverProblem& problem) {
  const SubsetMask& universe = problem.universe;
  if (universe.empty()) return {ExtNat(0), {}};

  std::vector<SubsetMask> cands, restr;
  for (const auto& c : problem.candidates) {
    SubsetMask r = c & universe;
    if (r.empty()) continue;
    cands.push_back(c);
    restr.push_back(std::move(r));
  }

  SubsetMask covered(universe.universe_size());
  for (const auto& r : restr) covered |= r;
  if (!covered.contains(universe)) return {ExtNat::inf(), {}};

  std::vector<std::size_t> order(cands.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return cands[a] < cands[b]; });
  std::vector<SubsetMask> scands, srestr;
  for (std::size_t i : order) {
    scands.push_back(cands[i]);
    srestr.push_back(restr[i]);
  }

  const std::size_t upper = greedy_cover_size(universe, srestr);
  const std::size_t k = ValueSearch(universe, srestr).minimum(upper);
  std::vector<SubsetMask> witness = WitnessSearch(universe, scands, srestr).find(k);
  if (witness.size() != k) throw std::logic_error("cover witness extraction failed");
  return {ExtNat(k), std::move(witness)};
}

CoverResult covering_number(const FiniteRing& ring, MemberClass cls) {
  if (ring.size() == 1) return {ExtNat::inf(), {}};  // no proper members exist

  std::vector<SubgroupRecord> records;
  for (const SubsetMask& m : enumerate_subgroups(ring))
    records.push_back(classify_subset(ring, m));

  CoverProblem problem;
  problem.universe = SubsetMask::full(ring.size());
  problem.universe.reset(ring.zero());
  problem.candidates = maximal_members(records, cls);
  return min_cover(problem);
}

ProfileResult profile_with_witnesses(const FiniteRing& ring) {
  ProfileResult res;  // every value starts at infinity

  // A cyclic additive group (the trivial group included) has no covering by
  // proper subgroups: each proper subgroup misses every additive generator.
  if (ring.size() == 1 || ring.additive_cyclic()) return res;

  std::vector<SubgroupRecord> records;
  for (const SubsetMask& m : enumerate_subgroups(ring))
    records.push_back(classify_subset(ring, m));

  SubsetMask universe = SubsetMask::full(ring.size());
  universe.reset(ring.zero());
  const bool unital = ring.identity().has_value();

  for (std::size_t c = 0; c < kMemberClassCount; ++c) {
    const auto cls = static_cast<MemberClass>(c);
    // A proper one- or two-sided ideal never contains the identity.
    if (unital && cls != MemberClass::Subgroup && cls != MemberClass::Subring) continue;
    res.covers[c] = min_cover({universe, maximal_members(records, cls)});
  }

  res.profile.sigma_add = res.covers[0].value;
  res.profile.sigma = res.covers[1].value;
  res.profile.eta_left = res.covers[2].value;
  res.profile.eta_right = res.covers[3].value;
  res.profile.eta = res.covers[4].value;
  return res;
}

CoveringProfile profile(const FiniteRing& ring) { return profile_with_witnesses(ring).profile; }

}  // namespace ringcover
