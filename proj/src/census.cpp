#include "ringcover/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "ringcover/errors.hpp"
#include "ringcover/iso.hpp"
#include "ringcover/rebuild.hpp"

namespace ringcover {

namespace {

std::string space_message(const AbelianGroupShape& shape, long double space) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3Le", space);
  std::string orders;
  for (std::uint32_t m : shape.orders()) {
    if (!orders.empty()) orders += ",";
    orders += std::to_string(m);
  }
  return "candidate space " + std::string(buf) + " for shape (" + orders +
         ") exceeds the exhaustive bounds; set allow_large to force";
}

void check_bounds(const CensusSpec& spec) {
  if (spec.allow_large) return;
  const long double space = census_space(spec.shape);
  if (spec.shape.order() > 16 || space > 1e9L)
    throw SpaceTooLargeError(space, space_message(spec.shape, space));
}

/// Shared machinery for both traversal modes: per-shape arithmetic tables,
/// per-slot candidate lists, the slot assignment order, and the schedule of
/// generator-triple checks that become decidable at each assignment depth.
struct Enumerator {
  const AbelianGroupShape& shape;
  std::size_t n, k, slots;
  std::uint32_t mmax = 1;
  std::vector<elem_t> add_tab;    // n*n
  std::vector<elem_t> scale_tab;  // (mmax+1)*n
  std::vector<std::uint32_t> coord_tab;  // n*k
  std::vector<std::vector<elem_t>> cand;  // per slot i*k+j, ascending
  std::vector<std::size_t> order;         // slot assignment order
  std::vector<std::vector<std::array<std::uint8_t, 3>>> schedule;  // per depth
  std::vector<elem_t> assign;             // by slot index

  explicit Enumerator(const AbelianGroupShape& s) : shape(s) {
    n = shape.order();
    k = shape.rank();
    slots = k * k;
    for (std::uint32_t m : shape.orders()) mmax = std::max(mmax, m);

    add_tab.resize(n * n);
    for (elem_t x = 0; x < n; ++x)
      for (elem_t y = 0; y < n; ++y) add_tab[x * n + y] = shape.add(x, y);
    scale_tab.resize(std::size_t{mmax + 1} * n);
    for (std::uint32_t c = 0; c <= mmax; ++c)
      for (elem_t x = 0; x < n; ++x) scale_tab[c * n + x] = shape.scale(c, x);
    coord_tab.resize(n * k);
    for (elem_t x = 0; x < n; ++x) {
      const Coords cs = shape.coords_of(x);
      for (std::size_t t = 0; t < k; ++t) coord_tab[x * k + t] = cs[t];
    }

    cand.resize(slots);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const std::uint32_t g = std::gcd(shape.orders()[i], shape.orders()[j]);
        for (elem_t x = 0; x < n; ++x)
          if (scale_tab[g * n + x] == 0) cand[i * k + j].push_back(x);
      }

    // Assign the diagonal slot, then the rest of row d, then the rest of
    // column d, for d = 0, 1, ...; rows and columns complete early, which is
    // what makes triples decidable on short prefixes.
    for (std::size_t d = 0; d < k; ++d) {
      order.push_back(d * k + d);
      for (std::size_t j = d + 1; j < k; ++j) order.push_back(d * k + j);
      for (std::size_t i = d + 1; i < k; ++i) order.push_back(i * k + d);
    }

    // Triple (a,b,c) compares sums over row a and column c, so it is
    // decidable once row a and column c are fully assigned.
    schedule.assign(slots + 1, {});
    std::vector<char> assigned(slots, 0);
    for (std::size_t depth = 1; depth <= slots; ++depth) {
      assigned[order[depth - 1]] = 1;
      for (std::uint8_t a = 0; a < k; ++a)
        for (std::uint8_t b = 0; b < k; ++b)
          for (std::uint8_t c = 0; c < k; ++c) {
            bool ready = true, readybefore = true;
            for (std::size_t t = 0; t < k && ready; ++t)
              if (!assigned[a * k + t] || !assigned[t * k + c]) ready = false;
            assigned[order[depth - 1]] = 0;
            for (std::size_t t = 0; t < k && readybefore; ++t)
              if (!assigned[a * k + t] || !assigned[t * k + c]) readybefore = false;
            assigned[order[depth - 1]] = 1;
            if (ready && !readybefore) schedule[depth].push_back({a, b, c});
          }
    }

    assign.assign(slots, 0);
  }

  bool triple_ok(std::uint8_t a, std::uint8_t b, std::uint8_t c) const {
    elem_t lhs = 0;
    const elem_t e = assign[a * k + b];
    for (std::size_t t = 0; t < k; ++t) {
      const std::uint32_t co = coord_tab[e * k + t];
      if (co) lhs = add_tab[lhs * n + scale_tab[co * n + assign[t * k + c]]];
    }
    elem_t rhs = 0;
    const elem_t f = assign[b * k + c];
    for (std::size_t t = 0; t < k; ++t) {
      const std::uint32_t co = coord_tab[f * k + t];
      if (co) rhs = add_tab[rhs * n + scale_tab[co * n + assign[a * k + t]]];
    }
    return lhs == rhs;
  }

  bool depth_ok(std::size_t depth) const {
    for (const auto& [a, b, c] : schedule[depth])
      if (!triple_ok(a, b, c)) return false;
    return true;
  }

  bool all_ok() const {
    for (std::uint8_t a = 0; a < k; ++a)
      for (std::uint8_t b = 0; b < k; ++b)
        for (std::uint8_t c = 0; c < k; ++c)
          if (!triple_ok(a, b, c)) return false;
    return true;
  }

  RingPresentation current_presentation() const {
    std::vector<Coords> products(slots);
    for (std::size_t s = 0; s < slots; ++s) products[s] = shape.coords_of(assign[s]);
    return RingPresentation(AbelianGroupShape(shape), std::move(products));
  }

  template <class Emit>
  void dfs(std::size_t depth, const Emit& emit) {
    if (depth == slots) {
      emit();
      return;
    }
    const std::size_t s = order[depth];
    for (elem_t v : cand[s]) {
      assign[s] = v;
      if (depth_ok(depth + 1)) dfs(depth + 1, emit);
    }
  }

  template <class Emit>
  void full_scan(std::size_t slot, const Emit& emit) {
    if (slot == slots) {
      if (all_ok()) emit();
      return;
    }
    for (elem_t v : cand[slot]) {
      assign[slot] = v;
      full_scan(slot + 1, emit);
    }
  }
};

const std::vector<std::vector<elem_t>>& cached_automorphisms(const AbelianGroupShape& shape) {
  static std::mutex mu;
  static std::map<std::vector<std::uint32_t>, std::vector<std::vector<elem_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace(shape.orders());
  if (fresh) it->second = additive_automorphisms(shape);
  return it->second;
}

using CodeByKey = std::map<std::string, std::vector<elem_t>>;

void merge_min(CodeByKey& into, CodeByKey&& from) {
  for (auto& [key, code] : from) {
    auto [it, fresh] = into.try_emplace(key, std::move(code));
    if (!fresh && code < it->second) it->second = std::move(code);
  }
}

// Enumerate one shape across the given worker count, returning the minimal
// structure-constant code per canonical key. Partitioning is by the values
// of the first one or two assigned slots; the min-merge makes the result
// independent of scheduling.
CodeByKey dedup_shape(const CensusSpec& spec) {
  const AbelianGroupShape& shape = spec.shape;
  const Enumerator proto(shape);

  struct Task {
    elem_t v0 = 0, v1 = 0;
    bool has1 = false;
  };
  std::vector<Task> tasks;
  if (proto.slots == 0) {
    tasks.push_back({});
  } else if (proto.slots == 1 || spec.workers <= 1) {
    for (elem_t v : proto.cand[proto.order[0]]) tasks.push_back({v, 0, false});
  } else {
    for (elem_t v0 : proto.cand[proto.order[0]])
      for (elem_t v1 : proto.cand[proto.order[1]]) tasks.push_back({v0, v1, true});
  }

  const std::size_t nworkers = std::max<std::size_t>(1, std::min(spec.workers, tasks.size()));
  std::atomic<std::size_t> next{0};
  std::vector<CodeByKey> partial(nworkers);

  auto work = [&](std::size_t w) {
    Enumerator en(shape);
    CodeByKey& local = partial[w];
    auto emit = [&] {
      const FiniteRing ring = validate_presentation(en.current_presentation(), en.n);
      CanonicalForm cf = canonical_form(ring);
      auto [it, fresh] = local.try_emplace(std::move(cf.key), en.assign);
      if (!fresh && en.assign < it->second) it->second = en.assign;
    };
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) break;
      if (en.slots == 0) {
        if (spec.mode == EnumerationMode::Pruned)
          en.dfs(0, emit);
        else
          en.full_scan(0, emit);
        continue;
      }
      const Task& task = tasks[t];
      if (spec.mode == EnumerationMode::FullScan) {
        // Restrict the scanned space to the task's prefix by narrowing the
        // candidate lists, then sweep the remaining slots.
        Enumerator scan(shape);
        scan.cand[scan.order[0]] = {task.v0};
        if (task.has1) scan.cand[scan.order[1]] = {task.v1};
        auto emit2 = [&] {
          const FiniteRing ring = validate_presentation(scan.current_presentation(), scan.n);
          CanonicalForm cf = canonical_form(ring);
          auto [it, fresh] = local.try_emplace(std::move(cf.key), scan.assign);
          if (!fresh && scan.assign < it->second) it->second = scan.assign;
        };
        scan.full_scan(0, emit2);
        continue;
      }
      en.assign[en.order[0]] = task.v0;
      if (!en.depth_ok(1)) continue;
      if (task.has1) {
        en.assign[en.order[1]] = task.v1;
        if (!en.depth_ok(2)) continue;
        en.dfs(2, emit);
      } else {
        en.dfs(1, emit);
      }
    }
  };

  if (nworkers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < nworkers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  CodeByKey merged;
  for (auto& p : partial) merge_min(merged, std::move(p));
  return merged;
}

RingPresentation decode(const AbelianGroupShape& shape, const std::vector<elem_t>& code) {
  std::vector<Coords> products(code.size());
  for (std::size_t s = 0; s < code.size(); ++s) products[s] = shape.coords_of(code[s]);
  return RingPresentation(AbelianGroupShape(shape), std::move(products));
}

}  // namespace

long double census_space(const AbelianGroupShape& shape) {
  const auto& m = shape.orders();
  long double space = 1.0L;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const std::uint32_t g = std::gcd(m[i], m[j]);
      std::uint64_t count = 1;
      for (std::uint32_t mt : m) count *= std::gcd(g, mt);
      space *= static_cast<long double>(count);
    }
  return space;
}

CanonicalForm canonical_form(const FiniteRing& r) {
  const std::size_t n = r.size();
  RepresentedRing norm = represent_tables(
      n, [&](elem_t x, elem_t y) { return r.add(x, y); },
      [&](elem_t x, elem_t y) { return r.mul(x, y); }, n);
  const FiniteRing& s = norm.ring;
  const auto& autos = cached_automorphisms(s.shape());

  std::vector<elem_t> table(n * n), best;
  for (const auto& sigma : autos) {
    for (elem_t x = 0; x < n; ++x)
      for (elem_t y = 0; y < n; ++y) table[sigma[x] * n + sigma[y]] = sigma[s.mul(x, y)];
    if (best.empty() || table < best) best = table;
  }

  std::string key;
  auto push16 = [&key](std::uint32_t v) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  };
  for (std::uint32_t m : s.shape().orders()) push16(m);
  key.push_back('\0');
  for (elem_t v : best) push16(v);
  return {std::move(key)};
}

void enumerate_rings(const CensusSpec& spec,
                     const std::function<void(const RingPresentation&)>& emit) {
  check_bounds(spec);
  Enumerator en(spec.shape);
  const auto send = [&] { emit(en.current_presentation()); };
  if (spec.mode == EnumerationMode::Pruned)
    en.dfs(0, send);
  else
    en.full_scan(0, send);
}

CensusResult census(const CensusSpec& spec) {
  check_bounds(spec);
  CodeByKey byKey = dedup_shape(spec);

  std::vector<std::vector<elem_t>> codes;
  codes.reserve(byKey.size());
  for (auto& [key, code] : byKey) codes.push_back(code);
  std::sort(codes.begin(), codes.end());

  CensusResult result;
  result.shapes.push_back(spec.shape);
  for (const auto& code : codes) {
    CensusClass cls{decode(spec.shape, code), {}};
    const FiniteRing ring = validate_presentation(cls.rep, spec.shape.order());
    cls.profile = profile(ring);
    ++result.histogram[cls.profile];
    result.classes.push_back(std::move(cls));
  }
  return result;
}

CensusResult census_order(std::size_t order, std::size_t workers, EnumerationMode mode) {
  CensusResult merged;
  for (const AbelianGroupShape& shape : shapes_of_order(order)) {
    CensusResult one = census(CensusSpec{shape, workers, mode, false});
    merged.shapes.push_back(shape);
    for (auto& cls : one.classes) merged.classes.push_back(std::move(cls));
    for (const auto& [prof, count] : one.histogram) merged.histogram[prof] += count;
  }
  return merged;
}

std::vector<AbelianGroupShape> shapes_of_order(std::size_t order) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
  std::uint64_t rest = order;
  for (std::uint64_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      std::uint32_t e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
  if (rest > 1) factors.emplace_back(rest, 1);

  // Partitions of an exponent, descending parts, descending lex order.
  auto partitions = [](std::uint32_t e) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, std::uint32_t left, std::uint32_t cap) -> void {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (std::uint32_t part = std::min(left, cap); part >= 1; --part) {
        cur.push_back(part);
        self(self, left - part, part);
        cur.pop_back();
      }
    };
    rec(rec, e, e);
    return out;
  };

  std::vector<std::vector<std::vector<std::uint32_t>>> per;
  for (const auto& [p, e] : factors) per.push_back(partitions(e));

  std::vector<AbelianGroupShape> shapes;
  std::vector<std::size_t> idx(factors.size(), 0);
  for (;;) {
    std::vector<std::uint32_t> orders;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto& parts = per[f][idx[f]];
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        std::uint64_t power = 1;
        for (std::uint32_t i = 0; i < *it; ++i) power *= factors[f].first;
        orders.push_back(static_cast<std::uint32_t>(power));
      }
    }
    shapes.emplace_back(std::move(orders), std::max<std::size_t>(order, 1));
    std::size_t f = factors.size();
    while (f > 0) {
      --f;
      if (++idx[f] < per[f].size()) break;
      idx[f] = 0;
      if (f == 0) return shapes;
    }
    if (factors.empty()) return shapes;
  }
}

std::vector<ProfileRow> profile_table(const CensusResult& result, bool all) {
  std::map<std::array<ExtNat, 4>, std::size_t> rows;
  for (const auto& [prof, count] : result.histogram) {
    if (!all && prof.sigma.is_inf()) continue;
    rows[{prof.sigma, prof.eta_left, prof.eta_right, prof.eta}] += count;
  }
  std::vector<ProfileRow> out;
  for (const auto& [key, count] : rows) out.push_back({key[0], key[1], key[2], key[3], count});
  return out;
}

}  // namespace ringcover
