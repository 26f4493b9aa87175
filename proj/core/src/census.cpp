#include "stabforge/census.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <thread>
#include <unordered_set>

namespace stabforge {

namespace {

// fn(worker, begin, end) over a partition of [0, total); exceptions from
// workers are rethrown here. Partition boundaries never affect results: all
// aggregations below are commutative and inputs are counter-indexed.
template <typename Fn>
void run_partitioned(std::int64_t total, int threads, const Fn& fn) {
  std::int64_t t = std::clamp<std::int64_t>(threads, 1, std::max<std::int64_t>(total, 1));
  if (t == 1) {
    fn(0, 0, total);
    return;
  }
  std::int64_t chunk = (total + t - 1) / t;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(t));
  for (std::int64_t w = 0; w < t; ++w) {
    std::int64_t b = w * chunk;
    std::int64_t e = std::min(total, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, &errors, w, b, e] {
      try {
        fn(static_cast<int>(w), b, e);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace

std::uint64_t HitBitmap::count() const {
  std::uint64_t n = 0;
  for (auto w : words) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

std::vector<std::uint64_t> HitBitmap::counts_by_size() const {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(degree) + 1, 0);
  PointMask total = PointMask{1} << degree;
  for (PointMask m = 0; m < total; ++m)
    if (test(m)) ++counts[static_cast<std::size_t>(std::popcount(m))];
  return counts;
}

PointMask HitBitmap::first_clear() const {
  std::uint64_t total_bits = std::uint64_t{1} << degree;
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t x = ~words[w];
    if (total_bits < 64) x &= (std::uint64_t{1} << total_bits) - 1;
    if (x) return static_cast<PointMask>(w * 64 + std::countr_zero(x));
  }
  return ~PointMask{0};
}

HitBitmap g0_hit_bitmap(const PermGroup& g, int threads, std::int64_t cap) {
  const int n = g.degree();
  if (n > 24) throw CapExceededError("hit bitmap supports degree at most 24");
  std::vector<Perm> g0 = g.elements(PermGroup::ElementFilter::OddPrimeOrder, cap);

  std::uint64_t total_bits = std::uint64_t{1} << n;
  std::size_t nwords = static_cast<std::size_t>(std::max<std::uint64_t>(total_bits / 64, 1));
  HitBitmap out{n, std::vector<std::uint64_t>(nwords, 0)};

  int t = std::max(1, threads);
  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<std::size_t>(t), std::vector<std::uint64_t>(nwords, 0));
  run_partitioned(static_cast<std::int64_t>(g0.size()), t,
                  [&](int worker, std::int64_t b, std::int64_t e) {
                    auto& bits = partial[static_cast<std::size_t>(worker)];
                    for (std::int64_t i = b; i < e; ++i) {
                      CycleData cd = cycle_structure(g0[static_cast<std::size_t>(i)]);
                      for_each_invariant_subset(cd, [&](PointMask m) {
                        bits[m >> 6] |= std::uint64_t{1} << (m & 63);
                        return true;
                      });
                    }
                  });
  for (const auto& bits : partial)
    for (std::size_t w = 0; w < nwords; ++w) out.words[w] |= bits[w];
  return out;
}

CensusTable structure_census(const PermGroup& g, const CensusMode& mode, int threads,
                             std::int64_t cap) {
  const int n = g.degree();
  if (mode.exhaustive && n > 16)
    throw CapExceededError("exhaustive census supports degree at most 16");
  if (!mode.exhaustive && n > 24)
    throw CapExceededError("sampled census supports degree at most 24");

  // With the bitmap in reach it doubles as a per-subset cross-check; beyond
  // the cap, hit-by-G0 falls back to the stabilizer structure (a subset is
  // hit iff its stabilizer is not a 2-group).
  bool have_bitmap = n <= 24 && g.order() <= cap;
  HitBitmap bitmap;
  if (have_bitmap) bitmap = g0_hit_bitmap(g, threads, cap);
  const PointMask full = full_mask(n);
  std::int64_t total =
      mode.exhaustive ? (std::int64_t{1} << n) : mode.sample_count;

  int t = std::max(1, threads);
  std::vector<std::vector<CensusRow>> partial(
      static_cast<std::size_t>(t),
      std::vector<CensusRow>(static_cast<std::size_t>(n) + 1));
  run_partitioned(total, t, [&](int worker, std::int64_t b, std::int64_t e) {
    auto& rows = partial[static_cast<std::size_t>(worker)];
    for (std::int64_t i = b; i < e; ++i) {
      PointMask m = mode.exhaustive
                        ? static_cast<PointMask>(i)
                        : (mix64(mode.seed, static_cast<std::uint64_t>(i)) & full);
      PermGroup stab = set_stabilizer(g, m);
      StructureReport rep = analyze_structure(stab, cap);
      bool hit = !rep.is_2_group;
      if (have_bitmap && bitmap.test(m) != hit)
        throw VerificationError("bitmap and stabilizer structure disagree");
      CensusRow& row = rows[static_cast<std::size_t>(mask_size(m))];
      ++row.examined;
      row.hit_by_g0 += hit;
      row.two_group_stab += rep.is_2_group;
      row.required_structure += rep.required_structure;
      row.nilpotent_stab += rep.is_nilpotent;
      if (row.min_stab_order == 0 || rep.stab_order < row.min_stab_order)
        row.min_stab_order = rep.stab_order;
    }
  });

  CensusTable table;
  table.degree = n;
  table.exhaustive = mode.exhaustive;
  table.sample_count = mode.exhaustive ? 0 : mode.sample_count;
  table.seed = mode.seed;
  table.rows.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    CensusRow& row = table.rows[static_cast<std::size_t>(k)];
    row.size = k;
    row.total = binomial(n, k);
    for (const auto& rows : partial) {
      const CensusRow& p = rows[static_cast<std::size_t>(k)];
      row.examined += p.examined;
      row.hit_by_g0 += p.hit_by_g0;
      row.two_group_stab += p.two_group_stab;
      row.required_structure += p.required_structure;
      row.nilpotent_stab += p.nilpotent_stab;
      if (p.min_stab_order != 0 &&
          (row.min_stab_order == 0 || p.min_stab_order < row.min_stab_order))
        row.min_stab_order = p.min_stab_order;
    }
  }
  return table;
}

std::vector<std::pair<int, std::int64_t>> g0_hit_counts_by_size(
    const PermGroup& g, const std::vector<int>& sizes, std::int64_t cap,
    std::int64_t dedupe_cap) {
  std::vector<std::unordered_set<PointMask>> hits(sizes.size());
  std::vector<Perm> g0 = g.elements(PermGroup::ElementFilter::OddPrimeOrder, cap);
  for (const Perm& p : g0) {
    CycleData cd = cycle_structure(p);
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      for (PointMask m : invariant_subsets_of_size(cd, sizes[j])) hits[j].insert(m);
      if (static_cast<std::int64_t>(hits[j].size()) > dedupe_cap)
        throw CapExceededError("per-size hit set exceeds the dedupe cap");
    }
  }
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t j = 0; j < sizes.size(); ++j)
    out.emplace_back(sizes[j], static_cast<std::int64_t>(hits[j].size()));
  return out;
}

}  // namespace stabforge
