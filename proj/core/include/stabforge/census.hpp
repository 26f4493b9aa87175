#pragma once

#include <cstdint>
#include <vector>

#include "stabforge/group.hpp"

namespace stabforge {

// One bit per subset mask of {0..degree-1}; capped at degree 24 (2 MiB).
struct HitBitmap {
  int degree = 0;
  std::vector<std::uint64_t> words;

  bool test(PointMask mask) const { return (words[mask >> 6] >> (mask & 63)) & 1; }
  std::uint64_t count() const;
  std::vector<std::uint64_t> counts_by_size() const;  // indexed by subset size
  // Lowest unmarked mask, or ~0 when every bit is set.
  PointMask first_clear() const;
};

// Marks every subset stabilized by some odd-prime-order element: the unions
// of cycles of each such element. A clear bit certifies that the subset's
// setwise stabilizer is a 2-group.
HitBitmap g0_hit_bitmap(const PermGroup& g, int threads = 1,
                        std::int64_t cap = kDefaultElemCap);

struct CensusRow {
  int size = 0;
  BigInt total;                       // C(degree, size)
  std::int64_t examined = 0;          // subsets classified at this size
  std::int64_t hit_by_g0 = 0;
  std::int64_t two_group_stab = 0;
  std::int64_t required_structure = 0;
  std::int64_t nilpotent_stab = 0;
  BigInt min_stab_order = 0;          // over examined subsets; 0 when none
};

struct CensusTable {
  int degree = 0;
  bool exhaustive = false;
  std::int64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::vector<CensusRow> rows;        // indexed by subset size 0..degree
};

struct CensusMode {
  bool exhaustive = true;             // all 2^n subsets; degree <= 16
  std::int64_t sample_count = 0;      // sampled masks; degree <= 24
  std::uint64_t seed = 0;
};

// Classifies subsets by the structure of their setwise stabilizers. Sampling
// draws mask i from the counter generator, so tables are identical for any
// thread count.
CensusTable structure_census(const PermGroup& g, const CensusMode& mode,
                             int threads = 1, std::int64_t cap = kDefaultElemCap);

// Exact G0-hit counts for selected subset sizes without the full bitmap:
// deduplicates the size-k invariant subsets across elements. Works at any
// supported degree; throws CapExceededError when the hit set outgrows
// dedupe_cap.
std::vector<std::pair<int, std::int64_t>> g0_hit_counts_by_size(
    const PermGroup& g, const std::vector<int>& sizes,
    std::int64_t cap = kDefaultElemCap, std::int64_t dedupe_cap = 1 << 22);

}  // namespace stabforge
