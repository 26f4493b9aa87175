#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabforge/group.hpp"

namespace stabforge {

struct CycleCountRow {
  std::int64_t element_order = 0;  // an odd prime
  int cycle_count = 0;             // fixed points included
  int fixed_points = 0;
};

struct CycleBoundAudit {
  int degree = 0;
  bool applicable = false;         // the bound is a primitive-case fact
  std::vector<CycleCountRow> rows; // one per odd-prime-order element
  int max_cycle_count = 0;
  double cycle_bound = 0.0;        // 5n/9, or n/2 at 2-power degree
  bool holds = true;               // exact: 9c <= 5n (and 2c <= n)
};

CycleBoundAudit cycle_bound_audit(const PermGroup& g,
                                  std::int64_t cap = kDefaultElemCap);

struct WolfAudit {
  double bound = 0.0;              // 24^(-1/3) n^(13/4)
  bool holds = false;              // |G| <= bound
  bool applicable = false;         // primitive inputs only
};

// Near-tie comparisons (within 1e-6 relative) fall back to the exact integer
// form |G|^12 * 24^4 <= n^39.
WolfAudit wolf_bound_audit(const PermGroup& g);

struct BoundsReport {
  int degree = 0;
  BigInt group_order = 1;
  double wolf_bound = 0.0;
  bool wolf_holds = false;
  bool wolf_applicable = false;
  std::int64_t g0_count = 0;
  int max_cycle_count = 0;
  double cycle_bound = 0.0;
  bool cycle_bound_holds = true;
  bool cycle_bound_applicable = false;
  BigInt s_count = 0;              // sum over g in G0 of 2^c(g), exact
  BigInt threshold_2n = 0;         // 2^n
  BigInt threshold_half = 0;       // 2^(n-1)
  bool pair_bound_holds = true;    // s^36 * 24^12 <= 2^(20n) * n^117
  bool pair_bound_applicable = false;
  bool verdict_two_group_exists = false;   // s_count < 2^n
  bool verdict_nice_by_counting = false;   // s_count < 2^(n-1) and n > 9
};

BoundsReport stabilized_pair_count(const PermGroup& g,
                                   std::int64_t cap = kDefaultElemCap);

struct NicenessVerdicts {
  BoundsReport report;
  // A subset no odd-prime-order element stabilizes, when the counting verdict
  // promises one and the degree fits the bitmap; stabilizer re-verified a
  // 2-group.
  std::optional<PointMask> two_group_witness;
};

NicenessVerdicts counting_niceness(const PermGroup& g,
                                   std::int64_t cap = kDefaultElemCap);

// (13/4) log2 n - (1/3) log2 24 < (4/9) n - 1, decided exactly as
// n^117 < 24^12 * 2^(16n-36) when the double evaluation is within the band.
bool threshold_inequality_holds(int n);

struct AnalyticChecks {
  int threshold_lo = 0;
  int threshold_hi = 0;
  bool threshold_holds = true;         // every n in [lo, hi]
  int threshold_last_fail = 0;         // largest failing n in [2, hi]; 0 if none
  bool pascal_holds = true;            // C(n,r)+C(n,s) <= 2^(n-1), 9<=n<=64
  bool frobenius_counts_hold = true;   // order-3-hit 3-subsets of AGL(1,p)
};

// Threshold sweep over [lo, hi] plus the two exhaustive small checks. The
// Frobenius check builds AGL(1,p) for p in {7, 13, 19} (count = p(p-1)/3,
// strictly below C(p,3)) and p = 11 (no order-3 elements, count 0).
AnalyticChecks analytic_checks(int threshold_lo = 49, int threshold_hi = 10'000);

}  // namespace stabforge
