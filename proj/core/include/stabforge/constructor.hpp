#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabforge/blocks.hpp"
#include "stabforge/group.hpp"

namespace stabforge {

// A pair of subsets whose setwise stabilizers both have required structure
// (O^2 trivial or elementary abelian 3), with |delta1| < |delta2| <= n/2.
struct NicePair {
  PointMask delta1 = 0;
  PointMask delta2 = 0;
  StructureReport report1;
  StructureReport report2;
};

struct TraceStep {
  // intransitive-combine | primitive-base | primitive-search | wreath-<n>
  std::string step_case;
  int degree = 0;
  int n_blocks = 0;    // wreath levels; orbit count for intransitive-combine
  int block_size = 0;  // wreath levels only
  std::string pattern1;  // tag tuple for delta1 (D1/D2/C1), orbit sizes for
  std::string pattern2;  // intransitive-combine
};

struct Certificate {
  std::string spec;  // group expression when known; callers may fill later
  int degree = 0;
  BigInt group_order = 1;
  PointMask delta = 0;
  StructureReport report;
  NicePair pair;
  std::vector<TraceStep> trace;
};

struct ConstructorOptions {
  // Transitive groups of degree at or below this go straight to the
  // exhaustive subset scan, primitive or not.
  int scan_cap = 12;
  // Lexicographic candidates tried per subset size before giving up on it.
  std::int64_t per_size_budget = 20'000;
  // Take the block recursion below scan_cap too (testing hook).
  bool force_recursion = false;
  std::uint64_t seed = 0;  // sampled regular-set search
  std::int64_t elem_cap = kDefaultElemCap;
};

// Subsets with trivial setwise stabilizer, pairwise distinct sizes <= n/2,
// searched in (size, lex) order; sizes above the budget's exhaustive reach
// are sampled with the seeded counter generator. An explicit sizes list
// restricts and orders the sizes tried. Throws NotFoundError when the budget
// runs out before `want` sets are found.
std::vector<PointMask> regular_set_search(const PermGroup& w, bool forbid_half,
                                          int want, std::int64_t budget = 20'000,
                                          std::uint64_t seed = 0,
                                          const std::vector<int>& sizes = {});

// Lexicographically first 3 points with trivial pointwise stabilizer.
std::vector<int> pointwise_free_triple(const PermGroup& w);

// First subset pair in (size, lex) order whose stabilizers both have the
// required structure, at most one subset per size, per-size candidate budget.
// Intended for primitive or scan-cap-sized transitive groups with |G| > 1.
NicePair primitive_base_pair(const PermGroup& g, const ConstructorOptions& opts = {});

enum class Tag { D1, D2, C1 };  // delta1, delta2, block complement of delta1

// Union over block positions i of w_i(piece(tags[i])), where the pieces live
// on the constituent's points (block 0 re-indexed) and C1 is the complement
// of delta1 inside the block.
PointMask wreath_tuple_assembly(const PrimitiveTower& tower,
                                const std::vector<Tag>& tags, const NicePair& pair);

// The recursion: intransitive inputs combine per-orbit pairs; small or
// primitive transitive inputs scan directly; imprimitive inputs lift a
// constituent pair through the primitive block action by case on the number
// of blocks. Every output is re-verified in the input group. Throws
// NotSolvableError, or VerificationError when a lifted pair fails its checks.
NicePair nice_pair(const PermGroup& g, const ConstructorOptions& opts,
                   std::vector<TraceStep>& trace);
NicePair nice_pair(const PermGroup& g, const ConstructorOptions& opts = {});

// Certificate around delta1 of nice_pair; trivial groups and degree <= 1 get
// the empty subset.
Certificate small_stabilizer_set(const PermGroup& g,
                                 const ConstructorOptions& opts = {});

}  // namespace stabforge
