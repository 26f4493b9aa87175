#pragma once

#include <utility>
#include <vector>

#include "stabforge/group.hpp"

namespace stabforge {

// G-invariant partition into equal-size blocks, sorted by least point.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;  // each sorted; blocks[0] contains point 0
  std::vector<int> block_of;             // point -> block index

  int degree() const { return static_cast<int>(block_of.size()); }
  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks[0].size()); }
  bool is_one_block() const { return block_count() == 1; }
  bool is_singletons() const { return block_count() == degree(); }
  bool is_trivial() const { return is_one_block() || is_singletons(); }
};

// Finest G-invariant partition joining alpha and beta; the one-block
// partition iff no proper system joins them. G must be transitive.
BlockSystem minimal_blocks(const PermGroup& g, int alpha, int beta);

bool is_primitive(const PermGroup& g);

// Induced permutation of block indices; InvalidSystemError when p does not
// permute the blocks.
Perm action_on_blocks(const Perm& p, const BlockSystem& system);

// Constituent of the block stabilizer on blocks[0] (re-indexed 0..b-1), plus
// transversal elements w_i with w_i(blocks[0]) = blocks[i], w_0 = identity.
std::pair<PermGroup, std::vector<Perm>> block_constituent(const PermGroup& g,
                                                          const BlockSystem& system);

// The wreath-embedding data G <= G1 wr W for a maximal block system.
struct PrimitiveTower {
  bool primitive = false;  // G itself primitive; system is then all singletons
  BlockSystem system;
  PermGroup w;                       // action on block indices, primitive
  std::vector<Perm> quotient_gens;   // images of g.generators(), index-aligned
  PermGroup constituent;             // G1 on blocks[0], degree block_size
  std::vector<Perm> transversals;    // by block index, in G
};

// Coarsens minimal systems until the quotient is primitive. G transitive,
// degree >= 2.
PrimitiveTower primitive_quotient(const PermGroup& g);

}  // namespace stabforge
