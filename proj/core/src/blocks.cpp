#include "stabforge/blocks.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace stabforge {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

BlockSystem system_from_classes(const std::vector<int>& cls, int degree) {
  BlockSystem sys;
  sys.block_of.assign(degree, -1);
  std::vector<int> index_of_class(degree, -1);
  for (int p = 0; p < degree; ++p) {
    int c = cls[p];
    if (index_of_class[c] < 0) {
      index_of_class[c] = sys.block_count();
      sys.blocks.emplace_back();
    }
    int b = index_of_class[c];
    sys.blocks[b].push_back(p);
    sys.block_of[p] = b;
  }
  // Classes were discovered in least-point order, so blocks are already
  // sorted by minimum and each block ascends.
  return sys;
}

}  // namespace

BlockSystem minimal_blocks(const PermGroup& g, int alpha, int beta) {
  const int n = g.degree();
  if (!g.is_transitive()) throw NotTransitiveError("minimal_blocks: group not transitive");
  if (alpha == beta || alpha < 0 || beta < 0 || alpha >= n || beta >= n)
    throw Error("minimal_blocks: bad point pair");

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  parent[find_root(parent, beta)] = find_root(parent, alpha);
  std::deque<int> queue{beta};
  while (!queue.empty()) {
    int gamma = queue.front();
    queue.pop_front();
    int delta = find_root(parent, gamma);
    for (const Perm& x : g.generators()) {
      int a = find_root(parent, x[gamma]);
      int b = find_root(parent, x[delta]);
      if (a != b) {
        parent[a] = b;
        queue.push_back(a);
      }
    }
  }

  std::vector<int> cls(n);
  for (int p = 0; p < n; ++p) cls[p] = find_root(parent, p);
  BlockSystem sys = system_from_classes(cls, n);
  // A congruence of a transitive group has equal-size classes.
  for (const auto& b : sys.blocks)
    if (b.size() != sys.blocks[0].size())
      throw VerificationError("minimal_blocks produced unequal classes");
  return sys;
}

bool is_primitive(const PermGroup& g) {
  if (!g.is_transitive()) return false;
  if (g.degree() <= 2) return true;
  for (int beta = 1; beta < g.degree(); ++beta)
    if (!minimal_blocks(g, 0, beta).is_one_block()) return false;
  return true;
}

Perm action_on_blocks(const Perm& p, const BlockSystem& system) {
  std::vector<int> img(system.block_count(), -1);
  for (int b = 0; b < system.block_count(); ++b) {
    int target = system.block_of[p[system.blocks[b][0]]];
    for (int pt : system.blocks[b])
      if (system.block_of[p[pt]] != target)
        throw InvalidSystemError("partition is not invariant under the group");
    img[b] = target;
  }
  return Perm(img);
}

std::pair<PermGroup, std::vector<Perm>> block_constituent(const PermGroup& g,
                                                          const BlockSystem& system) {
  if (system.is_trivial())
    throw InvalidSystemError("block constituent needs a nontrivial system");
  if (system.degree() != g.degree())
    throw InvalidSystemError("system degree mismatch");
  for (const Perm& x : g.generators()) action_on_blocks(x, system);  // validates

  const auto& b0 = system.blocks[0];
  const int b = static_cast<int>(b0.size());
  std::vector<int> pos(g.degree(), -1);
  for (int i = 0; i < b; ++i) pos[b0[i]] = i;

  PointMask mask0 = points_to_mask(b0);
  PermGroup block_stab = set_stabilizer(g, mask0);
  std::vector<Perm> constituent_gens;
  for (const Perm& s : block_stab.generators()) {
    std::vector<int> img(b);
    for (int i = 0; i < b; ++i) img[i] = pos[s[b0[i]]];
    constituent_gens.emplace_back(img);
  }

  // Transversals from the orbit of block 0 under the block action.
  const int nb = system.block_count();
  std::vector<Perm> trans(nb);
  std::vector<char> have(nb, 0);
  trans[0] = Perm::identity(g.degree());
  have[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (const Perm& x : g.generators()) {
      int j = system.block_of[x[system.blocks[i][0]]];
      if (!have[j]) {
        have[j] = 1;
        trans[j] = x.compose(trans[i]);
        queue.push_back(j);
      }
    }
  }
  for (int i = 0; i < nb; ++i)
    if (!have[i]) throw NotTransitiveError("block action not transitive");

  return {PermGroup(b, std::move(constituent_gens)), std::move(trans)};
}

PrimitiveTower primitive_quotient(const PermGroup& g) {
  const int n = g.degree();
  if (n < 2) throw Error("primitive_quotient: degree must be at least 2");
  if (!g.is_transitive())
    throw NotTransitiveError("primitive_quotient: group not transitive");

  // Partition of the original points, coarsened until the induced action on
  // its cells is primitive. Cells are kept sorted by least point throughout.
  std::vector<std::vector<int>> cells(n);
  for (int p = 0; p < n; ++p) cells[p] = {p};

  for (;;) {
    const int m = static_cast<int>(cells.size());
    if (m == 1) throw VerificationError("coarsening collapsed to one cell");
    std::vector<int> cell_of(n);
    for (int c = 0; c < m; ++c)
      for (int pt : cells[c]) cell_of[pt] = c;
    std::vector<Perm> induced;
    for (const Perm& x : g.generators()) {
      std::vector<int> img(m);
      for (int c = 0; c < m; ++c) img[c] = cell_of[x[cells[c][0]]];
      induced.emplace_back(img);
    }
    PermGroup quotient(m, induced);

    int beta = 1;
    BlockSystem step;
    for (; beta < m; ++beta) {
      step = minimal_blocks(quotient, 0, beta);
      if (!step.is_one_block()) break;
    }
    if (beta == m) break;  // quotient is primitive

    std::vector<std::vector<int>> merged(step.block_count());
    for (int c = 0; c < m; ++c) {
      auto& dst = merged[step.block_of[c]];
      dst.insert(dst.end(), cells[c].begin(), cells[c].end());
    }
    for (auto& cell : merged) std::sort(cell.begin(), cell.end());
    std::sort(merged.begin(), merged.end());
    cells = std::move(merged);
  }

  PrimitiveTower tower;
  if (static_cast<int>(cells.size()) == n) {
    tower.primitive = true;
    tower.system.blocks = std::move(cells);
    tower.system.block_of.resize(n);
    std::iota(tower.system.block_of.begin(), tower.system.block_of.end(), 0);
    tower.w = g;
    tower.quotient_gens = g.generators();
    tower.constituent = PermGroup(1);
    tower.transversals.assign(n, Perm());
    tower.transversals[0] = Perm::identity(n);
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (const Perm& x : g.generators()) {
        int j = x[i];
        if (tower.transversals[j].degree() == 0) {
          tower.transversals[j] = x.compose(tower.transversals[i]);
          queue.push_back(j);
        }
      }
    }
    return tower;
  }

  tower.system.blocks = std::move(cells);
  tower.system.block_of.assign(n, -1);
  for (int b = 0; b < tower.system.block_count(); ++b)
    for (int pt : tower.system.blocks[b]) tower.system.block_of[pt] = b;
  for (const Perm& x : g.generators())
    tower.quotient_gens.push_back(action_on_blocks(x, tower.system));
  tower.w = PermGroup(tower.system.block_count(), tower.quotient_gens);
  auto [g1, trans] = block_constituent(g, tower.system);
  tower.constituent = std::move(g1);
  tower.transversals = std::move(trans);
  return tower;
}

}  // namespace stabforge
