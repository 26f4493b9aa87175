#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "stabforge/perm.hpp"
#include "stabforge/types.hpp"

namespace stabforge {

// Stabilizer chain with explicit transversals. Base points are chosen greedily
// as the smallest point moved by the residue that created the level, except
// when a preferred base prefix is supplied.
class StabChain {
 public:
  explicit StabChain(int degree, std::vector<int> preferred_base = {});

  int degree() const { return degree_; }
  const std::vector<int>& base() const { return base_; }
  const std::vector<Perm>& strong_generators() const { return sgs_; }

  // Adds g and restores the strong-generation invariant.
  void insert(const Perm& g);

  bool contains(const Perm& g) const;
  BigInt order() const;

  int levels() const { return static_cast<int>(base_.size()); }
  const std::vector<int>& orbit(int level) const { return levels_[level].orbit; }
  int base_point(int level) const { return base_[level]; }
  // Transversal element u with u(base_point(level)) = gamma.
  const Perm& transversal(int level, int gamma) const {
    return *levels_[level].transversal[gamma];
  }
  bool in_orbit(int level, int point) const {
    return levels_[level].transversal[point] != nullptr;
  }

  // Strong generators fixing base_[0..level-1] pointwise.
  std::vector<Perm> level_generators(int level) const;

  // Returns the residue and the level where sifting stopped (levels() when g
  // sifted through completely; residue is the identity iff g is a member).
  std::pair<Perm, int> strip(const Perm& g, int from_level = 0) const;

 private:
  struct Level {
    int base_point;
    std::vector<int> orbit;  // BFS discovery order, orbit[0] = base_point
    std::vector<std::unique_ptr<Perm>> transversal;      // by point
    std::vector<std::unique_ptr<Perm>> transversal_inv;  // by point
  };

  void rebuild_orbit(int level);
  void add_level(int point);
  void complete_from(int start_level);
  const Perm& transversal_inv(int level, int gamma) const {
    return *levels_[level].transversal_inv[gamma];
  }

  int degree_;
  std::vector<Perm> sgs_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  std::vector<int> preferred_base_;
};

class PermGroup {
 public:
  PermGroup() : PermGroup(0) {}
  explicit PermGroup(int degree);  // trivial group
  PermGroup(int degree, std::vector<Perm> generators,
            std::vector<int> preferred_base = {});

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& strong_generators() const { return chain_->strong_generators(); }
  const StabChain& chain() const { return *chain_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool contains(const Perm& g) const;

  std::vector<std::vector<int>> orbits() const;  // ordered by least point
  std::vector<int> orbit_of(int point) const;    // sorted
  bool is_transitive() const;

  enum class ElementFilter { All, OddPrimeOrder };
  // Deterministic enumeration (depth-first over the chain, transversal points
  // in increasing order). Throws CapExceededError when |G| > cap.
  void for_each_element(const std::function<void(const Perm&)>& fn,
                        std::int64_t cap = kDefaultElemCap) const;
  std::vector<Perm> elements(ElementFilter filter = ElementFilter::All,
                             std::int64_t cap = kDefaultElemCap) const;

  // Uniform over the group; identical output for identical (seed, index).
  Perm random_element(std::uint64_t seed, std::uint64_t index) const;

  PermGroup point_stabilizer(int point) const;
  PermGroup pointwise_stabilizer(std::span<const int> points) const;

 private:
  int degree_;
  std::vector<Perm> gens_;
  std::shared_ptr<const StabChain> chain_;
  BigInt order_;
};

// Incremental subgroup construction with membership-gated insertion.
class GroupBuilder {
 public:
  explicit GroupBuilder(int degree) : chain_(degree) {}
  bool contains(const Perm& g) const { return chain_.contains(g); }
  // Returns true when g was new.
  bool add(const Perm& g);
  BigInt order() const { return chain_.order(); }
  PermGroup to_group() const;
  const std::vector<Perm>& generators() const { return gens_; }

 private:
  StabChain chain_;
  std::vector<Perm> gens_;
};

// Backtrack search over the stabilizer chain with point-type and
// found-subgroup orbit pruning.
PermGroup set_stabilizer(const PermGroup& g, PointMask delta);

// Filter of the full element enumeration; the test oracle for the above.
PermGroup set_stabilizer_by_enumeration(const PermGroup& g, PointMask delta,
                                        std::int64_t cap = kDefaultElemCap);

Perm commutator(const Perm& a, const Perm& b);
PermGroup normal_closure(const PermGroup& ambient, const std::vector<Perm>& seeds);
PermGroup derived_subgroup(const PermGroup& g);

struct SolvabilityReport {
  bool solvable = false;
  bool nilpotent = false;
  int derived_length = 0;        // steps until the derived series hit 1
  int lower_central_length = 0;  // steps until the lower central series hit 1
};
// Both series are capped at 32 steps; exceeding the cap is a LimitError.
SolvabilityReport solvability_and_nilpotency(const PermGroup& g);
bool is_solvable(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);

// O^2(G): subgroup generated by all odd-order elements. Requires element
// enumeration, so |G| must be within cap.
PermGroup o2_residual(const PermGroup& g, std::int64_t cap = kDefaultElemCap);

// Trivial groups pass for every p.
bool is_elementary_abelian(const PermGroup& g, int p);

// Exponent (lcm of element orders); enumeration-bounded.
std::int64_t group_exponent(const PermGroup& g, std::int64_t cap = kDefaultElemCap);

struct StructureReport {
  BigInt stab_order = 1;
  BigInt o2_order = 1;
  std::int64_t o2_exponent = 1;
  bool o2_is_elementary_abelian_3 = true;
  bool is_2_group = true;
  bool required_structure = true;  // o2_order == 1 or O^2 elementary abelian 3
  bool is_nilpotent = true;
};
// Full structural profile of a stabilizer: O^2 and its shape, nilpotency.
StructureReport analyze_structure(const PermGroup& s,
                                  std::int64_t cap = kDefaultElemCap);

}  // namespace stabforge
