#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "stabforge/types.hpp"

namespace stabforge {

// Permutation of {0, ..., degree-1}, stored as the image table.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : img_(degree) {
    for (int i = 0; i < degree; ++i) img_[i] = static_cast<std::uint8_t>(i);
  }
  explicit Perm(std::vector<std::uint8_t> images);
  explicit Perm(const std::vector<int>& images);
  Perm(std::initializer_list<int> images) : Perm(std::vector<int>(images)) {}

  static Perm identity(int degree) { return Perm(degree); }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  bool is_identity() const;

  // (*this).compose(h) maps x to (*this)(h(x)).
  Perm compose(const Perm& h) const;
  Perm inverse() const;
  Perm power(std::int64_t k) const;

  // Conjugate by g: g^-1 * (*this) * g.
  Perm conjugated_by(const Perm& g) const;

  PointMask image_of(PointMask set) const;
  bool stabilizes(PointMask set) const { return image_of(set) == set; }

  std::int64_t order() const;  // lcm of cycle lengths
  int smallest_moved_point() const;  // -1 for the identity

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<std::uint8_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : p.images()) h = (h ^ v) * 0x100000001b3ull;
    return h;
  }
};

struct CycleData {
  // Cycles ordered by least point, each cycle starting at its least point.
  // Fixed points appear as 1-cycles.
  std::vector<std::vector<int>> cycles;
  std::vector<PointMask> cycle_masks;
  int cycle_count = 0;
  int fixed_count = 0;
  std::int64_t element_order = 1;
};

CycleData cycle_structure(const Perm& g);

// Calls fn(mask) for each of the 2^c(g) unions of cycles of g, in increasing
// order of the selector integer (bit j of the selector picks cycle j).
// fn returning false stops the iteration.
void for_each_invariant_subset(const CycleData& cd,
                               const std::function<bool(PointMask)>& fn);

// Materialized variant; throws LimitError when c(g) > 24.
std::vector<PointMask> invariant_subsets(const Perm& g);

// Unions of cycles of g with total size exactly k.
std::vector<PointMask> invariant_subsets_of_size(const CycleData& cd, int k);

}  // namespace stabforge
