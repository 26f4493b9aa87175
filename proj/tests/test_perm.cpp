#include <doctest.h>

#include <vector>

#include "stabforge/perm.hpp"

using namespace stabforge;

namespace {

Perm cycle(int n, std::vector<int> pts) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (std::size_t i = 0; i < pts.size(); ++i)
    img[pts[i]] = pts[(i + 1) % pts.size()];
  return Perm(img);
}

}  // namespace

TEST_CASE("images, composition, inverse") {
  Perm id(5);
  CHECK(id.is_identity());
  CHECK(id.degree() == 5);
  CHECK(id.smallest_moved_point() == -1);

  Perm p = cycle(5, {0, 1, 2});
  Perm q = cycle(5, {2, 3});
  CHECK(p[0] == 1);
  CHECK(p[4] == 4);
  // compose(h) applies h first.
  CHECK(p.compose(q)[2] == 3);
  CHECK(q.compose(p)[1] == 3);
  CHECK(p.compose(p.inverse()) == id);
  CHECK(p.power(3) == id);
  CHECK(p.power(-1) == p.inverse());
  CHECK(p.order() == 3);
  CHECK(p.smallest_moved_point() == 0);
  CHECK(cycle(6, {0, 1}).compose(cycle(6, {2, 3, 4})).order() == 6);
}

TEST_CASE("conjugation relabels points") {
  Perm p = cycle(5, {0, 1, 2});
  Perm g = cycle(5, {0, 3});
  Perm c = p.conjugated_by(g);
  CHECK(c == cycle(5, {1, 2, 3}));
  CHECK(c.order() == p.order());
}

TEST_CASE("mask images") {
  Perm p = cycle(6, {0, 1, 2});
  CHECK(p.image_of(0b000011) == 0b000110);
  CHECK(p.stabilizes(0b000111));
  CHECK(!p.stabilizes(0b000011));
  CHECK(p.image_of(0) == 0);
  CHECK(p.stabilizes(full_mask(6)));
}

TEST_CASE("cycle structure") {
  Perm p = cycle(7, {0, 1, 2}).compose(cycle(7, {3, 4}));
  CycleData cd = cycle_structure(p);
  CHECK(cd.element_order == 6);
  CHECK(cd.cycle_count == 4);  // (0 1 2)(3 4)(5)(6)
  CHECK(cd.fixed_count == 2);
  CHECK(cd.cycles[0] == std::vector<int>{0, 1, 2});
  CHECK(cd.cycles[1] == std::vector<int>{3, 4});
  CHECK(cd.cycle_masks[1] == PointMask{0b0011000});
  CHECK(cycle_structure(Perm(4)).cycle_count == 4);
  CHECK(cycle_structure(Perm(4)).fixed_count == 4);
}

TEST_CASE("invariant subsets are the cycle unions") {
  Perm p = cycle(6, {0, 1, 2});  // cycles {0,1,2} {3} {4} {5}
  std::vector<PointMask> all = invariant_subsets(p);
  CHECK(all.size() == 16);
  CHECK(all.front() == 0);
  CHECK(all[1] == PointMask{0b000111});  // selector bit 0 picks the 3-cycle
  for (PointMask m : all) CHECK(p.stabilizes(m));

  // Unions of total size 3: the 3-cycle, or all three fixed points.
  CHECK(invariant_subsets_of_size(cycle_structure(p), 3).size() == 2);
  CHECK(invariant_subsets_of_size(cycle_structure(p), 2).size() == 3);
  CHECK(invariant_subsets_of_size(cycle_structure(p), 6).size() == 1);

  int seen = 0;
  for_each_invariant_subset(cycle_structure(p),
                            [&](PointMask) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("materialized invariant subsets cap at 24 cycles") {
  CHECK_THROWS_AS((void)invariant_subsets(Perm(32)), LimitError);
  CHECK(invariant_subsets(Perm(10)).size() == 1024);
}
