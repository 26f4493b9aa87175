#include <doctest.h>

#include "stabforge/census.hpp"
#include "stabforge/speclang.hpp"

using namespace stabforge;

TEST_CASE("hit bitmap covers all of as(8)") {
  PermGroup g = parse_group("as(2,3)");
  HitBitmap bm = g0_hit_bitmap(g);
  CHECK(bm.count() == 256);
  CHECK(bm.first_clear() == ~PointMask{0});
  CHECK(bm.test(0));
  CHECK(bm.test(0b10110001));
  auto by_size = bm.counts_by_size();
  REQUIRE(by_size.size() == 9);
  CHECK(by_size[2] == 28);
  CHECK(by_size[4] == 70);

  // Thread count never changes the words.
  CHECK(g0_hit_bitmap(g, 4).words == bm.words);

  std::vector<Perm> g0 = g.elements(PermGroup::ElementFilter::OddPrimeOrder);
  CHECK(g0.size() == 104);
  int n3 = 0, n7 = 0;
  for (const Perm& p : g0) (p.order() == 3 ? n3 : n7)++;
  CHECK(n3 == 56);
  CHECK(n7 == 48);
}

TEST_CASE("2-groups leave the bitmap empty") {
  PermGroup g = parse_group("wr(cyc(2),cyc(2))");
  HitBitmap bm = g0_hit_bitmap(g);
  CHECK(bm.count() == 0);
  CHECK(bm.first_clear() == 0);
}

TEST_CASE("exhaustive census of as(8)") {
  PermGroup g = parse_group("as(8)");
  CensusTable t = structure_census(g, CensusMode{true, 0, 0}, 3);
  REQUIRE(t.rows.size() == 9);
  CHECK(t.exhaustive);
  BigInt sum = 0;
  for (const auto& row : t.rows) sum += row.total;
  CHECK(sum == 256);
  for (const auto& row : t.rows) {
    CHECK(row.examined == row.total);
    CHECK(row.hit_by_g0 == row.total);
    CHECK(row.two_group_stab == 0);
    const auto& mirror = t.rows[static_cast<std::size_t>(8 - row.size)];
    CHECK(row.hit_by_g0 == mirror.hit_by_g0);
    CHECK(row.min_stab_order == mirror.min_stab_order);
    CHECK(row.required_structure == mirror.required_structure);
  }
  CHECK(t.rows[0].min_stab_order == 168);
  CHECK(t.rows[2].min_stab_order == 6);
  CHECK(t.rows[3].min_stab_order == 3);

  CensusTable t1 = structure_census(g, CensusMode{true, 0, 0}, 1);
  for (int k = 0; k <= 8; ++k) {
    CHECK(t.rows[k].min_stab_order == t1.rows[k].min_stab_order);
    CHECK(t.rows[k].required_structure == t1.rows[k].required_structure);
  }
}

TEST_CASE("sampled census is thread-invariant") {
  PermGroup g = parse_group("wr(sym(4),sym(4))");
  CensusMode mode{false, 200, 7};
  CensusTable a = structure_census(g, mode, 1);
  CensusTable b = structure_census(g, mode, 4);
  CHECK(!a.exhaustive);
  CHECK(a.sample_count == 200);
  CHECK(a.seed == 7);
  std::int64_t examined = 0;
  for (int k = 0; k <= 16; ++k) {
    CHECK(a.rows[k].examined == b.rows[k].examined);
    CHECK(a.rows[k].hit_by_g0 == b.rows[k].hit_by_g0);
    CHECK(a.rows[k].nilpotent_stab == b.rows[k].nilpotent_stab);
    CHECK(a.rows[k].min_stab_order == b.rows[k].min_stab_order);
    examined += a.rows[k].examined;
  }
  CHECK(examined == 200);
}

TEST_CASE("sparse per-size counts at degree 32") {
  PermGroup g = parse_group("as(2,5)");
  CHECK(g.order() == 4960);
  std::vector<Perm> g0 = g.elements(PermGroup::ElementFilter::OddPrimeOrder);
  CHECK(g0.size() == 2944);
  for (const Perm& p : g0) {
    CycleData cd = cycle_structure(p);
    if (cd.element_order == 5) {
      CHECK(cd.fixed_count == 2);
    } else {
      CHECK(cd.element_order == 31);
      CHECK(cd.fixed_count == 1);
    }
  }
  auto counts = g0_hit_counts_by_size(g, {3, 4, 5});
  REQUIRE(counts.size() == 3);
  CHECK(counts[0].second == 0);
  CHECK(counts[1].second == 0);
  CHECK(counts[2].second > 0);
}

TEST_CASE("census caps") {
  PermGroup g = parse_group("as(2,5)");
  CHECK_THROWS_AS((void)g0_hit_bitmap(g), CapExceededError);
  CHECK_THROWS_AS((void)structure_census(g, CensusMode{true, 0, 0}),
                  CapExceededError);
}
