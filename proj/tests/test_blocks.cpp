#include <doctest.h>

#include <vector>

#include "stabforge/blocks.hpp"
#include "stabforge/catalog.hpp"

using namespace stabforge;

TEST_CASE("primitivity of catalog entries") {
  CHECK(is_primitive(build_affine_semilinear(2, 3)));
  CHECK(is_primitive(build_affine_semilinear(3, 2)));
  CHECK(is_primitive(build_affine_linear(2, 3, LinearVariant::Special)));
  CHECK(is_primitive(build_symmetric(5)));
  CHECK(is_primitive(build_cyclic(7)));
  CHECK(!is_primitive(build_cyclic(6)));
  CHECK(!is_primitive(
      build_wreath(build_symmetric(4), build_symmetric(4), WreathAction::Imprimitive)));
  // Product action over a primitive non-regular base is primitive.
  CHECK(is_primitive(
      build_wreath(build_symmetric(3), build_symmetric(3), WreathAction::Product)));
}

TEST_CASE("minimal blocks of a cyclic group") {
  PermGroup c6 = build_cyclic(6);
  BlockSystem b = minimal_blocks(c6, 0, 2);
  CHECK(b.block_count() == 2);
  CHECK(b.block_size() == 3);
  CHECK(b.blocks[0] == std::vector<int>{0, 2, 4});
  CHECK(b.blocks[1] == std::vector<int>{1, 3, 5});

  BlockSystem b3 = minimal_blocks(c6, 0, 3);
  CHECK(b3.block_count() == 3);
  CHECK(b3.blocks[0] == std::vector<int>{0, 3});

  Perm rot = c6.generators()[0];
  Perm q = action_on_blocks(rot, b3);
  CHECK(q.degree() == 3);
  CHECK(q.order() == 3);
}

TEST_CASE("tower over an imprimitive wreath") {
  PermGroup g = build_wreath(build_symmetric(4), build_symmetric(4),
                             WreathAction::Imprimitive);
  PrimitiveTower t = primitive_quotient(g);
  CHECK(!t.primitive);
  CHECK(t.system.block_count() == 4);
  CHECK(t.system.block_size() == 4);
  CHECK(t.system.blocks[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(t.w.order() == 24);
  CHECK(is_primitive(t.w));
  CHECK(t.constituent.degree() == 4);
  CHECK(t.constituent.order() == 24);
  REQUIRE(t.quotient_gens.size() == g.generators().size());
  for (std::size_t i = 0; i < t.quotient_gens.size(); ++i)
    CHECK(t.quotient_gens[i] == action_on_blocks(g.generators()[i], t.system));
  REQUIRE(t.transversals.size() == 4);
  PointMask m0 = points_to_mask(t.system.blocks[0]);
  for (int i = 0; i < 4; ++i) {
    CHECK(g.contains(t.transversals[i]));
    CHECK(t.transversals[i].image_of(m0) == points_to_mask(t.system.blocks[i]));
  }
  CHECK(t.transversals[0] == Perm(16));
}

TEST_CASE("tower over a primitive group is the group itself") {
  PermGroup g = build_affine_semilinear(2, 3);
  PrimitiveTower t = primitive_quotient(g);
  CHECK(t.primitive);
  CHECK(t.system.is_singletons());
  CHECK(t.w.degree() == 8);
  CHECK(t.w.order() == 168);
  REQUIRE(t.transversals.size() == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(g.contains(t.transversals[i]));
    CHECK(t.transversals[i][0] == i);
  }
}

TEST_CASE("tower over C6 refines to a primitive block action") {
  PermGroup c6 = build_cyclic(6);
  PrimitiveTower t = primitive_quotient(c6);
  CHECK(!t.primitive);
  bool two_or_three = t.system.block_count() == 2 || t.system.block_count() == 3;
  CHECK(two_or_three);
  CHECK(is_primitive(t.w));
  CHECK(t.w.degree() == t.system.block_count());
}

TEST_CASE("block constituent with transversals") {
  PermGroup c6 = build_cyclic(6);
  BlockSystem b3 = minimal_blocks(c6, 0, 3);
  auto [cons, trans] = block_constituent(c6, b3);
  CHECK(cons.degree() == 2);
  CHECK(cons.order() == 2);  // stab of {0,3} in C6 is {e, r^3}
  REQUIRE(trans.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(c6.contains(trans[i]));
}
