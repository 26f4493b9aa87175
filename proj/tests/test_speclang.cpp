#include <doctest.h>

#include <vector>

#include "stabforge/speclang.hpp"

using namespace stabforge;

TEST_CASE("group expressions evaluate") {
  CHECK(parse_group("AS(2,3)").order() == 168);
  CHECK(parse_group("as(8)").order() == 168);       // prime-power shorthand
  CHECK(parse_group(" aS ( 2 , 3 ) ").order() == 168);
  CHECK(parse_group("AGL(1,5)").order() == 20);
  CHECK(parse_group("asl(2,3)").order() == 216);
  CHECK(parse_group("agl(2,3)").order() == 432);
  CHECK(parse_group("Sym(4)").order() == 24);
  CHECK(parse_group("alt(5)").order() == 60);
  CHECK(parse_group("cyc(6)").order() == 6);
  CHECK(parse_group("wr(Sym(4),Sym(4))").degree() == 16);
  CHECK(parse_group("prodwr(Sym(3), Sym(3))").order() == 1296);
  CHECK(parse_group("prodwr(Sym(3), Sym(3))").degree() == 27);
  CHECK(parse_group("disjoint(sym(3),sym(4))").order() == 144);
  CHECK(parse_group("wr(cyc(2), agl(1,11))").degree() == 22);
}

TEST_CASE("explicit generator lists") {
  PermGroup g = parse_group("perm(5; (1 2 3 4 5), (1 2))");
  CHECK(g.degree() == 5);
  CHECK(g.order() == 120);
  CHECK(parse_group("perm(5; (1 2 3)(4 5))").order() == 6);
  CHECK(parse_group("perm(5; id)").order() == 1);
  CHECK(parse_group("perm(3; ( ))").order() == 1);
}

TEST_CASE("canonical formatting round-trips the AST") {
  GroupExpr e = parse_group_spec("Wr(AS(2,3), prodwr(sym(3),CYC(2)))");
  std::string s = format_group_expr(e);
  CHECK(s == "wr(as(2,3),prodwr(sym(3),cyc(2)))");
  CHECK(parse_group_spec(s) == e);
  CHECK(parse_group_spec("as(8)") == parse_group_spec("as(2,3)"));
  GroupExpr x = parse_group_spec("perm(5; (1 2 3)(4 5), id)");
  CHECK(parse_group_spec(format_group_expr(x)) == x);
}

TEST_CASE("cycle notation round-trips") {
  Perm p = parse_cycle_notation("(1 2 3)(4 5)", 5);
  CHECK(p.order() == 6);
  CHECK(cycle_structure(p).cycle_count == 2);
  CHECK(format_cycle_notation(p) == "(1 2 3)(4 5)");
  CHECK(format_cycle_notation(parse_cycle_notation("(3 1 2)", 5)) == "(1 2 3)");
  CHECK(format_cycle_notation(Perm(7)) == "id");
  CHECK(parse_cycle_notation("id", 5) == Perm(5));
  CHECK(parse_cycle_notation("( )", 4) == Perm(4));

  for (int d = 1; d <= 10; ++d)
    for (int t = 0; t < 50; ++t) {
      std::vector<int> img(d);
      for (int i = 0; i < d; ++i) img[i] = i;
      for (int i = d - 1; i > 0; --i)
        std::swap(img[i], img[mix64(42, t * 100 + i) % (i + 1)]);
      Perm r{std::vector<int>(img)};
      CHECK(parse_cycle_notation(format_cycle_notation(r), d) == r);
    }
}

TEST_CASE("rejections, one per production") {
  CHECK_THROWS_AS((void)parse_group_spec("nope(3)"), ParseError);
  CHECK_THROWS_AS((void)parse_group_spec("sym(4"), ParseError);
  CHECK_THROWS_AS((void)parse_group_spec("sym(4))"), ParseError);
  CHECK_THROWS_AS((void)parse_group_spec("sym()"), ParseError);
  CHECK_THROWS_AS((void)parse_group_spec("wr(sym(3))"), ParseError);
  CHECK_THROWS_AS((void)parse_group_spec("wr(3,sym(3))"), ParseError);
  CHECK_THROWS_AS((void)parse_group_spec("perm(4 (1 2))"), ParseError);
  CHECK_THROWS_AS((void)parse_group_spec("perm(99; (1 2))"), RangeError);
  CHECK_THROWS_AS((void)parse_group_spec("as(12)"), UnsupportedFieldError);
  CHECK_THROWS_AS((void)parse_cycle_notation("(1 6)", 5), RangeError);
  CHECK_THROWS_AS((void)parse_cycle_notation("(0 1)", 5), RangeError);
  CHECK_THROWS_AS((void)parse_cycle_notation("(1 2)(2 3)", 5), RepeatError);
  CHECK_THROWS_AS((void)parse_cycle_notation("(1 1)", 5), RepeatError);
  CHECK_THROWS_AS((void)parse_cycle_notation("(1 2) junk", 5), ParseError);
  CHECK_THROWS_AS((void)parse_cycle_notation("", 5), ParseError);
}

TEST_CASE("error positions point at the offending token") {
  try {
    (void)parse_group_spec("wr(sym(3), nope(2))");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 11);
  }
  try {
    (void)parse_cycle_notation("(1 99)", 5);
    FAIL("expected RangeError");
  } catch (const RangeError& e) {
    CHECK(e.position == 3);
  }
}
