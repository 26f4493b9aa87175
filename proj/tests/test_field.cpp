#include <doctest.h>

#include "stabforge/field.hpp"

using namespace stabforge;

TEST_CASE("prime fields") {
  FiniteField f5 = FiniteField::make(5, 1);
  CHECK(f5.q() == 5);
  CHECK(f5.generator() == 2);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.sub(1, 3) == 3);
  CHECK(f5.neg(2) == 3);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.pow(2, 4) == 1);
  for (int a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inv(a)) == 1);
  CHECK(f5.frobenius(3) == f5.pow(3, 5));
  CHECK(f5.modulus().empty());
}

TEST_CASE("extension fields from the fixed modulus table") {
  FiniteField f8 = FiniteField::make(2, 3);
  CHECK(f8.q() == 8);
  CHECK(f8.multiplicative_order(f8.generator()) == 7);
  int x = f8.generator();
  for (int i = 1; i < 7; ++i) x = f8.mul(x, f8.generator());
  CHECK(x == 1);

  FiniteField f9 = FiniteField::make(3, 2);
  CHECK(f9.q() == 9);
  for (int a = 1; a < 9; ++a) CHECK(f9.mul(a, f9.inv(a)) == 1);
  // Frobenius is an automorphism of order m.
  for (int a = 0; a < 9; ++a) {
    for (int b = 0; b < 9; ++b)
      CHECK(f9.frobenius(f9.mul(a, b)) == f9.mul(f9.frobenius(a), f9.frobenius(b)));
    CHECK(f9.frobenius(f9.frobenius(a)) == a);
  }

  CHECK(FiniteField::make(3, 3).multiplicative_order(
            FiniteField::make(3, 3).generator()) == 26);
  CHECK(FiniteField::make(2, 5).multiplicative_order(
            FiniteField::make(2, 5).generator()) == 31);
  CHECK(FiniteField::make(2, 4).q() == 16);
  CHECK(FiniteField::make(5, 2).q() == 25);
}

TEST_CASE("element indexing is little-endian base p") {
  FiniteField f9 = FiniteField::make(3, 2);
  // Indices 0..2 are the prime subfield.
  CHECK(f9.add(1, 1) == 2);
  CHECK(f9.add(2, 1) == 0);
  CHECK(f9.mul(2, 2) == 1);
  // Index 3 is x; adding the constant 1 gives x + 1 = index 4.
  CHECK(f9.add(3, 1) == 4);
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(FiniteField::make(4, 1), UnsupportedFieldError);
  CHECK_THROWS_AS(FiniteField::make(6, 2), UnsupportedFieldError);
  CHECK_THROWS_AS(FiniteField::make(2, 7), UnsupportedFieldError);  // q > 64
  CHECK_THROWS_AS(FiniteField::make(67, 1), UnsupportedFieldError);
  FiniteField f4 = FiniteField::make(2, 2);
  CHECK_THROWS_AS((void)f4.inv(0), FieldError);
}

TEST_CASE("modulus table version is pinned") {
  CHECK(kModulusTableVersion == 1);
}
