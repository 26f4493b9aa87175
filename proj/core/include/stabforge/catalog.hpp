#pragma once

#include "stabforge/field.hpp"
#include "stabforge/group.hpp"

namespace stabforge {

PermGroup build_cyclic(int n, const Limits& limits = {});
PermGroup build_symmetric(int n, const Limits& limits = {});
PermGroup build_alternating(int n, const Limits& limits = {});

// Affine semilinear group on GF(p^m): translations, a verified multiplicative
// generator, and the Frobenius. Order checked against m(p^m - 1)p^m. With
// m = 1 this is the full affine group of the prime field, order p(p-1).
PermGroup build_affine_semilinear(int p, int m, const Limits& limits = {});

enum class LinearVariant { General, Special };

// Affine linear groups on GF(p)^m: translations extended by GL or SL.
// Supported: (m, p) = (2, 3) for both variants, and (1, p) general (the
// Frobenius group of order p(p-1), same as build_affine_semilinear(p, 1)).
PermGroup build_affine_linear(int m, int p, LinearVariant variant,
                              const Limits& limits = {});

enum class WreathAction { Imprimitive, Product };

// Imprimitive: degree a*n on n consecutive blocks of g1's points. Product:
// degree a^n on n-tuples encoded most-significant-coordinate-first in radix
// a; the base group acts coordinatewise and w permutes coordinates. Order
// checked against |G1|^n |W|.
PermGroup build_wreath(const PermGroup& g1, const PermGroup& w, WreathAction action,
                       const Limits& limits = {});

// Action on the disjoint union, a's points first.
PermGroup disjoint_product(const PermGroup& a, const PermGroup& b,
                           const Limits& limits = {});

}  // namespace stabforge
