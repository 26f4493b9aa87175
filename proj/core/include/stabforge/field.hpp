#pragma once

#include <cstdint>
#include <vector>

#include "stabforge/types.hpp"

namespace stabforge {

// Bumped whenever the fixed modulus table changes; recorded in certificates
// so replays can detect a mismatched element indexing.
inline constexpr int kModulusTableVersion = 1;

// GF(p^m) with elements indexed 0..p^m-1 as little-endian base-p coefficient
// vectors; index 1 is the field's one. Arithmetic is table-driven (q <= 64).
class FiniteField {
 public:
  // Fixed modulus table for m >= 2; m = 1 accepts any prime p <= 61.
  static FiniteField make(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  // Constant coefficients c_0..c_{m-1} of the monic modulus x^m + sum c_i x^i
  // (empty when m = 1).
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int pow(int a, std::int64_t e) const;
  int inv(int a) const;  // FieldError on zero
  int frobenius(int a) const { return pow(a, p_); }

  // Smallest element index of multiplicative order q-1; verified at build.
  int generator() const { return generator_; }
  std::int64_t multiplicative_order(int a) const;

 private:
  FiniteField() = default;
  int p_ = 0, m_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_;
  int generator_ = 0;
};

}  // namespace stabforge
