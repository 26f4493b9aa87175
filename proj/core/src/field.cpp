#include "stabforge/field.hpp"

#include <algorithm>
#include <map>

namespace stabforge {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Monic modulus for each supported extension, as constant coefficients
// c_0..c_{m-1}. Certificates depend on these exact polynomials.
const std::map<std::pair<int, int>, std::vector<int>>& modulus_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table{
      {{2, 2}, {1, 1}},           // x^2 + x + 1
      {{2, 3}, {1, 1, 0}},        // x^3 + x + 1
      {{3, 2}, {1, 0}},           // x^2 + 1
      {{2, 4}, {1, 1, 0, 0}},     // x^4 + x + 1
      {{5, 2}, {3, 0}},           // x^2 - 2
      {{3, 3}, {1, 2, 0}},        // x^3 + 2x + 1
      {{2, 5}, {1, 0, 1, 0, 0}},  // x^5 + x^2 + 1
  };
  return table;
}

std::vector<int> decode(int a, int p, int m) {
  std::vector<int> c(m);
  for (int i = 0; i < m; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

int encode(const std::vector<int>& c, int p, int m) {
  int a = 0;
  for (int i = m - 1; i >= 0; --i) a = a * p + c[i];
  return a;
}

// Product in GF(p)[x]/(x^m + modulus), coefficients little-endian.
int poly_mul(int a, int b, int p, int m, const std::vector<int>& mod) {
  std::vector<int> ca = decode(a, p, m), cb = decode(b, p, m);
  std::vector<int> prod(2 * m - 1, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  for (int d = 2 * m - 2; d >= m; --d) {
    int lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    // x^d = x^{d-m} * x^m = -x^{d-m} * (c_{m-1}x^{m-1} + ... + c_0)
    for (int i = 0; i < m; ++i)
      prod[d - m + i] = ((prod[d - m + i] - lead * mod[i]) % p + p) % p;
  }
  prod.resize(m);
  return encode(prod, p, m);
}

// Evaluate the modulus at x in GF(p).
int eval_modulus(int x, int p, const std::vector<int>& mod) {
  int m = static_cast<int>(mod.size());
  int v = 1;  // leading monic term accumulates first
  for (int i = m - 1; i >= 0; --i) v = (v * x + mod[i]) % p;
  return v;
}

}  // namespace

FiniteField FiniteField::make(int p, int m) {
  if (!is_prime(p)) throw UnsupportedFieldError("characteristic must be prime");
  if (m < 1) throw UnsupportedFieldError("extension degree must be positive");
  if (m == 1 && p > 61)
    throw UnsupportedFieldError("prime fields supported up to p = 61");

  FiniteField f;
  f.p_ = p;
  f.m_ = m;
  std::int64_t q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  if (q > kMaxDegree) throw UnsupportedFieldError("field size exceeds the degree cap");
  f.q_ = static_cast<int>(q);

  if (m >= 2) {
    auto it = modulus_table().find({p, m});
    if (it == modulus_table().end())
      throw UnsupportedFieldError("no modulus in the built-in table for this field");
    f.modulus_ = it->second;
    // Degree 2 and 3 are irreducible iff rootless; degrees 4 and 5 also need
    // no irreducible quadratic factor, checked by trial division.
    for (int x = 0; x < p; ++x)
      if (eval_modulus(x, p, f.modulus_) == 0)
        throw FieldError("table modulus has a root");
    if (m >= 4) {
      for (int c1 = 0; c1 < p; ++c1)
        for (int c0 = 0; c0 < p; ++c0) {
          bool quad_has_root = false;
          for (int x = 0; x < p; ++x)
            if (((x * x + c1 * x + c0) % p) == 0) { quad_has_root = true; break; }
          if (quad_has_root) continue;
          // Divide the modulus by x^2 + c1 x + c0 over GF(p).
          std::vector<int> rem(f.modulus_);
          rem.push_back(1);  // monic leading coefficient
          for (int d = m; d >= 2; --d) {
            int coef = rem[d];
            rem[d] = 0;
            rem[d - 1] = ((rem[d - 1] - coef * c1) % p + p) % p;
            rem[d - 2] = ((rem[d - 2] - coef * c0) % p + p) % p;
          }
          if (rem[0] == 0 && rem[1] == 0)
            throw FieldError("table modulus has a quadratic factor");
        }
    }
  }

  f.neg_.resize(f.q_);
  f.add_.resize(f.q_ * f.q_);
  f.mul_.resize(f.q_ * f.q_);
  for (int a = 0; a < f.q_; ++a) {
    auto ca = decode(a, p, m);
    for (auto& c : ca) c = (p - c) % p;
    f.neg_[a] = encode(ca, p, m);
    for (int b = 0; b < f.q_; ++b) {
      auto s = decode(a, p, m);
      auto cb = decode(b, p, m);
      for (int i = 0; i < m; ++i) s[i] = (s[i] + cb[i]) % p;
      f.add_[a * f.q_ + b] = encode(s, p, m);
      f.mul_[a * f.q_ + b] = m == 1 ? (a * b) % p : poly_mul(a, b, p, m, f.modulus_);
    }
  }

  f.generator_ = -1;
  for (int a = 1; a < f.q_; ++a)
    if (f.multiplicative_order(a) == f.q_ - 1) { f.generator_ = a; break; }
  if (f.generator_ < 0)
    throw FieldError("multiplicative group is not cyclic of order q-1");
  return f;
}

int FiniteField::pow(int a, std::int64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  std::int64_t r = e % (q_ - 1);
  if (r < 0) r += q_ - 1;
  int acc = 1, base = a;
  while (r > 0) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw FieldError("division by zero");
  return pow(a, q_ - 2);
}

std::int64_t FiniteField::multiplicative_order(int a) const {
  if (a == 0) throw FieldError("zero has no multiplicative order");
  std::int64_t o = 1;
  int x = a;
  while (x != 1) {
    x = mul(x, a);
    ++o;
    if (o > q_) throw FieldError("order computation did not terminate");
  }
  return o;
}

}  // namespace stabforge
