#include "stabforge/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace stabforge {

namespace {

void check_degree(std::int64_t degree, const Limits& limits) {
  if (degree < 1) throw CapError("degree must be positive");
  if (degree > limits.degree_cap || degree > kMaxDegree)
    throw CapError("degree exceeds the cap");
}

void check_order(const PermGroup& g, const BigInt& expected, const char* what) {
  if (g.order() != expected)
    throw VerificationError(std::string(what) + ": chain order " + g.order().str() +
                            " differs from the closed form " + expected.str());
}

BigInt bigint_pow(BigInt base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

PermGroup build_cyclic(int n, const Limits& limits) {
  check_degree(n, limits);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  PermGroup g(n, {Perm(img)});
  check_order(g, n, "cyclic group");
  return g;
}

PermGroup build_symmetric(int n, const Limits& limits) {
  check_degree(n, limits);
  if (n == 1) return PermGroup(1);
  std::vector<Perm> gens;
  std::vector<int> swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  gens.emplace_back(swap01);
  if (n > 2) {
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    gens.emplace_back(rot);
  }
  PermGroup g(n, std::move(gens));
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  check_order(g, fact, "symmetric group");
  return g;
}

PermGroup build_alternating(int n, const Limits& limits) {
  check_degree(n, limits);
  if (n <= 2) return PermGroup(n);
  std::vector<Perm> gens;
  std::vector<int> c3(n);
  std::iota(c3.begin(), c3.end(), 0);
  c3[0] = 1; c3[1] = 2; c3[2] = 0;
  gens.emplace_back(c3);
  if (n > 3) {
    std::vector<int> r(n);
    std::iota(r.begin(), r.end(), 0);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) r[i] = (i + 1) % n;  // n-cycle, even for odd n
    } else {
      r[0] = 0;
      for (int i = 1; i < n; ++i) r[i] = i % (n - 1) + 1;  // (n-1)-cycle on 1..n-1
    }
    gens.emplace_back(r);
  }
  PermGroup g(n, std::move(gens));
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  check_order(g, fact / 2, "alternating group");
  return g;
}

PermGroup build_affine_semilinear(int p, int m, const Limits& limits) {
  FiniteField f = FiniteField::make(p, m);
  const int q = f.q();
  check_degree(q, limits);
  std::vector<Perm> gens;
  std::vector<int> img(q);
  for (int x = 0; x < q; ++x) img[x] = f.add(x, 1);
  gens.emplace_back(img);
  if (q > 2) {
    int gamma = f.generator();
    for (int x = 0; x < q; ++x) img[x] = f.mul(gamma, x);
    gens.emplace_back(img);
  }
  if (m > 1) {
    for (int x = 0; x < q; ++x) img[x] = f.frobenius(x);
    gens.emplace_back(img);
  }
  PermGroup g(q, std::move(gens));
  check_order(g, BigInt(m) * (q - 1) * q, "affine semilinear group");
  return g;
}

PermGroup build_affine_linear(int m, int p, LinearVariant variant, const Limits& limits) {
  if (m == 1) {
    if (variant != LinearVariant::General)
      throw UnsupportedParamsError("one-dimensional special variant is trivial");
    return build_affine_semilinear(p, 1, limits);
  }
  if (m != 2 || p != 3)
    throw UnsupportedParamsError("affine linear groups supported for (m, p) = (2, 3)");
  check_degree(9, limits);

  // Points are vectors over GF(3), index = c0 + 3 c1.
  auto apply_matrix = [](int a, int b, int c, int d) {
    std::vector<int> img(9);
    for (int x = 0; x < 9; ++x) {
      int c0 = x % 3, c1 = x / 3;
      img[x] = ((a * c0 + b * c1) % 3) + 3 * ((c * c0 + d * c1) % 3);
    }
    return Perm(img);
  };
  std::vector<Perm> gens;
  std::vector<int> t1(9), t2(9);
  for (int x = 0; x < 9; ++x) {
    t1[x] = (x % 3 + 1) % 3 + 3 * (x / 3);
    t2[x] = x % 3 + 3 * ((x / 3 + 1) % 3);
  }
  gens.emplace_back(t1);
  gens.emplace_back(t2);
  gens.push_back(apply_matrix(1, 1, 0, 1));  // transvections generate SL(2,3)
  gens.push_back(apply_matrix(1, 0, 1, 1));
  if (variant == LinearVariant::General)
    gens.push_back(apply_matrix(2, 0, 0, 1));  // determinant 2
  PermGroup g(9, std::move(gens));
  check_order(g, variant == LinearVariant::General ? 432 : 216, "affine linear group");
  return g;
}

PermGroup build_wreath(const PermGroup& g1, const PermGroup& w, WreathAction action,
                       const Limits& limits) {
  const int a = g1.degree();
  const int n = w.degree();
  if (a < 1 || n < 1) throw CapError("wreath factors must have positive degree");

  std::vector<Perm> gens;
  if (action == WreathAction::Imprimitive) {
    std::int64_t degree = static_cast<std::int64_t>(a) * n;
    check_degree(degree, limits);
    const int d = static_cast<int>(degree);
    for (int block = 0; block < n; ++block)
      for (const Perm& s : g1.generators()) {
        std::vector<int> img(d);
        std::iota(img.begin(), img.end(), 0);
        for (int j = 0; j < a; ++j) img[block * a + j] = block * a + s[j];
        gens.emplace_back(img);
      }
    for (const Perm& t : w.generators()) {
      std::vector<int> img(d);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < a; ++j) img[i * a + j] = t[i] * a + j;
      gens.emplace_back(img);
    }
    PermGroup g(d, std::move(gens));
    check_order(g, bigint_pow(g1.order(), n) * w.order(), "imprimitive wreath product");
    return g;
  }

  std::int64_t degree = 1;
  for (int i = 0; i < n; ++i) {
    degree *= a;
    if (degree > kMaxDegree) throw CapError("product action degree exceeds the cap");
  }
  check_degree(degree, limits);
  const int d = static_cast<int>(degree);
  // coords[0] is the most significant digit of the point index.
  auto decode = [&](int x) {
    std::vector<int> c(n);
    for (int i = n - 1; i >= 0; --i) {
      c[i] = x % a;
      x /= a;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int x = 0;
    for (int i = 0; i < n; ++i) x = x * a + c[i];
    return x;
  };
  for (int coord = 0; coord < n; ++coord)
    for (const Perm& s : g1.generators()) {
      std::vector<int> img(d);
      for (int x = 0; x < d; ++x) {
        auto c = decode(x);
        c[coord] = s[c[coord]];
        img[x] = encode(c);
      }
      gens.emplace_back(img);
    }
  for (const Perm& t : w.generators()) {
    std::vector<int> img(d);
    for (int x = 0; x < d; ++x) {
      auto c = decode(x);
      std::vector<int> moved(n);
      for (int i = 0; i < n; ++i) moved[t[i]] = c[i];
      img[x] = encode(moved);
    }
    gens.emplace_back(img);
  }
  PermGroup g(d, std::move(gens));
  check_order(g, bigint_pow(g1.order(), n) * w.order(), "product action wreath");
  return g;
}

PermGroup disjoint_product(const PermGroup& a, const PermGroup& b, const Limits& limits) {
  std::int64_t degree = a.degree() + b.degree();
  check_degree(degree, limits);
  const int d = static_cast<int>(degree);
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < a.degree(); ++i) img[i] = g[i];
    gens.emplace_back(img);
  }
  for (const Perm& g : b.generators()) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < b.degree(); ++i) img[a.degree() + i] = a.degree() + g[i];
    gens.emplace_back(img);
  }
  PermGroup g(d, std::move(gens));
  check_order(g, a.order() * b.order(), "disjoint product");
  return g;
}

}  // namespace stabforge
