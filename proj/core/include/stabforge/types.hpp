#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stabforge {

using BigInt = boost::multiprecision::cpp_int;

// A subset of the permuted points {0, ..., degree-1} as a bitmask.
// Bit i set means point i is in the set. This caps the supported degree at 64.
using PointMask = std::uint64_t;

inline constexpr int kMaxDegree = 64;
inline constexpr std::int64_t kDefaultElemCap = 1'000'000;

struct Limits {
  int degree_cap = kMaxDegree;
  std::int64_t elem_cap = kDefaultElemCap;
};

inline PointMask full_mask(int degree) {
  return degree >= 64 ? ~PointMask{0} : (PointMask{1} << degree) - 1;
}

inline bool mask_contains(PointMask m, int point) { return (m >> point) & 1u; }

inline int mask_size(PointMask m) { return std::popcount(m); }

inline std::vector<int> mask_points(PointMask m) {
  std::vector<int> pts;
  while (m) {
    pts.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return pts;
}

template <typename It>
PointMask points_to_mask(It first, It last) {
  PointMask m = 0;
  for (; first != last; ++first) m |= PointMask{1} << *first;
  return m;
}

inline PointMask points_to_mask(const std::vector<int>& pts) {
  return points_to_mask(pts.begin(), pts.end());
}

// Counter-based generator: stateless, identical stream for a given (seed, index)
// regardless of how the index range is partitioned across workers.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatchError : Error { using Error::Error; };
struct CapExceededError : Error { using Error::Error; };    // enumeration cap
struct NotTransitiveError : Error { using Error::Error; };
struct InvalidSystemError : Error { using Error::Error; };
struct NotFoundError : Error { using Error::Error; };
struct NotSolvableError : Error { using Error::Error; };
struct VerificationError : Error { using Error::Error; };
struct LimitError : Error { using Error::Error; };          // internal series/step caps

// Parameter/degree caps and unsupported constructions (CLI exit code 2 family).
struct CapError : Error { using Error::Error; };
struct UnsupportedFieldError : CapError { using CapError::CapError; };
struct UnsupportedParamsError : CapError { using CapError::CapError; };

struct ParseError : Error {
  ParseError(std::string msg, std::size_t pos, std::string expect)
      : Error(std::move(msg)), position(pos), expected(std::move(expect)) {}
  std::size_t position;
  std::string expected;
};
struct RangeError : ParseError { using ParseError::ParseError; };
struct RepeatError : ParseError { using ParseError::ParseError; };

struct FieldError : Error { using Error::Error; };          // division by zero etc.

inline bool is_power_of_two(BigInt n) {
  if (n <= 0) return false;
  while ((n & 1) == 0) n >>= 1;
  return n == 1;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace stabforge
