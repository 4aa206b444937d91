#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ffinc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt bigint_pow(const BigInt& base, uint64_t e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline BigInt qpow(uint64_t q, uint64_t e) { return bigint_pow(BigInt(q), e); }

// a <= b + c*sqrt(r) with a, b, c, r integers and c, r >= 0, decided exactly.
inline bool le_plus_sqrt(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& r) {
  if (a <= b) return true;
  BigInt d = a - b;  // positive
  return d * d <= c * c * r;
}

// |a - b| <= c*sqrt(r), exactly.
inline bool abs_diff_le_sqrt(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& r) {
  BigInt d = a >= b ? a - b : b - a;
  return d * d <= c * c * r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace ffinc
