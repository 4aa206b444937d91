#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffinc/bigint.hpp"
#include "ffinc/errors.hpp"
#include "ffinc/field.hpp"

namespace ffinc {

// Exact element of Z[zeta_p], p an odd prime. Stored on the power basis
// 1, zeta, ..., zeta^(p-2); zeta^(p-1) is rewritten as -(1 + zeta + ... +
// zeta^(p-2)) eagerly, so equal values have equal coefficient vectors.
class CycInt {
 public:
  static CycInt zero(uint32_t p) { return CycInt(p); }
  static CycInt from_integer(uint32_t p, BigInt n);
  // zeta_p^t for t in [0, p).
  static CycInt root_power(uint32_t p, uint32_t t);
  // Reduces a vector of coefficients on exponents 0..p-1 (one per p-th root).
  static CycInt from_exponent_coeffs(uint32_t p, std::vector<BigInt> by_exponent);

  uint32_t root_order() const { return p_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt& operator+=(const CycInt& o);
  bool operator==(const CycInt& o) const;
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  // zeta -> zeta^(p-1), i.e. complex conjugation.
  CycInt conj() const;

  bool is_zero() const;
  // The value as a rational integer, when it is one.
  std::optional<BigInt> as_integer() const;

  // Floating evaluation at zeta_p = exp(2*pi*i/p); display and phase checks
  // only, never part of an exact assertion.
  std::complex<double> to_complex() const;

  std::string to_string() const;  // "[c0, c1, ...]"

 private:
  explicit CycInt(uint32_t p);
  void check_order(const CycInt& o) const;

  uint32_t p_;
  std::vector<BigInt> c_;  // size p-1
};

// Symbolic value sign * i^i_power * p^(half_exponent/2). Holds Gauss sums and
// their powers exactly, including the irrational ones.
struct ExactRadical {
  int sign = 1;                // +1 or -1
  int i_power = 0;             // 0 or 1 once normalized (i^2 folds into sign)
  uint32_t prime_base = 3;     // the p whose half-powers are taken
  uint32_t half_exponent = 0;  // value includes p^(half_exponent/2)

  void normalize();
  ExactRadical times(const ExactRadical& o) const;
  ExactRadical power(uint32_t e) const;

  bool is_rational_integer() const { return i_power == 0 && half_exponent % 2 == 0; }
  BigInt rational_value() const;  // valid when is_rational_integer()

  std::complex<double> to_complex() const;
  std::string to_string() const;
  bool operator==(const ExactRadical& o) const = default;
};

// --- character sums ----------------------------------------------------------

// The canonical additive character: chi(a) = zeta_p^Tr(a).
CycInt chi(const FieldCtx& F, Fe a);

// Gauss sum: sum over nonzero s of eta(s) * chi(a*s). Requires a != 0.
CycInt gauss_direct(const FieldCtx& F, Fe a);

// Closed form of the Gauss sum for parameter 1 over GF(p^ell).
ExactRadical gauss_explicit(uint32_t p, uint32_t ell);

struct CompleteSquareResult {
  CycInt lhs;  // sum over s of chi(a*s^2 + b*s)
  CycInt rhs;  // eta(a) * G_1 * chi(b^2 / (-4a))
  bool equal;
};

// The completed-square evaluation of the quadratic character sum; a != 0.
CompleteSquareResult complete_square_sum(const FieldCtx& F, Fe a, Fe b);

// Sum of chi(beta . alpha) over all alpha in F_q^k, computed by enumeration.
CycInt orthogonality_sum(const FieldCtx& F, const Fv& beta, const Budget& budget = {});

}  // namespace ffinc
