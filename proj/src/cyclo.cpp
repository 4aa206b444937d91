#include "ffinc/cyclo.hpp"

#include <cmath>
#include <numbers>

namespace ffinc {

CycInt::CycInt(uint32_t p) : p_(p), c_(p - 1) {}

CycInt CycInt::from_integer(uint32_t p, BigInt n) {
  CycInt r(p);
  r.c_[0] = std::move(n);
  return r;
}

CycInt CycInt::root_power(uint32_t p, uint32_t t) {
  t %= p;
  CycInt r(p);
  if (t < p - 1) {
    r.c_[t] = 1;
  } else {
    for (auto& c : r.c_) c = -1;
  }
  return r;
}

CycInt CycInt::from_exponent_coeffs(uint32_t p, std::vector<BigInt> by_exponent) {
  if (by_exponent.size() != p) throw RootOrderMismatch(by_exponent.size(), p);
  CycInt r(p);
  const BigInt& top = by_exponent[p - 1];
  for (uint32_t j = 0; j + 1 < p; ++j) r.c_[j] = by_exponent[j] - top;
  return r;
}

void CycInt::check_order(const CycInt& o) const {
  if (p_ != o.p_) throw RootOrderMismatch(p_, o.p_);
}

CycInt CycInt::operator+(const CycInt& o) const {
  check_order(o);
  CycInt r(p_);
  for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j] + o.c_[j];
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_order(o);
  for (size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
  check_order(o);
  CycInt r(p_);
  for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j] - o.c_[j];
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(p_);
  for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = -c_[j];
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  check_order(o);
  // Convolve on exponents mod p, then eliminate zeta^(p-1).
  std::vector<BigInt> acc(p_);
  for (uint32_t i = 0; i + 1 < p_; ++i) {
    if (c_[i] == 0) continue;
    for (uint32_t j = 0; j + 1 < p_; ++j) {
      if (o.c_[j] == 0) continue;
      acc[(i + j) % p_] += c_[i] * o.c_[j];
    }
  }
  return from_exponent_coeffs(p_, std::move(acc));
}

CycInt CycInt::conj() const {
  std::vector<BigInt> acc(p_);
  acc[0] = c_[0];
  for (uint32_t j = 1; j + 1 < p_; ++j) acc[p_ - j] = c_[j];
  return from_exponent_coeffs(p_, std::move(acc));
}

bool CycInt::operator==(const CycInt& o) const {
  check_order(o);
  return c_ == o.c_;
}

bool CycInt::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

std::optional<BigInt> CycInt::as_integer() const {
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return std::nullopt;
  return c_[0];
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p_);
    acc += c_[j].convert_to<double>() * std::complex<double>{std::cos(angle), std::sin(angle)};
  }
  return acc;
}

std::string CycInt::to_string() const {
  std::string s = "[";
  for (size_t j = 0; j < c_.size(); ++j) {
    if (j) s += ", ";
    s += c_[j].str();
  }
  s += "]";
  return s;
}

// --- ExactRadical ------------------------------------------------------------

void ExactRadical::normalize() {
  i_power &= 3;
  if (i_power >= 2) {
    sign = -sign;
    i_power -= 2;
  }
}

ExactRadical ExactRadical::times(const ExactRadical& o) const {
  if (prime_base != o.prime_base) throw RootOrderMismatch(prime_base, o.prime_base);
  ExactRadical r{sign * o.sign, i_power + o.i_power, prime_base, half_exponent + o.half_exponent};
  r.normalize();
  return r;
}

ExactRadical ExactRadical::power(uint32_t e) const {
  ExactRadical r{1, 0, prime_base, 0};
  for (uint32_t i = 0; i < e; ++i) r = r.times(*this);
  return r;
}

BigInt ExactRadical::rational_value() const {
  if (!is_rational_integer()) throw UnsupportedCase("radical is not a rational integer");
  return sign * qpow(prime_base, half_exponent / 2);
}

std::complex<double> ExactRadical::to_complex() const {
  double mag = std::pow(static_cast<double>(prime_base), half_exponent / 2.0) * sign;
  return i_power == 0 ? std::complex<double>{mag, 0.0} : std::complex<double>{0.0, mag};
}

std::string ExactRadical::to_string() const {
  std::string s = sign < 0 ? "-" : "+";
  if (i_power) s += "i*";
  s += std::to_string(prime_base) + "^(" + std::to_string(half_exponent) + "/2)";
  return s;
}

// --- character sums ----------------------------------------------------------

CycInt chi(const FieldCtx& F, Fe a) { return CycInt::root_power(F.p(), F.trace(a)); }

CycInt gauss_direct(const FieldCtx& F, Fe a) {
  if (a == F.zero()) throw ZeroParameter("Gauss sum parameter a");
  std::vector<BigInt> acc(F.p());
  for (uint64_t s = 1; s < F.q(); ++s) {
    Fe fs{static_cast<uint32_t>(s)};
    acc[F.trace_mul(a, fs)] += F.eta(fs);
  }
  return CycInt::from_exponent_coeffs(F.p(), std::move(acc));
}

ExactRadical gauss_explicit(uint32_t p, uint32_t ell) {
  if (p == 2) throw EvenCharacteristic();
  if (p < 3 || ell < 1) throw NonPrime(p);
  {
    bool prime = p >= 2;
    for (uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) throw NonPrime(p);
  }
  ExactRadical g;
  g.sign = (ell - 1) % 2 == 0 ? 1 : -1;
  g.i_power = (p % 4 == 3) ? static_cast<int>(ell % 4) : 0;
  g.prime_base = p;
  g.half_exponent = ell;
  g.normalize();
  return g;
}

CompleteSquareResult complete_square_sum(const FieldCtx& F, Fe a, Fe b) {
  if (a == F.zero()) throw ZeroParameter("quadratic coefficient a");
  std::vector<BigInt> acc(F.p());
  for (uint64_t s = 0; s < F.q(); ++s) {
    Fe fs{static_cast<uint32_t>(s)};
    Fe arg = F.add(F.mul(a, F.mul(fs, fs)), F.mul(b, fs));
    acc[F.trace(arg)] += 1;
  }
  CycInt lhs = CycInt::from_exponent_coeffs(F.p(), std::move(acc));

  Fe minus4a = F.neg(F.mul(F.from_residue(4), a));
  Fe shift = F.mul(F.mul(b, b), F.inv(minus4a));
  CycInt rhs = CycInt::from_integer(F.p(), F.eta(a)) * gauss_direct(F, F.one()) * chi(F, shift);
  bool equal = lhs == rhs;
  return {std::move(lhs), std::move(rhs), equal};
}

CycInt orthogonality_sum(const FieldCtx& F, const Fv& beta, const Budget& budget) {
  uint32_t k = static_cast<uint32_t>(beta.size());
  std::vector<BigInt> acc(F.p());
  for_each_vector(
      F, k,
      [&](std::span<const Fe> alpha) {
        uint32_t t = 0;
        for (uint32_t j = 0; j < k; ++j) t += F.trace_mul(beta[j], alpha[j]);
        acc[t % F.p()] += 1;
      },
      budget);
  return CycInt::from_exponent_coeffs(F.p(), std::move(acc));
}

}  // namespace ffinc
