#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ffinc/errors.hpp"

namespace ffinc {

// Element of GF(p^ell), stored as its enumeration index: the polynomial-basis
// coefficient vector (c_0, ..., c_{ell-1}) encoded as c_0 + c_1*p + ... .
// Index order is the canonical element order used everywhere (enumeration,
// canonical square roots, modulus search).
struct Fe {
  uint32_t idx = 0;
  friend bool operator==(Fe, Fe) = default;
  friend auto operator<=>(Fe, Fe) = default;
};

using Fv = std::vector<Fe>;  // vector over the field, length = ambient dimension

// A concrete finite field GF(p^ell) with odd p. Immutable after construction;
// all operations are const and safe to call concurrently.
class FieldCtx {
 public:
  struct Options {
    // q*q lookup tables (mul, trace-of-product) are built when q <= threshold.
    // Purely a speed knob; results never depend on it.
    uint64_t table_threshold = 2048;
  };

  uint32_t p() const { return p_; }
  uint32_t ell() const { return ell_; }
  uint64_t q() const { return q_; }

  // Modulus coefficients in ascending powers, size ell+1, monic. Empty for
  // prime fields (ell == 1).
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }

  // Embedding of the integer n (mod p) into the prime subfield.
  Fe from_residue(uint64_t n) const { return Fe{static_cast<uint32_t>(n % p_)}; }

  Fe from_coeffs(std::span<const uint32_t> coeffs) const;
  std::vector<uint32_t> coeffs(Fe a) const;

  Fe element(uint64_t index) const;

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe mul(Fe a, Fe b) const;
  Fe square(Fe a) const { return mul(a, a); }
  Fe inv(Fe a) const;  // DivisionByZero on 0
  Fe pow(Fe a, uint64_t e) const;

  // Absolute trace to Z_p: a + a^p + ... + a^(p^(ell-1)), returned as the
  // residue in [0, p).
  uint32_t trace(Fe a) const;

  // Quadratic character: +1 on nonzero squares, -1 on non-squares, 0 at 0.
  int eta(Fe a) const { return eta_[a.idx]; }

  // Canonical square root: the smaller of {r, -r} in element order, or
  // nullopt when eta(a) = -1. sqrt(0) = 0.
  std::optional<Fe> sqrt(Fe a) const;

  // Trace of a product, the inner kernel of every character sum. Values lie
  // in [0, p).
  uint32_t trace_mul(Fe a, Fe b) const {
    if (!tr_mul_.empty()) return tr_mul_[static_cast<size_t>(a.idx) * q_ + b.idx];
    return trace(mul(a, b));
  }
  const uint16_t* trace_mul_table() const { return tr_mul_.empty() ? nullptr : tr_mul_.data(); }

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;
  FieldCtx(FieldCtx&&) = default;
  FieldCtx& operator=(FieldCtx&&) = default;

 private:
  friend FieldCtx mk_field(uint32_t, uint32_t, std::optional<std::vector<uint32_t>>,
                           FieldCtx::Options);
  FieldCtx() = default;

  std::vector<uint32_t> poly_mul_mod(std::span<const uint32_t> a,
                                     std::span<const uint32_t> b) const;
  Fe mul_no_table(Fe a, Fe b) const;
  void build_tables();

  uint32_t p_ = 0;
  uint32_t ell_ = 0;
  uint64_t q_ = 0;
  std::vector<uint32_t> modulus_;      // ascending powers, monic; empty for ell == 1
  std::vector<uint32_t> trace_basis_;  // trace of x^j for j < ell, as residues

  std::vector<int8_t> eta_;          // size q
  std::vector<uint32_t> sqrt_;       // size q, UINT32_MAX = no root
  std::vector<uint32_t> trace_tab_;  // size q
  std::vector<uint32_t> mul_tab_;    // size q*q when below threshold
  std::vector<uint32_t> inv_tab_;    // size q when below threshold
  std::vector<uint16_t> tr_mul_;     // size q*q when below threshold
};

// Constructs GF(p^ell). When the modulus is omitted and ell > 1, the first
// monic irreducible of degree ell in element order is used, so a given
// (p, ell) always denotes the same field.
FieldCtx mk_field(uint32_t p, uint32_t ell,
                  std::optional<std::vector<uint32_t>> modulus = std::nullopt,
                  FieldCtx::Options opt = {});

// --- enumeration ------------------------------------------------------------

// All q field elements in index order.
std::vector<Fe> enum_field(const FieldCtx& F);

// q^k, guarded against overflow and the enumeration budget.
uint64_t vector_space_size(const FieldCtx& F, uint32_t k, const Budget& budget = {});

// Lexicographic code of a vector: first coordinate most significant.
uint64_t vec_code(const FieldCtx& F, std::span<const Fe> x);
Fv vec_decode(const FieldCtx& F, uint64_t code, uint32_t k);

// Visits all q^k vectors in lexicographic order. fn(std::span<const Fe>).
template <class Fn>
void for_each_vector(const FieldCtx& F, uint32_t k, Fn&& fn, const Budget& budget = {}) {
  uint64_t total = vector_space_size(F, k, budget);
  std::vector<Fe> x(k, Fe{0});
  for (uint64_t c = 0; c < total; ++c) {
    fn(std::span<const Fe>(x));
    // odometer increment, last coordinate fastest
    for (uint32_t j = k; j-- > 0;) {
      if (++x[j].idx < F.q()) break;
      x[j].idx = 0;
    }
  }
}

// Materializes enum_vectors for small spaces (tests, point populations).
std::vector<Fv> enum_vectors(const FieldCtx& F, uint32_t k, const Budget& budget = {});

}  // namespace ffinc
