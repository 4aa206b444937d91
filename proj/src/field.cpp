#include "ffinc/field.hpp"

#include <algorithm>
#include <limits>

namespace ffinc {

namespace {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Remainder of `a` under division by the monic polynomial `m`, both in
// ascending-power coefficients mod p.
std::vector<uint32_t> poly_mod(std::vector<uint32_t> a, std::span<const uint32_t> m, uint32_t p) {
  size_t deg_m = m.size() - 1;
  while (a.size() > deg_m) {
    uint32_t lead = a.back();
    size_t shift = a.size() - 1 - deg_m;
    if (lead != 0) {
      for (size_t j = 0; j < deg_m; ++j) {
        uint64_t t = static_cast<uint64_t>(lead) * m[j] % p;
        uint32_t& c = a[shift + j];
        c = static_cast<uint32_t>((c + p - t) % p);
      }
    }
    a.pop_back();
  }
  a.resize(deg_m, 0);
  return a;
}

bool divides(std::span<const uint32_t> divisor, std::span<const uint32_t> poly, uint32_t p) {
  std::vector<uint32_t> r = poly_mod(std::vector<uint32_t>(poly.begin(), poly.end()), divisor, p);
  return std::all_of(r.begin(), r.end(), [](uint32_t c) { return c == 0; });
}

// A monic polynomial of degree ell >= 2 is reducible iff some monic
// polynomial of degree in [1, ell/2] divides it.
bool is_irreducible(std::span<const uint32_t> poly, uint32_t p) {
  size_t ell = poly.size() - 1;
  for (size_t d = 1; d <= ell / 2; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    std::vector<uint32_t> cand(d + 1, 0);
    cand[d] = 1;
    for (uint64_t code = 0; code < count; ++code) {
      uint64_t c = code;
      for (size_t j = 0; j < d; ++j) {
        cand[j] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      if (divides(cand, poly, p)) return false;
    }
  }
  return true;
}

}  // namespace

FieldCtx mk_field(uint32_t p, uint32_t ell, std::optional<std::vector<uint32_t>> modulus,
                  FieldCtx::Options opt) {
  if (p == 2) throw EvenCharacteristic();
  if (!is_prime_u64(p)) throw NonPrime(p);
  if (ell < 1) throw UsageError("extension degree must be >= 1");

  uint64_t q = 1;
  for (uint32_t i = 0; i < ell; ++i) {
    q *= p;
    if (q > (uint64_t{1} << 31)) throw BudgetExceeded(q, uint64_t{1} << 31);
  }

  FieldCtx F;
  F.p_ = p;
  F.ell_ = ell;
  F.q_ = q;

  if (ell == 1) {
    if (modulus.has_value() && !modulus->empty())
      throw UsageError("prime fields take no modulus");
  } else if (modulus.has_value()) {
    auto& m = *modulus;
    if (m.size() != ell + 1 || m.back() != 1)
      throw ReducibleModulus("expected monic coefficients of degree ell");
    for (uint32_t c : m)
      if (c >= p) throw ReducibleModulus("coefficient out of range [0, p)");
    if (!is_irreducible(m, p)) throw ReducibleModulus("polynomial factors over Z_p");
    F.modulus_ = m;
  } else {
    // First monic irreducible of degree ell in element order of the lower
    // coefficients.
    uint64_t count = 1;
    for (uint32_t i = 0; i < ell; ++i) count *= p;
    std::vector<uint32_t> cand(ell + 1, 0);
    cand[ell] = 1;
    bool found = false;
    for (uint64_t code = 0; code < count && !found; ++code) {
      uint64_t c = code;
      for (uint32_t j = 0; j < ell; ++j) {
        cand[j] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      if (is_irreducible(cand, p)) {
        F.modulus_ = cand;
        found = true;
      }
    }
    if (!found) throw ReducibleModulus("no irreducible found");  // cannot happen
  }

  F.build_tables();
  (void)opt;
  if (q <= opt.table_threshold) {
    F.mul_tab_.resize(static_cast<size_t>(q) * q);
    F.tr_mul_.resize(static_cast<size_t>(q) * q);
    for (uint64_t a = 0; a < q; ++a)
      for (uint64_t b = a; b < q; ++b) {
        Fe prod = F.ell_ == 1
                      ? Fe{static_cast<uint32_t>(a * b % p)}
                      : [&] {
                          auto ca = F.coeffs(Fe{static_cast<uint32_t>(a)});
                          auto cb = F.coeffs(Fe{static_cast<uint32_t>(b)});
                          return F.from_coeffs(F.poly_mul_mod(ca, cb));
                        }();
        F.mul_tab_[a * q + b] = prod.idx;
        F.mul_tab_[b * q + a] = prod.idx;
        uint16_t t = static_cast<uint16_t>(F.trace_tab_[prod.idx]);
        F.tr_mul_[a * q + b] = t;
        F.tr_mul_[b * q + a] = t;
      }
    F.inv_tab_.assign(static_cast<size_t>(q), 0);
    for (uint64_t a = 1; a < q; ++a) {
      if (F.inv_tab_[a] != 0) continue;
      Fe r = F.pow(Fe{static_cast<uint32_t>(a)}, q - 2);
      F.inv_tab_[a] = r.idx;
      F.inv_tab_[r.idx] = static_cast<uint32_t>(a);
    }
  }
  return F;
}

void FieldCtx::build_tables() {
  // Trace of the basis monomials; trace is then Z_p-linear in the coefficients.
  trace_basis_.assign(ell_, 0);
  if (ell_ == 1) {
    trace_basis_[0] = 1;
  } else {
    for (uint32_t j = 0; j < ell_; ++j) {
      // Tr(x^j) = sum over Frobenius orbit of x^j
      std::vector<uint32_t> xj(ell_, 0);
      xj[j] = 1;
      Fe base = from_coeffs(xj);
      std::vector<uint32_t> acc(ell_, 0);
      Fe cur = base;
      for (uint32_t i = 0; i < ell_; ++i) {
        auto cc = coeffs(cur);
        for (uint32_t t = 0; t < ell_; ++t) acc[t] = (acc[t] + cc[t]) % p_;
        cur = pow(cur, p_);
      }
      for (uint32_t t = 1; t < ell_; ++t)
        if (acc[t] != 0) throw Error("trace left the prime subfield");
      trace_basis_[j] = acc[0];
    }
  }

  trace_tab_.assign(static_cast<size_t>(q_), 0);
  for (uint64_t a = 0; a < q_; ++a) {
    uint64_t rem = a, acc = 0;
    for (uint32_t j = 0; j < ell_; ++j) {
      acc += rem % p_ * trace_basis_[j];
      rem /= p_;
    }
    trace_tab_[a] = static_cast<uint32_t>(acc % p_);
  }

  eta_.assign(static_cast<size_t>(q_), -1);
  eta_[0] = 0;
  sqrt_.assign(static_cast<size_t>(q_), std::numeric_limits<uint32_t>::max());
  sqrt_[0] = 0;
  for (uint64_t s = 1; s < q_; ++s) {
    Fe sq = mul_no_table(Fe{static_cast<uint32_t>(s)}, Fe{static_cast<uint32_t>(s)});
    eta_[sq.idx] = 1;
    if (sqrt_[sq.idx] == std::numeric_limits<uint32_t>::max())
      sqrt_[sq.idx] = static_cast<uint32_t>(s);
  }
}

Fe FieldCtx::from_coeffs(std::span<const uint32_t> coeffs) const {
  if (coeffs.size() != ell_) throw DimensionMismatch("coefficient vector length != ell");
  uint64_t idx = 0, w = 1;
  for (uint32_t j = 0; j < ell_; ++j) {
    if (coeffs[j] >= p_) throw UsageError("coefficient out of range [0, p)");
    idx += coeffs[j] * w;
    w *= p_;
  }
  return Fe{static_cast<uint32_t>(idx)};
}

std::vector<uint32_t> FieldCtx::coeffs(Fe a) const {
  std::vector<uint32_t> c(ell_);
  uint64_t rem = a.idx;
  for (uint32_t j = 0; j < ell_; ++j) {
    c[j] = static_cast<uint32_t>(rem % p_);
    rem /= p_;
  }
  return c;
}

Fe FieldCtx::element(uint64_t index) const {
  if (index >= q_) throw UsageError("element index out of range");
  return Fe{static_cast<uint32_t>(index)};
}

Fe FieldCtx::add(Fe a, Fe b) const {
  if (ell_ == 1) return Fe{static_cast<uint32_t>((static_cast<uint64_t>(a.idx) + b.idx) % p_)};
  uint64_t ra = a.idx, rb = b.idx, idx = 0, w = 1;
  for (uint32_t j = 0; j < ell_; ++j) {
    idx += (ra % p_ + rb % p_) % p_ * w;
    ra /= p_;
    rb /= p_;
    w *= p_;
  }
  return Fe{static_cast<uint32_t>(idx)};
}

Fe FieldCtx::neg(Fe a) const {
  if (ell_ == 1) return Fe{static_cast<uint32_t>((p_ - a.idx) % p_)};
  uint64_t ra = a.idx, idx = 0, w = 1;
  for (uint32_t j = 0; j < ell_; ++j) {
    idx += (p_ - ra % p_) % p_ * w;
    ra /= p_;
    w *= p_;
  }
  return Fe{static_cast<uint32_t>(idx)};
}

Fe FieldCtx::sub(Fe a, Fe b) const { return add(a, neg(b)); }

std::vector<uint32_t> FieldCtx::poly_mul_mod(std::span<const uint32_t> a,
                                             std::span<const uint32_t> b) const {
  std::vector<uint32_t> prod(2 * ell_ - 1, 0);
  for (uint32_t i = 0; i < ell_; ++i) {
    if (a[i] == 0) continue;
    for (uint32_t j = 0; j < ell_; ++j)
      prod[i + j] =
          static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p_);
  }
  return poly_mod(std::move(prod), modulus_, p_);
}

Fe FieldCtx::mul_no_table(Fe a, Fe b) const {
  if (ell_ == 1) return Fe{static_cast<uint32_t>(static_cast<uint64_t>(a.idx) * b.idx % p_)};
  return from_coeffs(poly_mul_mod(coeffs(a), coeffs(b)));
}

Fe FieldCtx::mul(Fe a, Fe b) const {
  if (!mul_tab_.empty()) return Fe{mul_tab_[static_cast<size_t>(a.idx) * q_ + b.idx]};
  return mul_no_table(a, b);
}

Fe FieldCtx::pow(Fe a, uint64_t e) const {
  Fe r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fe FieldCtx::inv(Fe a) const {
  if (a == zero()) throw DivisionByZero();
  if (!inv_tab_.empty()) return Fe{inv_tab_[a.idx]};
  if (ell_ == 1) {
    // extended Euclid on integers
    int64_t t = 0, newt = 1, r = p_, newr = a.idx;
    while (newr != 0) {
      int64_t quot = r / newr;
      int64_t tmp = t - quot * newt;
      t = newt;
      newt = tmp;
      tmp = r - quot * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += p_;
    return Fe{static_cast<uint32_t>(t)};
  }
  return pow(a, q_ - 2);
}

uint32_t FieldCtx::trace(Fe a) const { return trace_tab_[a.idx]; }

std::optional<Fe> FieldCtx::sqrt(Fe a) const {
  uint32_t r = sqrt_[a.idx];
  if (r == std::numeric_limits<uint32_t>::max()) return std::nullopt;
  return Fe{r};
}

std::vector<Fe> enum_field(const FieldCtx& F) {
  std::vector<Fe> out(F.q());
  for (uint64_t i = 0; i < F.q(); ++i) out[i] = Fe{static_cast<uint32_t>(i)};
  return out;
}

uint64_t vector_space_size(const FieldCtx& F, uint32_t k, const Budget& budget) {
  uint64_t total = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (total > budget.max_enumeration / F.q())
      throw BudgetExceeded(budget.max_enumeration + 1, budget.max_enumeration);
    total *= F.q();
  }
  if (total > budget.max_enumeration) throw BudgetExceeded(total, budget.max_enumeration);
  return total;
}

uint64_t vec_code(const FieldCtx& F, std::span<const Fe> x) {
  uint64_t code = 0;
  for (Fe c : x) code = code * F.q() + c.idx;
  return code;
}

Fv vec_decode(const FieldCtx& F, uint64_t code, uint32_t k) {
  Fv x(k);
  for (uint32_t j = k; j-- > 0;) {
    x[j] = Fe{static_cast<uint32_t>(code % F.q())};
    code /= F.q();
  }
  return x;
}

std::vector<Fv> enum_vectors(const FieldCtx& F, uint32_t k, const Budget& budget) {
  std::vector<Fv> out;
  out.reserve(vector_space_size(F, k, budget));
  for_each_vector(
      F, k, [&](std::span<const Fe> x) { out.emplace_back(x.begin(), x.end()); }, budget);
  return out;
}

}  // namespace ffinc
