#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffinc {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPrime : Error {
  explicit NonPrime(uint64_t p) : Error("not an odd prime: p = " + std::to_string(p)) {}
};

struct EvenCharacteristic : Error {
  EvenCharacteristic() : Error("characteristic 2 is rejected: the quadratic-form machinery requires odd q") {}
};

struct ReducibleModulus : Error {
  explicit ReducibleModulus(const std::string& what) : Error("reducible or malformed modulus: " + what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("inverse of the zero field element") {}
};

struct BudgetExceeded : Error {
  BudgetExceeded(uint64_t needed, uint64_t budget)
      : Error("enumeration/compute size " + std::to_string(needed) + " exceeds budget " +
              std::to_string(budget)) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct ZeroParameter : Error {
  explicit ZeroParameter(const std::string& what) : Error("parameter must be nonzero: " + what) {}
};

struct RootOrderMismatch : Error {
  RootOrderMismatch(uint64_t a, uint64_t b)
      : Error("cyclotomic root orders differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct UnsupportedCase : Error {
  explicit UnsupportedCase(const std::string& what) : Error("unsupported case: " + what) {}
};

struct UnsupportedRadiusClass : Error {
  explicit UnsupportedRadiusClass(const std::string& what)
      : Error("radius class not liftable: " + what) {}
};

struct PopulationTooSmall : Error {
  PopulationTooSmall(uint64_t requested, uint64_t population)
      : Error("requested " + std::to_string(requested) + " samples from a population of " +
              std::to_string(population)) {}
};

struct ZeroDistance : Error {
  ZeroDistance() : Error("distance t = 0 is excluded") {}
};

// Configuration / usage problems (CLI maps these to exit code 2).
struct UsageError : Error {
  using Error::Error;
};

// Caps on exhaustive loops. Both default to 2^31 elementary steps.
struct Budget {
  uint64_t max_enumeration = uint64_t{1} << 31;  // vectors visited per enumeration
  uint64_t max_char_evals = uint64_t{1} << 31;   // character evaluations per sweep
};

}  // namespace ffinc
