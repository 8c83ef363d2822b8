#pragma once

// Exact arithmetic in small finite fields F_q, q = p^n, with the canonical
// total order, power-class computations and non-residue search used by the
// residue-field reductions elsewhere in the library.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "naca/errors.hpp"

namespace naca {

struct FqSpec;
using FqSpecPtr = std::shared_ptr<const FqSpec>;

struct FqSpec {
  int64_t p = 0;                 // prime characteristic
  int n = 0;                     // extension degree over F_p
  std::vector<int64_t> modulus;  // monic irreducible of degree n, low degree first, length n+1
  int64_t q = 0;                 // p^n

  bool same_as(const FqSpec& o) const { return p == o.p && n == o.n && modulus == o.modulus; }
};

// Builds a validated field spec. When the modulus is omitted the
// lexicographically least monic irreducible of degree n is chosen, so
// identical (p, n) always name the same field. Exhaustive irreducibility
// testing bounds n at 8.
FqSpecPtr fq_make(int64_t p, int n, std::optional<std::vector<int64_t>> modulus = std::nullopt);

class FqElem {
 public:
  FqElem() = default;
  FqElem(FqSpecPtr spec, std::vector<int64_t> coeffs);

  static FqElem zero(const FqSpecPtr& spec);
  static FqElem one(const FqSpecPtr& spec);
  // Image of the integer k under Z -> F_q (reduction into the prime field).
  static FqElem from_int(const FqSpecPtr& spec, int64_t k);

  const FqSpecPtr& spec() const { return spec_; }
  const std::vector<int64_t>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  // Value in [0, p) when the element lies in the prime field.
  int64_t prime_value() const;

  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend FqElem operator/(const FqElem& a, const FqElem& b);
  FqElem operator-() const;
  friend bool operator==(const FqElem& a, const FqElem& b);
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

  FqElem inv() const;
  FqElem pow(int64_t e) const;

  std::string str() const;  // literal form [c0,c1,...]

 private:
  FqSpecPtr spec_;
  std::vector<int64_t> c_;  // length n, entries in [0, p)
};

// Canonical total order: lexicographic on coefficient sequences with residues
// ordered 0 < 1 < ... < p-1. Used downstream for deterministic representative
// choices in quotient groups.
bool fq_less(const FqElem& a, const FqElem& b);

// All q field elements in canonical order (zero first).
std::vector<FqElem> fq_all_elements(const FqSpecPtr& spec);

// The fixed multiplicative generator: least element of order q-1.
FqElem fq_generator(const FqSpecPtr& spec);

// Discrete log with respect to fq_generator, by exhaustive search.
int64_t fq_dlog(const FqElem& x);

struct PowerClass {
  bool is_nth_power = false;
  int64_t class_index = 0;  // in [0, gcd(n, q-1)), relative to fq_generator
};

PowerClass fq_power_class(const FqElem& x, int64_t n);

// Least element (canonical order) that is not an n-th power. Requires n > 1
// and n | q-1; otherwise every element is a power.
FqElem fq_nonresidue(const FqSpecPtr& spec, int64_t n);

// Multiplicative order of a nonzero element.
int64_t fq_order(const FqElem& x);

// Least nonzero element of multiplicative order exactly d (d | q-1).
FqElem fq_element_of_order(const FqSpecPtr& spec, int64_t d);

bool is_prime_int(int64_t p);

}  // namespace naca
