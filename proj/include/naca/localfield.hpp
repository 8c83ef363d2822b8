#pragma once

// Truncated exact arithmetic in the local nonarchimedean base fields Q_p and
// F_q((t)). Every element carries an explicit precision; operations propagate
// the conservative minimum, so truncation is always observable.

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "naca/errors.hpp"
#include "naca/ffield.hpp"

namespace naca {

enum class LocalKind { Padic, Laurent };

struct LocalFieldSpec;
using LocalFieldSpecPtr = std::shared_ptr<const LocalFieldSpec>;

struct LocalFieldSpec {
  LocalKind kind = LocalKind::Padic;
  int64_t p = 0;           // residual characteristic
  FqSpecPtr residue;       // F_p for Q_p, F_q for F_q((t))
  int default_precision = 12;

  int64_t q() const { return residue->q; }
  bool same_as(const LocalFieldSpec& o) const {
    return kind == o.kind && p == o.p && residue->same_as(*o.residue);
  }
  std::string uniformizer_symbol() const {
    return kind == LocalKind::Padic ? std::to_string(p) : "t";
  }
};

LocalFieldSpecPtr padic_field(int64_t p, int default_precision = 12);
LocalFieldSpecPtr laurent_field(const FqSpecPtr& residue, int default_precision = 12);

// An element known modulo pi^(val + digits.size()): val + sum d_i pi^(val+i)
// with d_0 != 0. A "fuzzy zero" O(pi^k) records only the bound k; exact zero
// has an unbounded k.
class LocalElem {
 public:
  static constexpr int64_t kExactZero = std::numeric_limits<int64_t>::max() / 2;

  LocalElem() = default;

  static LocalElem exact_zero(const LocalFieldSpecPtr& spec);
  static LocalElem zero_to_precision(const LocalFieldSpecPtr& spec, int64_t abs_prec);
  static LocalElem from_digits(const LocalFieldSpecPtr& spec, int64_t val, std::vector<FqElem> digits);
  // p-adic / constant-series image of an integer at the given digit count.
  static LocalElem from_int(const LocalFieldSpecPtr& spec, int64_t k, int precision);
  static LocalElem from_int(const LocalFieldSpecPtr& spec, int64_t k);
  static LocalElem from_residue(const LocalFieldSpecPtr& spec, const FqElem& d, int precision);
  static LocalElem one(const LocalFieldSpecPtr& spec, int precision = -1);
  static LocalElem uniformizer(const LocalFieldSpecPtr& spec, int precision = -1);

  const LocalFieldSpecPtr& spec() const { return spec_; }
  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && abs_prec_ >= kExactZero; }
  int64_t valuation() const;
  const std::vector<FqElem>& digits() const { return d_; }
  int precision() const { return static_cast<int>(d_.size()); }  // relative precision (digit count)
  // Element is known modulo pi^abs_precision().
  int64_t abs_precision() const { return zero_ ? abs_prec_ : v_ + static_cast<int64_t>(d_.size()); }
  const FqElem& leading_digit() const;
  // Digit of pi^(val+i), zero beyond the stored window.
  FqElem digit_at(int64_t i) const;

  friend LocalElem operator+(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator-(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator*(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator/(const LocalElem& a, const LocalElem& b);
  LocalElem operator-() const;

  LocalElem inv() const;
  LocalElem pow(int64_t e) const;
  // Multiply by pi^k (exact).
  LocalElem shifted(int64_t k) const;
  // Truncate to absolute precision k (no-op if already coarser).
  LocalElem truncated_abs(int64_t abs_prec) const;
  // Keep at most n digits.
  LocalElem truncated(int n) const;
  // Pad with zero digits up to n digits total. This picks a specific lift of
  // the truncated value; callers must justify the choice (Hensel does).
  LocalElem padded(int n) const;

  std::string str() const;

 private:
  LocalFieldSpecPtr spec_;
  bool zero_ = true;
  int64_t abs_prec_ = kExactZero;  // only meaningful when zero_
  int64_t v_ = 0;
  std::vector<FqElem> d_;

  static LocalElem make_normalized(const LocalFieldSpecPtr& spec, int64_t val,
                                   std::vector<FqElem> digits, int64_t abs_prec);
  friend LocalElem lf_add_impl(const LocalElem& a, const LocalElem& b, bool negate_b);
};

// Equality to shared known precision.
bool lf_eq(const LocalElem& a, const LocalElem& b);
// Canonical total order at fixed precision: valuation first, then digit
// sequence under the FqElem order. Fuzzy zeros order before nonzero values.
bool lf_less(const LocalElem& a, const LocalElem& b);

struct UnitDecomposition {
  LocalElem teich;      // (q-1)-th root of unity
  LocalElem one_unit;   // element of 1 + P
  int64_t valuation = 0;
};

UnitDecomposition lf_decompose(const LocalElem& x);

// Polynomials over the local field, low degree first.
using LocalPoly = std::vector<LocalElem>;

LocalPoly lf_poly_from_ints(const LocalFieldSpecPtr& spec, const std::vector<int64_t>& coeffs,
                            int precision);
LocalElem lf_poly_eval(const LocalPoly& f, const LocalElem& x);
LocalPoly lf_poly_derivative(const LocalPoly& f);

// Newton iteration refining an approximate root a (integral valuation) of f to
// a root modulo pi^target_precision. Requires v(f(a)) > 2 v(f'(a)).
LocalElem hensel_lift(const LocalPoly& f, const LocalElem& a, int target_precision);

// The unique (q-1)-th root of unity congruent to d mod P; the constant-series
// embedding in the Laurent case.
LocalElem teichmuller(const LocalFieldSpecPtr& spec, const FqElem& d, int precision);

enum class SquareClass { One, Eps, Pi, EpsPi };
const char* square_class_name(SquareClass c);

// Square class in F^x/(F^x)^2 = {1, eps, pi, eps*pi}; odd residual
// characteristic only. eps is the Teichmueller lift of the least quadratic
// non-residue of the residue field.
SquareClass square_class(const LocalElem& x);

// Square class over Q_2, one of {1,-1,2,-2,3,-3,6,-6}, read off the valuation
// parity and the unit part mod 8.
int q2_square_class(const LocalElem& x);

struct MthUnitClass {
  bool is_mth_power = false;
  int64_t class_index = 0;      // residue power class relative to fq_generator
  int64_t valuation_mod_m = 0;
};

// x as an element of F^x/(F^x)^m for odd prime m != p with m | q-1; decided
// from v(x) mod m and the residue power class of the leading digit.
MthUnitClass mth_unit_class(const LocalElem& x, int64_t m);

// Fixed canonical non-square unit eps (Teichmueller lift of the least
// non-residue).
LocalElem lf_epsilon(const LocalFieldSpecPtr& spec, int precision);

}  // namespace naca
