#pragma once

// Cyclic Galois extensions K/F of finite and local nonarchimedean base fields:
// construction, the distinguished generator sigma, norms, norm-group
// membership, norm-class representatives and enumeration of extensions.
//
// K is represented uniformly as F[x]/(modulus) with the distinguished basis
// (1, beta, ..., beta^{m-1}); sigma is stored as the coefficient vector of
// sigma(beta), and sigma(sum a_i beta^i) = sum a_i sigma(beta)^i since the
// coefficients lie in the fixed field F.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "naca/errors.hpp"
#include "naca/ffield.hpp"
#include "naca/localfield.hpp"

namespace naca {

enum class ExtKind {
  FiniteFrobenius,  // F_{q^m}/F_q, sigma = q-power map
  QuadraticRoot,    // F(sqrt(c)), sigma(beta) = -beta
  Kummer,           // F(b^{1/m}), sigma(beta) = zeta*beta
  ArtinSchreier,    // char 2: F(alpha), alpha^2 + alpha = c, sigma(alpha) = alpha + 1
  UnramifiedLift,   // unramified degree m, sigma = lift of the q-power map
  QuarticTower,     // descriptor-only partially ramified quartic (no arithmetic)
};

const char* ext_kind_name(ExtKind k);

// Traits bridging the two base-field element types.
template <class B>
struct FieldOps;

template <>
struct FieldOps<FqElem> {
  using SpecPtr = FqSpecPtr;
  static FqElem zero(const SpecPtr& s) { return FqElem::zero(s); }
  static FqElem one(const SpecPtr& s) { return FqElem::one(s); }
  static bool is_zero(const FqElem& x) { return x.is_zero(); }
  static bool eq(const FqElem& a, const FqElem& b) { return a == b; }
  static bool less(const FqElem& a, const FqElem& b) { return fq_less(a, b); }
};

template <>
struct FieldOps<LocalElem> {
  using SpecPtr = LocalFieldSpecPtr;
  static LocalElem zero(const SpecPtr& s) { return LocalElem::exact_zero(s); }
  static LocalElem one(const SpecPtr& s) { return LocalElem::one(s); }
  static bool is_zero(const LocalElem& x) { return x.is_zero(); }
  static bool eq(const LocalElem& a, const LocalElem& b) { return lf_eq(a, b); }
  static bool less(const LocalElem& a, const LocalElem& b) { return lf_less(a, b); }
};

template <class B>
struct CyclicExt {
  using SpecPtr = typename FieldOps<B>::SpecPtr;

  SpecPtr base;
  int m = 0;
  ExtKind kind = ExtKind::FiniteFrobenius;
  std::vector<B> modulus;                       // monic minimal polynomial of beta, length m+1
  std::vector<std::vector<B>> sigma_pow_beta;   // [j] = coefficients of sigma^j(beta), j = 0..m-1
  B param;                                      // c (QuadraticRoot/ArtinSchreier) or b (Kummer)
  B zeta;                                       // Kummer root of unity
  bool ramified = false;
  bool arithmetic_ok = true;                    // false for descriptor-only kinds
  std::string name;                             // canonical human-readable descriptor
};

template <class B>
using ExtPtr = std::shared_ptr<const CyclicExt<B>>;

using FqExtPtr = ExtPtr<FqElem>;
using LocalExtPtr = ExtPtr<LocalElem>;

template <class B>
class ExtElem {
 public:
  ExtElem() = default;
  ExtElem(ExtPtr<B> ext, std::vector<B> coeffs) : ext_(std::move(ext)), c_(std::move(coeffs)) {
    if (!ext_->arithmetic_ok)
      fail(Err::UnsupportedCase, "extension '" + ext_->name + "' is descriptor-only");
    if (static_cast<int>(c_.size()) != ext_->m)
      fail(Err::DegreeMismatch, "coefficient vector must have length m");
  }

  static ExtElem zero(const ExtPtr<B>& ext) {
    return ExtElem(ext, std::vector<B>(ext->m, FieldOps<B>::zero(ext->base)));
  }
  static ExtElem one(const ExtPtr<B>& ext) {
    auto c = std::vector<B>(ext->m, FieldOps<B>::zero(ext->base));
    c[0] = FieldOps<B>::one(ext->base);
    return ExtElem(ext, std::move(c));
  }
  static ExtElem beta(const ExtPtr<B>& ext) {
    auto c = std::vector<B>(ext->m, FieldOps<B>::zero(ext->base));
    c[1] = FieldOps<B>::one(ext->base);
    return ExtElem(ext, std::move(c));
  }
  static ExtElem from_base(const ExtPtr<B>& ext, const B& x) {
    auto c = std::vector<B>(ext->m, FieldOps<B>::zero(ext->base));
    c[0] = x;
    return ExtElem(ext, std::move(c));
  }

  const ExtPtr<B>& ext() const { return ext_; }
  const std::vector<B>& coeffs() const { return c_; }
  const B& coeff(int i) const { return c_.at(i); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!FieldOps<B>::is_zero(x)) return false;
    return true;
  }
  // True when all non-constant coefficients vanish (to working precision).
  bool in_base() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (!FieldOps<B>::is_zero(c_[i])) return false;
    return true;
  }

  friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    check(a, b);
    std::vector<B> c;
    c.reserve(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) c.push_back(a.c_[i] + b.c_[i]);
    return ExtElem(a.ext_, std::move(c));
  }
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b) {
    check(a, b);
    std::vector<B> c;
    c.reserve(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) c.push_back(a.c_[i] - b.c_[i]);
    return ExtElem(a.ext_, std::move(c));
  }
  ExtElem operator-() const {
    std::vector<B> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return ExtElem(ext_, std::move(c));
  }
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    check(a, b);
    int m = a.ext_->m;
    std::vector<B> prod(2 * m - 1, FieldOps<B>::zero(a.ext_->base));
    for (int i = 0; i < m; ++i) {
      if (FieldOps<B>::is_zero(a.c_[i])) continue;
      for (int j = 0; j < m; ++j) prod[i + j] = prod[i + j] + a.c_[i] * b.c_[j];
    }
    // reduce modulo the monic minimal polynomial
    for (int d = 2 * m - 2; d >= m; --d) {
      if (FieldOps<B>::is_zero(prod[d])) continue;
      for (int i = 0; i < m; ++i)
        prod[d - m + i] = prod[d - m + i] - prod[d] * a.ext_->modulus[i];
      prod[d] = FieldOps<B>::zero(a.ext_->base);
    }
    prod.resize(m);
    return ExtElem(a.ext_, std::move(prod));
  }
  friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inv(); }

  ExtElem scaled(const B& s) const {
    std::vector<B> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x * s);
    return ExtElem(ext_, std::move(c));
  }

  ExtElem inv() const;
  ExtElem pow(int64_t e) const {
    if (e < 0) return inv().pow(-e);
    ExtElem acc = one(ext_);
    ExtElem base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      if ((e >>= 1) > 0) base = base * base;
    }
    return acc;
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].str();
    }
    return s + ")";
  }

 private:
  ExtPtr<B> ext_;
  std::vector<B> c_;

  static void check(const ExtElem& a, const ExtElem& b) {
    if (a.ext_ != b.ext_ && a.ext_->name != b.ext_->name)
      fail(Err::SpecMismatch, "elements of different extensions");
  }
};

template <class B>
bool ext_eq(const ExtElem<B>& a, const ExtElem<B>& b) {
  return (a - b).is_zero();
}

// Evaluate a coefficient vector (polynomial in beta) at an extension element.
template <class B>
ExtElem<B> ext_eval(const ExtPtr<B>& ext, const std::vector<B>& poly, const ExtElem<B>& at) {
  ExtElem<B> acc = ExtElem<B>::zero(ext);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it)
    acc = acc * at + ExtElem<B>::from_base(ext, *it);
  return acc;
}

// sigma^j applied to x; j taken modulo m.
template <class B>
ExtElem<B> sigma_apply(const ExtElem<B>& x, int64_t j) {
  const auto& ext = x.ext();
  int m = ext->m;
  j = ((j % m) + m) % m;
  if (j == 0) return x;
  ExtElem<B> sb(ext, ext->sigma_pow_beta[j]);
  return ext_eval(ext, x.coeffs(), sb);
}

// Field norm N_{K/F}(x) = prod_i sigma^i(x); the product must land in F.
template <class B>
B ext_norm(const ExtElem<B>& x) {
  ExtElem<B> prod = x;
  for (int i = 1; i < x.ext()->m; ++i) prod = prod * sigma_apply(x, i);
  if (!prod.in_base())
    fail(Err::PrecisionExhausted, "norm did not land in the base field at working precision");
  return prod.coeff(0);
}

template <class B>
ExtElem<B> ExtElem<B>::inv() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero extension element");
  // inv(x) = (prod_{i>=1} sigma^i(x)) / N(x) with N(x) in the base field
  ExtElem conj = one(ext_);
  for (int i = 1; i < ext_->m; ++i) conj = conj * sigma_apply(*this, i);
  ExtElem prod = (*this) * conj;
  if (!prod.in_base()) fail(Err::PrecisionExhausted, "norm did not land in the base field");
  const B& n = prod.coeff(0);
  if (FieldOps<B>::is_zero(n)) fail(Err::DivisionByZero, "norm indistinguishable from zero");
  std::vector<B> c;
  c.reserve(ext_->m);
  for (const auto& v : conj.coeffs()) c.push_back(v / n);
  return ExtElem(ext_, std::move(c));
}

// Degree of F(a) over F: the least divisor d of m with sigma^d(a) = a.
template <class B>
int subfield_degree(const ExtElem<B>& a) {
  int m = a.ext()->m;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    if (ext_eq(sigma_apply(a, d), a)) return d;
  }
  return m;  // unreachable: sigma^m is the identity
}

// ---- finite base ----

// The unique degree-m extension F_{q^m}/F_q with the lexicographically least
// monic irreducible modulus over F_q and sigma the q-power map.
FqExtPtr finite_ext(const FqSpecPtr& base, int m);

// Lexicographically least monic irreducible of degree m over F_q (low degree
// first, length m+1); exposed for reuse by the unramified lift.
std::vector<FqElem> fq_least_irreducible(const FqSpecPtr& spec, int m);

// ---- local base ----

// F(sqrt(c)); c must not be a square. Odd residual characteristic or Q_2.
LocalExtPtr quadratic_ext(const LocalFieldSpecPtr& base, const LocalElem& c);

// F(b^{1/m}) with sigma(beta) = zeta*beta; requires mu_m in F (m | q-1, m != p)
// and x^m - b irreducible. zeta defaults to the Teichmueller lift of the least
// residue of multiplicative order m.
LocalExtPtr kummer_ext(const LocalFieldSpecPtr& base, int m, const LocalElem& b,
                       std::optional<LocalElem> zeta = std::nullopt);

// char-2 Laurent base: F(alpha), alpha^2 + alpha = c, sigma(alpha) = alpha + 1;
// requires c outside the Artin-Schreier subgroup P2 = {z^2 + z} (checked at the
// available precision).
LocalExtPtr artin_schreier_ext(const LocalFieldSpecPtr& base, const LocalElem& c);

// The unique unramified degree-m extension; realized as a Kummer extension
// when m | q-1 and otherwise by lifting the residue-field extension with sigma
// computed by Newton iteration from the q-power map.
LocalExtPtr unramified_ext(const LocalFieldSpecPtr& base, int m);

// Descriptor-only partially ramified quartic K0 = E(sqrt(eps_E * pi)),
// E = F(sqrt(eps)) (used when -1 is not a square, where K0 is not Kummer).
LocalExtPtr quartic_tower_descriptor(const LocalFieldSpecPtr& base);

// ---- norm membership and class representatives ----

// Membership of x in N_{K/F}(K^x). Finite base: always true. Unramified local:
// m | v(x). Tame totally ramified: twist by powers of N(beta) and test the
// residue for m-th-power-ness. Q_2 quadratics: square-class table lookup.
bool is_norm(const FqExtPtr& ext, const FqElem& x);
bool is_norm(const LocalExtPtr& ext, const LocalElem& x);

// Representatives of F^x / N_{K/F}(K^x) (exactly m of them; {1} over finite fields).
std::vector<FqElem> norm_class_reps(const FqExtPtr& ext);
std::vector<LocalElem> norm_class_reps(const LocalExtPtr& ext);

// Whether -1 is a norm (drives the /{+-1} reductions in canonical forms).
bool minus_one_is_norm(const LocalExtPtr& ext);

// ---- enumeration ----

std::vector<FqExtPtr> enumerate_extensions(const FqSpecPtr& base, int m);
std::vector<LocalExtPtr> enumerate_extensions(const LocalFieldSpecPtr& base, int m);

// char-2 Laurent quadratics form an infinite family; sample the distinct
// Artin-Schreier extensions with c = t^{-(2k+1)}, k = 0..count-1.
std::vector<LocalExtPtr> sample_artin_schreier(const LocalFieldSpecPtr& base, int count);

// Same subfield of a fixed algebraic closure (canonical-descriptor comparison).
bool ext_same_field(const FqExtPtr& a, const FqExtPtr& b);
bool ext_same_field(const LocalExtPtr& a, const LocalExtPtr& b);

// ---- char-2 helpers ----

enum class Tri { False, True, Unknown };

// Membership of f in P2 = {z^2 + z : z in F} for F = F_{2^f}((t)), exact
// whenever the precision suffices, Unknown otherwise.
Tri char2_in_p2(const LocalElem& f);

// Squareness and square root in characteristic-2 Laurent fields (Frobenius is
// bijective on the residue field, so squares are exactly the even-support series).
bool char2_is_square(const LocalElem& f);
LocalElem char2_sqrt(const LocalElem& f);

// ---- Q_2 quadratic norm-group table ----

// Norm group of Q_2(sqrt(c)) modulo squares, as four square-class labels; c
// identified by its square class in {-1, 2, -2, 3, -3, 6, -6}.
std::array<int, 4> q2_norm_row(int c_class);
// C_K representative gamma with C_K = {1, gamma} for Q_2(sqrt(c)).
int q2_gamma(int c_class);

// Whether x is an m-th power in the local field (gcd(m, p) = 1).
bool lf_is_mth_power(const LocalElem& x, int64_t m);

}  // namespace naca
