#include "naca/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace naca {

namespace {

int64_t mod_p(int64_t a, int64_t p) {
  int64_t r = a % p;
  return r < 0 ? r + p : r;
}

int64_t inv_mod_p(int64_t a, int64_t p) {
  // extended Euclid
  int64_t t = 0, nt = 1, r = p, nr = mod_p(a, p);
  while (nr != 0) {
    int64_t qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  return mod_p(t, p);
}

using Poly = std::vector<int64_t>;  // low degree first, coefficients in [0, p)

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod_p(r[i + j] + a[i] * b[j], p);
  poly_trim(r);
  return r;
}

// remainder of a modulo monic b
Poly poly_rem(Poly a, const Poly& b, int64_t p) {
  poly_trim(a);
  while (a.size() >= b.size()) {
    int64_t lead = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = mod_p(a[shift + i] - lead * b[i], p);
    poly_trim(a);
  }
  return a;
}

bool poly_is_irreducible(const Poly& f, int64_t p) {
  // trial division by all monic polynomials of degree 1..deg/2
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return false;
  if (n == 1) return true;
  for (int d = 1; 2 * d <= n; ++d) {
    // iterate over the p^d monic polynomials of degree d
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_rem(f, g, p).empty()) return false;
      int i = 0;
      for (; i < d; ++i) {
        if (++g[i] < p) break;
        g[i] = 0;
      }
      if (i == d) break;
    }
  }
  return true;
}

}  // namespace

bool is_prime_int(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FqSpecPtr fq_make(int64_t p, int n, std::optional<std::vector<int64_t>> modulus) {
  if (!is_prime_int(p)) fail(Err::NotPrime, "characteristic must be prime, got " + std::to_string(p));
  if (n < 1) fail(Err::DegreeMismatch, "extension degree must be >= 1");
  Poly mod;
  if (modulus) {
    mod = *modulus;
    for (auto& c : mod) c = mod_p(c, p);
    poly_trim(mod);
    if (static_cast<int>(mod.size()) != n + 1)
      fail(Err::DegreeMismatch, "modulus degree must equal " + std::to_string(n));
    if (mod.back() != 1) fail(Err::ReducibleModulus, "modulus must be monic");
    if (!poly_is_irreducible(mod, p))
      fail(Err::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  } else {
    if (n > 8) fail(Err::DegreeMismatch, "exhaustive modulus search is limited to n <= 8");
    // least monic polynomial of degree n, coefficients compared low-degree
    // first, that is irreducible
    mod.assign(n + 1, 0);
    mod[n] = 1;
    while (!poly_is_irreducible(mod, p)) {
      int i = 0;
      for (; i < n; ++i) {
        if (++mod[i] < p) break;
        mod[i] = 0;
      }
      if (i == n) fail(Err::ReducibleModulus, "no irreducible polynomial found");  // unreachable
    }
  }
  auto spec = std::make_shared<FqSpec>();
  spec->p = p;
  spec->n = n;
  spec->modulus = std::move(mod);
  int64_t q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  spec->q = q;
  return spec;
}

FqElem::FqElem(FqSpecPtr spec, std::vector<int64_t> coeffs) : spec_(std::move(spec)) {
  if (static_cast<int>(coeffs.size()) > spec_->n)
    fail(Err::DegreeMismatch, "coefficient sequence longer than extension degree");
  coeffs.resize(spec_->n, 0);
  for (auto& c : coeffs) c = mod_p(c, spec_->p);
  c_ = std::move(coeffs);
}

FqElem FqElem::zero(const FqSpecPtr& spec) { return FqElem(spec, {}); }

FqElem FqElem::one(const FqSpecPtr& spec) { return FqElem(spec, {1}); }

FqElem FqElem::from_int(const FqSpecPtr& spec, int64_t k) { return FqElem(spec, {mod_p(k, spec->p)}); }

bool FqElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int64_t c) { return c == 0; });
}

bool FqElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](int64_t c) { return c == 0; });
}

int64_t FqElem::prime_value() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) fail(Err::DegreeMismatch, "element does not lie in the prime field");
  return c_.empty() ? 0 : c_[0];
}

namespace {
void check_specs(const FqElem& a, const FqElem& b) {
  if (!a.spec() || !b.spec() || !a.spec()->same_as(*b.spec()))
    fail(Err::SpecMismatch, "operands belong to different fields");
}
}  // namespace

FqElem operator+(const FqElem& a, const FqElem& b) {
  check_specs(a, b);
  std::vector<int64_t> r(a.coeffs());
  for (size_t i = 0; i < r.size(); ++i) r[i] = mod_p(r[i] + b.coeffs()[i], a.spec()->p);
  return FqElem(a.spec(), std::move(r));
}

FqElem operator-(const FqElem& a, const FqElem& b) {
  check_specs(a, b);
  std::vector<int64_t> r(a.coeffs());
  for (size_t i = 0; i < r.size(); ++i) r[i] = mod_p(r[i] - b.coeffs()[i], a.spec()->p);
  return FqElem(a.spec(), std::move(r));
}

FqElem FqElem::operator-() const {
  std::vector<int64_t> r(c_);
  for (auto& c : r) c = mod_p(-c, spec_->p);
  return FqElem(spec_, std::move(r));
}

FqElem operator*(const FqElem& a, const FqElem& b) {
  check_specs(a, b);
  Poly prod = poly_mul(a.coeffs(), b.coeffs(), a.spec()->p);
  Poly rem = poly_rem(std::move(prod), a.spec()->modulus, a.spec()->p);
  return FqElem(a.spec(), std::move(rem));
}

FqElem operator/(const FqElem& a, const FqElem& b) { return a * b.inv(); }

bool operator==(const FqElem& a, const FqElem& b) {
  check_specs(a, b);
  return a.coeffs() == b.coeffs();
}

FqElem FqElem::inv() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
  return pow(spec_->q - 2);
}

FqElem FqElem::pow(int64_t e) const {
  if (e < 0) return inv().pow(-e);
  FqElem base = *this;
  FqElem acc = FqElem::one(spec_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string FqElem::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ']';
  return os.str();
}

bool fq_less(const FqElem& a, const FqElem& b) {
  check_specs(a, b);
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

std::vector<FqElem> fq_all_elements(const FqSpecPtr& spec) {
  std::vector<FqElem> out;
  out.reserve(spec->q);
  std::vector<int64_t> c(spec->n, 0);
  while (true) {
    out.emplace_back(spec, c);
    // increment most significant coefficient last so order is lexicographic
    int i = spec->n - 1;
    for (; i >= 0; --i) {
      if (++c[i] < spec->p) break;
      c[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

int64_t fq_order(const FqElem& x) {
  if (x.is_zero()) fail(Err::ZeroInput, "order of zero");
  FqElem acc = x;
  int64_t k = 1;
  while (!acc.is_one()) {
    acc = acc * x;
    ++k;
  }
  return k;
}

FqElem fq_generator(const FqSpecPtr& spec) {
  for (const auto& x : fq_all_elements(spec)) {
    if (x.is_zero()) continue;
    if (fq_order(x) == spec->q - 1) return x;
  }
  fail(Err::ZeroInput, "no multiplicative generator found");  // unreachable
}

FqElem fq_element_of_order(const FqSpecPtr& spec, int64_t d) {
  if (d < 1 || (spec->q - 1) % d != 0)
    fail(Err::MissingRootsOfUnity, "no element of order " + std::to_string(d));
  for (const auto& x : fq_all_elements(spec)) {
    if (x.is_zero()) continue;
    if (fq_order(x) == d) return x;
  }
  fail(Err::MissingRootsOfUnity, "no element of order " + std::to_string(d));  // unreachable
}

int64_t fq_dlog(const FqElem& x) {
  if (x.is_zero()) fail(Err::ZeroInput, "discrete log of zero");
  FqElem g = fq_generator(x.spec());
  FqElem acc = FqElem::one(x.spec());
  for (int64_t k = 0; k < x.spec()->q - 1; ++k) {
    if (acc == x) return k;
    acc = acc * g;
  }
  fail(Err::ZeroInput, "discrete log failed");  // unreachable
}

PowerClass fq_power_class(const FqElem& x, int64_t n) {
  if (x.is_zero()) fail(Err::ZeroInput, "power class of zero");
  int64_t qm1 = x.spec()->q - 1;
  int64_t g = std::gcd(n, qm1);
  PowerClass pc;
  pc.is_nth_power = x.pow(qm1 / g).is_one();
  pc.class_index = fq_dlog(x) % g;
  return pc;
}

FqElem fq_nonresidue(const FqSpecPtr& spec, int64_t n) {
  if (n <= 1 || (spec->q - 1) % n != 0)
    fail(Err::AllElementsArePowers,
         "every element of F_" + std::to_string(spec->q) + " is an n-th power for n = " + std::to_string(n));
  for (const auto& x : fq_all_elements(spec)) {
    if (x.is_zero()) continue;
    if (!fq_power_class(x, n).is_nth_power) return x;
  }
  fail(Err::AllElementsArePowers, "no non-residue found");  // unreachable
}

const char* err_name(Err e) {
  switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::ReducibleModulus: return "ReducibleModulus";
    case Err::DegreeMismatch: return "DegreeMismatch";
    case Err::SpecMismatch: return "SpecMismatch";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::ZeroInput: return "ZeroInput";
    case Err::AllElementsArePowers: return "AllElementsArePowers";
    case Err::PrecisionExhausted: return "PrecisionExhausted";
    case Err::InsufficientPrecision: return "InsufficientPrecision";
    case Err::InsufficientInputPrecision: return "InsufficientInputPrecision";
    case Err::HenselHypothesisFails: return "HenselHypothesisFails";
    case Err::ResidualCharTwo: return "ResidualCharTwo";
    case Err::WildCase: return "WildCase";
    case Err::NotAFieldExtension: return "NotAFieldExtension";
    case Err::MissingRootsOfUnity: return "MissingRootsOfUnity";
    case Err::UnsupportedCase: return "UnsupportedCase";
    case Err::AlgebraMismatch: return "AlgebraMismatch";
    case Err::NotProper: return "NotProper";
    case Err::NormTestInconclusive: return "NormTestInconclusive";
    case Err::TooLarge: return "TooLarge";
    case Err::UnknownTheorem: return "UnknownTheorem";
    case Err::SyntaxError: return "SyntaxError";
    case Err::ContextMismatch: return "ContextMismatch";
  }
  return "Error";
}

}  // namespace naca
