#include "naca/localfield.hpp"

#include <algorithm>
#include <sstream>

namespace naca {

LocalFieldSpecPtr padic_field(int64_t p, int default_precision) {
  if (!is_prime_int(p)) fail(Err::NotPrime, "p-adic field needs a prime, got " + std::to_string(p));
  if (default_precision < 3) fail(Err::InsufficientPrecision, "default precision must be >= 3");
  auto spec = std::make_shared<LocalFieldSpec>();
  spec->kind = LocalKind::Padic;
  spec->p = p;
  spec->residue = fq_make(p, 1);
  spec->default_precision = default_precision;
  return spec;
}

LocalFieldSpecPtr laurent_field(const FqSpecPtr& residue, int default_precision) {
  if (default_precision < 3) fail(Err::InsufficientPrecision, "default precision must be >= 3");
  auto spec = std::make_shared<LocalFieldSpec>();
  spec->kind = LocalKind::Laurent;
  spec->p = residue->p;
  spec->residue = residue;
  spec->default_precision = default_precision;
  return spec;
}

namespace {
void check_specs(const LocalElem& a, const LocalElem& b) {
  if (!a.spec() || !b.spec() || !a.spec()->same_as(*b.spec()))
    fail(Err::SpecMismatch, "operands belong to different local fields");
}
}  // namespace

LocalElem LocalElem::exact_zero(const LocalFieldSpecPtr& spec) {
  LocalElem x;
  x.spec_ = spec;
  return x;
}

LocalElem LocalElem::zero_to_precision(const LocalFieldSpecPtr& spec, int64_t abs_prec) {
  LocalElem x;
  x.spec_ = spec;
  x.abs_prec_ = std::min(abs_prec, kExactZero);
  return x;
}

LocalElem LocalElem::make_normalized(const LocalFieldSpecPtr& spec, int64_t val,
                                     std::vector<FqElem> digits, int64_t abs_prec) {
  size_t lead = 0;
  while (lead < digits.size() && digits[lead].is_zero()) ++lead;
  if (lead == digits.size()) return zero_to_precision(spec, abs_prec);
  if (lead > 0) digits.erase(digits.begin(), digits.begin() + lead);
  LocalElem x;
  x.spec_ = spec;
  x.zero_ = false;
  x.v_ = val + static_cast<int64_t>(lead);
  // drop digits beyond the stated absolute precision
  int64_t keep = abs_prec - x.v_;
  if (keep <= 0) return zero_to_precision(spec, abs_prec);
  if (static_cast<int64_t>(digits.size()) > keep) digits.resize(keep);
  x.d_ = std::move(digits);
  return x;
}

LocalElem LocalElem::from_digits(const LocalFieldSpecPtr& spec, int64_t val,
                                 std::vector<FqElem> digits) {
  if (digits.empty()) fail(Err::ZeroInput, "from_digits needs at least one digit");
  for (const auto& d : digits)
    if (!d.spec()->same_as(*spec->residue)) fail(Err::SpecMismatch, "digit from wrong residue field");
  int64_t abs_prec = val + static_cast<int64_t>(digits.size());
  return make_normalized(spec, val, std::move(digits), abs_prec);
}

LocalElem LocalElem::from_int(const LocalFieldSpecPtr& spec, int64_t k, int precision) {
  if (k == 0) return exact_zero(spec);
  if (spec->kind == LocalKind::Laurent) {
    std::vector<FqElem> d;
    d.push_back(FqElem::from_int(spec->residue, k));
    d.resize(precision, FqElem::zero(spec->residue));
    if (d[0].is_zero()) return exact_zero(spec);  // k divisible by the characteristic
    return from_digits(spec, 0, std::move(d));
  }
  bool neg = k < 0;
  uint64_t mag = neg ? static_cast<uint64_t>(-k) : static_cast<uint64_t>(k);
  int64_t val = 0;
  while (mag % spec->p == 0) {
    mag /= spec->p;
    ++val;
  }
  std::vector<FqElem> d;
  for (int i = 0; i < precision; ++i) {
    d.push_back(FqElem::from_int(spec->residue, static_cast<int64_t>(mag % spec->p)));
    mag /= spec->p;
  }
  LocalElem x = from_digits(spec, val, std::move(d));
  return neg ? -x : x;
}

LocalElem LocalElem::from_int(const LocalFieldSpecPtr& spec, int64_t k) {
  return from_int(spec, k, spec->default_precision);
}

LocalElem LocalElem::from_residue(const LocalFieldSpecPtr& spec, const FqElem& d, int precision) {
  std::vector<FqElem> digits{d};
  digits.resize(std::max(precision, 1), FqElem::zero(spec->residue));
  return from_digits(spec, 0, std::move(digits));
}

LocalElem LocalElem::one(const LocalFieldSpecPtr& spec, int precision) {
  return from_int(spec, 1, precision < 0 ? spec->default_precision : precision);
}

LocalElem LocalElem::uniformizer(const LocalFieldSpecPtr& spec, int precision) {
  return one(spec, precision).shifted(1);
}

int64_t LocalElem::valuation() const {
  if (zero_) fail(Err::ZeroInput, "valuation of (an apparent) zero");
  return v_;
}

const FqElem& LocalElem::leading_digit() const {
  if (zero_) fail(Err::ZeroInput, "leading digit of zero");
  return d_[0];
}

FqElem LocalElem::digit_at(int64_t i) const {
  if (zero_ || i < 0 || i >= static_cast<int64_t>(d_.size())) return FqElem::zero(spec_->residue);
  return d_[i];
}

LocalElem LocalElem::shifted(int64_t k) const {
  LocalElem x = *this;
  if (x.zero_) {
    if (!x.is_exact_zero()) x.abs_prec_ += k;
  } else {
    x.v_ += k;
  }
  return x;
}

LocalElem LocalElem::truncated_abs(int64_t abs_prec) const {
  if (zero_) return zero_to_precision(spec_, std::min(abs_prec_, abs_prec));
  std::vector<FqElem> d = d_;
  return make_normalized(spec_, v_, std::move(d), std::min(abs_precision(), abs_prec));
}

LocalElem LocalElem::truncated(int n) const {
  if (zero_) return *this;
  return truncated_abs(v_ + n);
}

LocalElem LocalElem::padded(int n) const {
  if (zero_) {
    if (is_exact_zero()) return *this;
    fail(Err::PrecisionExhausted, "cannot pad a value only known to be O(pi^k)");
  }
  LocalElem x = *this;
  while (static_cast<int>(x.d_.size()) < n) x.d_.push_back(FqElem::zero(spec_->residue));
  return x;
}

LocalElem LocalElem::operator-() const {
  if (zero_) return *this;
  LocalElem x = *this;
  if (spec_->kind == LocalKind::Laurent) {
    for (auto& d : x.d_) d = -d;
  } else {
    int64_t p = spec_->p;
    x.d_[0] = FqElem::from_int(spec_->residue, p - d_[0].prime_value());
    for (size_t i = 1; i < d_.size(); ++i)
      x.d_[i] = FqElem::from_int(spec_->residue, p - 1 - d_[i].prime_value());
  }
  return x;
}

LocalElem lf_add_impl(const LocalElem& a, const LocalElem& b, bool negate_b) {
  check_specs(a, b);
  const auto& spec = a.spec();
  int64_t prec = std::min(a.abs_precision(), b.abs_precision());
  if (a.is_zero() && b.is_zero()) return LocalElem::zero_to_precision(spec, prec);
  if (a.is_zero()) return (negate_b ? -b : b).truncated_abs(prec);
  if (b.is_zero()) return a.truncated_abs(prec);
  int64_t v0 = std::min(a.valuation(), b.valuation());
  if (prec <= v0) return LocalElem::zero_to_precision(spec, prec);
  int64_t len = prec - v0;
  std::vector<FqElem> out;
  out.reserve(len);
  if (spec->kind == LocalKind::Laurent) {
    for (int64_t i = 0; i < len; ++i) {
      FqElem da = a.digit_at(v0 + i - a.valuation());
      FqElem db = b.digit_at(v0 + i - b.valuation());
      out.push_back(negate_b ? da - db : da + db);
    }
  } else {
    int64_t p = spec->p;
    int64_t carry = 0;
    for (int64_t i = 0; i < len; ++i) {
      int64_t da = a.digit_at(v0 + i - a.valuation()).prime_value();
      int64_t db = b.digit_at(v0 + i - b.valuation()).prime_value();
      int64_t s = carry + da + (negate_b ? -db : db);
      int64_t r = s % p;
      if (r < 0) r += p;
      carry = (s - r) / p;
      out.push_back(FqElem::from_int(spec->residue, r));
    }
  }
  return LocalElem::make_normalized(spec, v0, std::move(out), prec);
}

LocalElem operator+(const LocalElem& a, const LocalElem& b) { return lf_add_impl(a, b, false); }
LocalElem operator-(const LocalElem& a, const LocalElem& b) { return lf_add_impl(a, b, true); }

LocalElem operator*(const LocalElem& a, const LocalElem& b) {
  check_specs(a, b);
  const auto& spec = a.spec();
  if (a.is_exact_zero() || b.is_exact_zero()) return LocalElem::exact_zero(spec);
  if (a.is_zero() || b.is_zero()) {
    // v(x * O(pi^k)) >= v(x) + k
    int64_t bound_a = a.is_zero() ? a.abs_precision() : a.valuation();
    int64_t bound_b = b.is_zero() ? b.abs_precision() : b.valuation();
    return LocalElem::zero_to_precision(spec, std::min(bound_a + bound_b, LocalElem::kExactZero));
  }
  int64_t v = a.valuation() + b.valuation();
  int64_t n = std::min(a.precision(), b.precision());
  std::vector<FqElem> out;
  out.reserve(n);
  if (spec->kind == LocalKind::Laurent) {
    for (int64_t k = 0; k < n; ++k) {
      FqElem s = FqElem::zero(spec->residue);
      for (int64_t i = std::max<int64_t>(0, k - b.precision() + 1);
           i <= std::min<int64_t>(k, a.precision() - 1); ++i)
        s = s + a.digits()[i] * b.digits()[k - i];
      out.push_back(s);
    }
  } else {
    int64_t p = spec->p;
    int64_t carry = 0;
    for (int64_t k = 0; k < n; ++k) {
      int64_t s = carry;
      for (int64_t i = std::max<int64_t>(0, k - b.precision() + 1);
           i <= std::min<int64_t>(k, a.precision() - 1); ++i)
        s += a.digits()[i].prime_value() * b.digits()[k - i].prime_value();
      out.push_back(FqElem::from_int(spec->residue, s % p));
      carry = s / p;
    }
  }
  return LocalElem::make_normalized(spec, v, std::move(out), v + n);
}

LocalElem LocalElem::inv() const {
  if (zero_) fail(is_exact_zero() ? Err::DivisionByZero : Err::PrecisionExhausted,
                  "inverse of (an apparent) zero");
  int n = precision();
  LocalElem u = shifted(-v_);  // unit part
  // Newton iteration w <- w(2 - uw); the error 1 - uw squares each step.
  LocalElem w = from_residue(spec_, d_[0].inv(), 1);
  LocalElem two = from_int(spec_, 2, n);
  int k = 1;
  while (k < n) {
    k = std::min(2 * k, n);
    LocalElem wk = w.padded(k);
    w = wk * (two.truncated(k) - u.truncated(k) * wk);
  }
  return w.shifted(-v_);
}

LocalElem operator/(const LocalElem& a, const LocalElem& b) { return a * b.inv(); }

LocalElem LocalElem::pow(int64_t e) const {
  if (e < 0) return inv().pow(-e);
  LocalElem acc = one(spec_, zero_ ? spec_->default_precision : precision());
  LocalElem base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    if ((e >>= 1) > 0) base = base * base;
  }
  return acc;
}

bool lf_eq(const LocalElem& a, const LocalElem& b) { return (a - b).is_zero(); }

bool lf_less(const LocalElem& a, const LocalElem& b) {
  check_specs(a, b);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
  if (a.valuation() != b.valuation()) return a.valuation() < b.valuation();
  int n = std::min(a.precision(), b.precision());
  for (int i = 0; i < n; ++i) {
    if (a.digits()[i] != b.digits()[i]) return fq_less(a.digits()[i], b.digits()[i]);
  }
  return a.precision() < b.precision();
}

std::string LocalElem::str() const {
  if (is_exact_zero()) return "0";
  std::string pi = spec_->uniformizer_symbol();
  std::ostringstream os;
  if (zero_) {
    os << "O(" << pi << "^" << abs_prec_ << ")";
    return os.str();
  }
  auto digit_str = [&](const FqElem& d) {
    return spec_->kind == LocalKind::Padic ? std::to_string(d.prime_value()) : d.str();
  };
  os << pi << "^" << v_ << "*(";
  bool first = true;
  for (size_t i = 0; i < d_.size(); ++i) {
    if (d_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << digit_str(d_[i]);
    if (i == 1)
      os << "*" << pi;
    else if (i > 1)
      os << "*" << pi << "^" << i;
  }
  if (!first) os << " + ";
  os << "O(" << pi << "^" << d_.size() << "))";
  return os.str();
}

UnitDecomposition lf_decompose(const LocalElem& x) {
  if (x.is_zero()) fail(Err::ZeroInput, "cannot decompose zero");
  UnitDecomposition u;
  u.valuation = x.valuation();
  u.teich = teichmuller(x.spec(), x.leading_digit(), x.precision());
  u.one_unit = x.shifted(-u.valuation) / u.teich;
  return u;
}

LocalPoly lf_poly_from_ints(const LocalFieldSpecPtr& spec, const std::vector<int64_t>& coeffs,
                            int precision) {
  LocalPoly f;
  f.reserve(coeffs.size());
  for (int64_t c : coeffs) f.push_back(LocalElem::from_int(spec, c, precision));
  return f;
}

LocalElem lf_poly_eval(const LocalPoly& f, const LocalElem& x) {
  LocalElem acc = LocalElem::exact_zero(x.spec());
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

LocalPoly lf_poly_derivative(const LocalPoly& f) {
  LocalPoly g;
  for (size_t i = 1; i < f.size(); ++i) {
    int prec = f[i].is_zero() ? f[i].spec()->default_precision : std::max(4, f[i].precision());
    g.push_back(f[i] * LocalElem::from_int(f[i].spec(), static_cast<int64_t>(i), prec));
  }
  return g;
}

LocalElem hensel_lift(const LocalPoly& f, const LocalElem& a, int target_precision) {
  if (f.empty()) fail(Err::ZeroInput, "empty polynomial");
  const auto& spec = f.front().spec();
  if (!a.is_zero() && a.valuation() < 0)
    fail(Err::HenselHypothesisFails, "approximation must have valuation >= 0");
  LocalElem fa = lf_poly_eval(f, a);
  LocalPoly fp = lf_poly_derivative(f);
  LocalElem fpa = lf_poly_eval(fp, a);
  if (fpa.is_zero()) {
    if (fpa.is_exact_zero()) fail(Err::HenselHypothesisFails, "f'(a) = 0");
    fail(Err::InsufficientInputPrecision, "f'(a) indistinguishable from zero");
  }
  int64_t vfp = fpa.valuation();
  if (fa.is_zero()) {
    if (!fa.is_exact_zero() && fa.abs_precision() <= 2 * vfp)
      fail(Err::InsufficientInputPrecision, "cannot verify v(f(a)) > 2 v(f'(a))");
  } else if (fa.valuation() <= 2 * vfp) {
    fail(Err::HenselHypothesisFails, "v(f(a)) <= 2 v(f'(a))");
  }
  int work = target_precision + 2 * static_cast<int>(vfp) + 2;
  LocalElem x = a.is_exact_zero() ? LocalElem::exact_zero(spec) : a.padded(work);
  for (int iter = 0; iter < 64; ++iter) {
    LocalElem fx = lf_poly_eval(f, x);
    bool done = fx.is_zero() ? fx.abs_precision() >= target_precision
                             : fx.valuation() >= target_precision;
    if (done) return x.truncated_abs(target_precision);
    LocalElem fpx = lf_poly_eval(fp, x);
    x = (x - fx / fpx).padded(work);
  }
  fail(Err::HenselHypothesisFails, "Newton iteration did not converge");
}

LocalElem teichmuller(const LocalFieldSpecPtr& spec, const FqElem& d, int precision) {
  if (d.is_zero()) fail(Err::ZeroInput, "Teichmueller lift of zero");
  if (!d.spec()->same_as(*spec->residue)) fail(Err::SpecMismatch, "digit from wrong residue field");
  if (spec->kind == LocalKind::Laurent) return LocalElem::from_residue(spec, d, precision);
  // Unique root of x^(q-1) - 1 congruent to d.
  std::vector<int64_t> coeffs(spec->q(), 0);
  coeffs[0] = -1;
  coeffs[spec->q() - 1] = 1;
  LocalPoly f = lf_poly_from_ints(spec, coeffs, precision + 2);
  return hensel_lift(f, LocalElem::from_residue(spec, d, precision + 2), precision);
}

const char* square_class_name(SquareClass c) {
  switch (c) {
    case SquareClass::One: return "1";
    case SquareClass::Eps: return "eps";
    case SquareClass::Pi: return "pi";
    case SquareClass::EpsPi: return "eps*pi";
  }
  return "?";
}

SquareClass square_class(const LocalElem& x) {
  if (!x.spec() || x.spec()->p == 2) fail(Err::ResidualCharTwo, "use q2_square_class at p = 2");
  if (x.is_zero()) fail(Err::ZeroInput, "square class of zero");
  bool odd_val = (x.valuation() % 2 + 2) % 2 == 1;
  bool unit_square = fq_power_class(x.leading_digit(), 2).is_nth_power;
  if (odd_val) return unit_square ? SquareClass::Pi : SquareClass::EpsPi;
  return unit_square ? SquareClass::One : SquareClass::Eps;
}

int q2_square_class(const LocalElem& x) {
  if (!x.spec() || x.spec()->kind != LocalKind::Padic || x.spec()->p != 2)
    fail(Err::UnsupportedCase, "q2_square_class is specific to Q_2");
  if (x.is_zero()) fail(Err::ZeroInput, "square class of zero");
  if (x.precision() < 3) fail(Err::InsufficientPrecision, "unit part must be known mod 8");
  int64_t u = x.digits()[0].prime_value() + 2 * x.digits()[1].prime_value() +
              4 * x.digits()[2].prime_value();
  bool odd_val = (x.valuation() % 2 + 2) % 2 == 1;
  int unit_class;
  switch (u) {
    case 1: unit_class = 1; break;
    case 3: unit_class = 3; break;
    case 5: unit_class = -3; break;
    default: unit_class = -1; break;  // 7
  }
  if (!odd_val) return unit_class;
  switch (unit_class) {
    case 1: return 2;
    case 3: return 6;
    case -3: return -6;
    default: return -2;
  }
}

MthUnitClass mth_unit_class(const LocalElem& x, int64_t m) {
  if (!x.spec()) fail(Err::ZeroInput, "empty element");
  if (x.spec()->p == m) fail(Err::WildCase, "residual characteristic equals m");
  if ((x.spec()->q() - 1) % m != 0)
    fail(Err::MissingRootsOfUnity, "m must divide q-1 for the residue reduction");
  if (x.is_zero()) fail(Err::ZeroInput, "unit class of zero");
  MthUnitClass r;
  PowerClass pc = fq_power_class(x.leading_digit(), m);
  r.valuation_mod_m = ((x.valuation() % m) + m) % m;
  r.is_mth_power = pc.is_nth_power && r.valuation_mod_m == 0;
  r.class_index = pc.class_index;
  return r;
}

LocalElem lf_epsilon(const LocalFieldSpecPtr& spec, int precision) {
  return teichmuller(spec, fq_nonresidue(spec->residue, 2), precision);
}

}  // namespace naca
