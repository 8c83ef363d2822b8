#include "naca/extension.hpp"

#include <algorithm>
#include <numeric>

namespace naca {

const char* ext_kind_name(ExtKind k) {
  switch (k) {
    case ExtKind::FiniteFrobenius: return "finite";
    case ExtKind::QuadraticRoot: return "sqrt";
    case ExtKind::Kummer: return "kummer";
    case ExtKind::ArtinSchreier: return "artin-schreier";
    case ExtKind::UnramifiedLift: return "unramified-lift";
    case ExtKind::QuarticTower: return "quartic-tower";
  }
  return "?";
}

namespace {

std::string base_name(const FqSpecPtr& s) { return "F_" + std::to_string(s->q); }
std::string base_name(const LocalFieldSpecPtr& s) {
  return s->kind == LocalKind::Padic ? "Q_" + std::to_string(s->p)
                                     : "F_" + std::to_string(s->q()) + "((t))";
}

// ---- polynomial helpers over F_q ----

using FqPoly = std::vector<FqElem>;  // low degree first

FqPoly fq_poly_mul(const FqPoly& a, const FqPoly& b, const FqSpecPtr& s) {
  FqPoly r(a.size() + b.size() - 1, FqElem::zero(s));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

// remainder of a modulo monic b
FqPoly fq_poly_rem(FqPoly a, const FqPoly& b, const FqSpecPtr& s) {
  int db = static_cast<int>(b.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
    if (a[d].is_zero()) continue;
    for (int i = 0; i < db; ++i) a[d - db + i] = a[d - db + i] - a[d] * b[i];
    a[d] = FqElem::zero(s);
  }
  a.resize(std::max(db, 1), FqElem::zero(s));
  return a;
}

bool fq_poly_is_zero(const FqPoly& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

// enumerate monic polynomials of degree d over F_q in lexicographic order of
// (c_0, ..., c_{d-1}); visit returns true to stop
template <class Fn>
void for_each_monic(const FqSpecPtr& s, int d, Fn visit) {
  auto elems = fq_all_elements(s);
  std::vector<size_t> idx(d, 0);
  while (true) {
    FqPoly p;
    p.reserve(d + 1);
    for (int i = 0; i < d; ++i) p.push_back(elems[idx[i]]);
    p.push_back(FqElem::one(s));
    if (visit(p)) return;
    int i = d - 1;
    while (i >= 0 && idx[i] + 1 == elems.size()) idx[i--] = 0;
    if (i < 0) return;
    ++idx[i];
  }
}

bool fq_poly_irreducible(const FqPoly& f, const FqSpecPtr& s) {
  int d = static_cast<int>(f.size()) - 1;
  bool reducible = false;
  for (int e = 1; e <= d / 2 && !reducible; ++e) {
    for_each_monic(s, e, [&](const FqPoly& g) {
      if (fq_poly_is_zero(fq_poly_rem(f, g, s))) {
        reducible = true;
        return true;
      }
      return false;
    });
  }
  return !reducible;
}

template <class B>
std::shared_ptr<CyclicExt<B>> new_ext() {
  return std::make_shared<CyclicExt<B>>();
}

// Precompute sigma^j(beta) for j = 0..m-1 from sigma(beta).
template <class B>
void fill_sigma_powers(std::shared_ptr<CyclicExt<B>>& e, std::vector<B> sigma_beta) {
  int m = e->m;
  ExtPtr<B> self = e;
  std::vector<B> id(m, FieldOps<B>::zero(e->base));
  id[1] = FieldOps<B>::one(e->base);
  e->sigma_pow_beta.assign(1, id);
  e->sigma_pow_beta.push_back(sigma_beta);
  ExtElem<B> sb(self, sigma_beta);
  for (int j = 2; j < m; ++j) {
    ExtElem<B> next = ext_eval(self, e->sigma_pow_beta[j - 1], sb);
    e->sigma_pow_beta.push_back(next.coeffs());
  }
}

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

}  // namespace

std::vector<FqElem> fq_least_irreducible(const FqSpecPtr& spec, int m) {
  if (m < 2 || m > 8) fail(Err::TooLarge, "exhaustive irreducible search supports 2 <= m <= 8");
  FqPoly found;
  for_each_monic(spec, m, [&](const FqPoly& f) {
    if (fq_poly_irreducible(f, spec)) {
      found = f;
      return true;
    }
    return false;
  });
  if (found.empty()) fail(Err::ReducibleModulus, "no irreducible polynomial found");
  return found;
}

FqExtPtr finite_ext(const FqSpecPtr& base, int m) {
  if (m < 2) fail(Err::DegreeMismatch, "extension degree must be at least 2");
  auto e = new_ext<FqElem>();
  e->base = base;
  e->m = m;
  e->kind = ExtKind::FiniteFrobenius;
  e->modulus = fq_least_irreducible(base, m);
  e->param = FqElem::zero(base);
  e->zeta = FqElem::zero(base);
  e->name = base_name(base) + "^" + std::to_string(m) + "/" + base_name(base);
  FqExtPtr self = e;
  // placeholder identity so beta^q can be computed before sigma is known
  std::vector<FqElem> id(m, FqElem::zero(base));
  id[1] = FqElem::one(base);
  e->sigma_pow_beta.assign(m, id);
  ExtElem<FqElem> frob = ExtElem<FqElem>::beta(self).pow(base->q);
  e->sigma_pow_beta.clear();
  fill_sigma_powers(e, frob.coeffs());
  return self;
}

// ---- char-2 helpers ----

bool char2_is_square(const LocalElem& f) {
  if (f.spec()->p != 2 || f.spec()->kind != LocalKind::Laurent)
    fail(Err::UnsupportedCase, "char-2 square test needs a characteristic-2 Laurent field");
  if (f.is_zero()) return true;
  if (((f.valuation() % 2) + 2) % 2 == 1) return false;
  for (int i = 0; i < f.precision(); ++i)
    if (!f.digits()[i].is_zero() && ((f.valuation() + i) % 2 + 2) % 2 == 1) return false;
  return true;
}

LocalElem char2_sqrt(const LocalElem& f) {
  if (!char2_is_square(f)) fail(Err::UnsupportedCase, "not a square");
  if (f.is_zero()) return f;
  int64_t q = f.spec()->q();
  int64_t v = f.valuation();
  int n = (f.precision() + 1) / 2;
  std::vector<FqElem> d;
  d.reserve(n);
  for (int i = 0; i < n; ++i) d.push_back(f.digit_at(2 * i).pow(q / 2));
  return LocalElem::from_digits(f.spec(), v / 2, std::move(d));
}

Tri char2_in_p2(const LocalElem& f) {
  const auto& spec = f.spec();
  if (spec->p != 2 || spec->kind != LocalKind::Laurent)
    fail(Err::UnsupportedCase, "P2 membership needs a characteristic-2 Laurent field");
  int64_t qf = spec->q();
  LocalElem w = f;
  for (int guard = 0; guard < 4096; ++guard) {
    if (w.is_zero()) return w.abs_precision() >= 1 ? Tri::True : Tri::Unknown;
    if (w.abs_precision() < 1) return Tri::Unknown;
    int64_t v = w.valuation();
    if (v >= 1) return Tri::True;
    if (v == 0) {
      // solvable iff the residue has absolute trace zero (then Hensel handles
      // the higher digits, since d/dz (z^2 + z) = 1)
      FqElem d0 = w.leading_digit();
      FqElem tr = FqElem::zero(spec->residue);
      FqElem pw = d0;
      for (int64_t e = 2; e <= qf; e *= 2) {
        tr = tr + pw;
        pw = pw * pw;
      }
      return tr.is_zero() ? Tri::True : Tri::False;
    }
    // negative valuation: z^2 dominates, so v must be even with the leading
    // term a square (always soluble in the residue field)
    if (((v % 2) + 2) % 2 == 1) return Tri::False;
    FqElem s = w.leading_digit().pow(qf / 2);
    int len = static_cast<int>(w.abs_precision() - v / 2) + 2;
    LocalElem z = LocalElem::from_residue(spec, s, len).shifted(v / 2);
    w = w - (z * z + z);
  }
  return Tri::Unknown;
}

// ---- Q_2 quadratic norm table ----

namespace {
int q2_row_index(int c) {
  static const int order[7] = {-3, -6, 2, -1, -2, 3, 6};
  for (int i = 0; i < 7; ++i)
    if (order[i] == c) return i;
  fail(Err::UnsupportedCase, "not a nontrivial square class of Q_2");
}
}  // namespace

std::array<int, 4> q2_norm_row(int c_class) {
  static const std::array<int, 4> rows[7] = {
      {1, -1, 3, -3},   // sqrt(-3), unramified
      {1, -1, 6, -6},   // sqrt(-6)
      {1, -1, 2, -2},   // sqrt(2)
      {1, 2, -3, -6},   // sqrt(-1)
      {1, 2, 3, 6},     // sqrt(-2)
      {1, -2, -3, 6},   // sqrt(3)
      {1, -2, 3, -6},   // sqrt(6)
  };
  return rows[q2_row_index(c_class)];
}

int q2_gamma(int c_class) {
  static const int gammas[7] = {2, 3, 3, -1, -1, -1, -1};
  return gammas[q2_row_index(c_class)];
}

bool lf_is_mth_power(const LocalElem& x, int64_t m) {
  if (x.is_zero()) fail(Err::ZeroInput, "power test on zero");
  if (gcd64(m, x.spec()->p) != 1) fail(Err::WildCase, "m must be prime to the residual characteristic");
  if (((x.valuation() % m) + m) % m != 0) return false;
  return fq_power_class(x.leading_digit(), m).is_nth_power;
}

// ---- local extension factories ----

namespace {

bool is_q2(const LocalFieldSpecPtr& s) { return s->kind == LocalKind::Padic && s->p == 2; }

std::shared_ptr<CyclicExt<LocalElem>> local_ext_base(const LocalFieldSpecPtr& base, int m,
                                                     ExtKind kind) {
  auto e = new_ext<LocalElem>();
  e->base = base;
  e->m = m;
  e->kind = kind;
  e->param = LocalElem::exact_zero(base);
  e->zeta = LocalElem::exact_zero(base);
  return e;
}

}  // namespace

LocalExtPtr quadratic_ext(const LocalFieldSpecPtr& base, const LocalElem& c) {
  if (c.is_zero()) fail(Err::ZeroInput, "sqrt of zero is not a field extension");
  if (base->p == 2) {
    if (base->kind == LocalKind::Laurent)
      fail(Err::WildCase, "x^2 - c is inseparable in characteristic 2; use an Artin-Schreier extension");
    if (q2_square_class(c) == 1) fail(Err::NotAFieldExtension, "c is a square in Q_2");
  } else {
    if (square_class(c) == SquareClass::One)
      fail(Err::NotAFieldExtension, "c is a square");
  }
  auto e = local_ext_base(base, 2, ExtKind::QuadraticRoot);
  e->param = c;
  int prec = std::max(c.is_zero() ? 0 : c.precision(), base->default_precision);
  e->modulus = {-c, LocalElem::exact_zero(base), LocalElem::one(base, prec)};
  e->zeta = LocalElem::from_int(base, -1, prec);
  if (base->p == 2)
    e->ramified = (q2_square_class(c) != -3);
  else
    e->ramified = ((c.valuation() % 2) + 2) % 2 == 1;
  e->name = base_name(base) + "(sqrt " + c.str() + ")";
  fill_sigma_powers(e, {LocalElem::exact_zero(base), LocalElem::from_int(base, -1, prec)});
  return e;
}

LocalExtPtr kummer_ext(const LocalFieldSpecPtr& base, int m, const LocalElem& b,
                       std::optional<LocalElem> zeta) {
  if (b.is_zero()) fail(Err::ZeroInput, "Kummer parameter must be nonzero");
  if (m < 2) fail(Err::DegreeMismatch, "degree must be at least 2");
  if (base->p != 0 && m % base->p == 0) fail(Err::WildCase, "degree divisible by the residual characteristic");
  if ((base->q() - 1) % m != 0)
    fail(Err::MissingRootsOfUnity, "mu_m is not contained in the base field (m must divide q-1)");
  bool prime_m = is_prime_int(m);
  if (prime_m) {
    if (lf_is_mth_power(b, m)) fail(Err::NotAFieldExtension, "b is an m-th power");
  } else if (m == 4) {
    if (lf_is_mth_power(b, 2)) fail(Err::NotAFieldExtension, "b is a square");
    LocalElem m4b = LocalElem::from_int(base, -4, base->default_precision) * b;
    if (lf_is_mth_power(m4b, 4)) fail(Err::NotAFieldExtension, "-4b is a fourth power (x^4 - b splits)");
  } else {
    fail(Err::UnsupportedCase, "Kummer degrees supported: 2, odd primes, 4");
  }
  int prec = std::max(b.is_zero() ? 0 : b.precision(), base->default_precision);
  LocalElem z = zeta ? *zeta
                     : (m == 2 ? LocalElem::from_int(base, -1, prec)
                               : teichmuller(base, fq_element_of_order(base->residue, m), prec));
  if (z.is_zero() || fq_order(z.leading_digit()) != m)
    fail(Err::MissingRootsOfUnity, "zeta must be a primitive m-th root of unity");
  auto e = local_ext_base(base, m, ExtKind::Kummer);
  e->param = b;
  e->zeta = z;
  e->modulus.assign(m + 1, LocalElem::exact_zero(base));
  e->modulus[0] = -b;
  e->modulus[m] = LocalElem::one(base, prec);
  e->ramified = ((b.valuation() % m) + m) % m != 0;
  e->name = base_name(base) + "(" + std::to_string(m) + "-root " + b.str() + ")";
  std::vector<LocalElem> sb(m, LocalElem::exact_zero(base));
  sb[1] = z;
  fill_sigma_powers(e, std::move(sb));
  return e;
}

LocalExtPtr artin_schreier_ext(const LocalFieldSpecPtr& base, const LocalElem& c) {
  if (base->p != 2 || base->kind != LocalKind::Laurent)
    fail(Err::UnsupportedCase, "Artin-Schreier extensions here require a characteristic-2 Laurent base");
  Tri t = char2_in_p2(c);
  if (t == Tri::True) fail(Err::NotAFieldExtension, "c = z^2 + z has a solution: x^2 + x + c splits");
  if (t == Tri::Unknown) fail(Err::InsufficientPrecision, "cannot decide whether x^2 + x + c splits");
  auto e = local_ext_base(base, 2, ExtKind::ArtinSchreier);
  e->param = c;
  int prec = std::max(c.is_zero() ? 0 : c.precision(), base->default_precision);
  e->modulus = {c, LocalElem::one(base, prec), LocalElem::one(base, prec)};
  e->ramified = !c.is_zero() && c.valuation() < 0;
  e->name = base_name(base) + "(as " + c.str() + ")";
  fill_sigma_powers(e, {LocalElem::one(base, prec), LocalElem::one(base, prec)});
  return e;
}

LocalExtPtr unramified_ext(const LocalFieldSpecPtr& base, int m) {
  if (m < 2) fail(Err::DegreeMismatch, "degree must be at least 2");
  if ((base->q() - 1) % m == 0) {
    // Kummer realization: adjoin the m-th root of a Teichmueller non-m-th-power
    LocalElem b = teichmuller(base, fq_nonresidue(base->residue, m), base->default_precision);
    auto e = std::const_pointer_cast<CyclicExt<LocalElem>>(kummer_ext(base, m, b));
    e->name = base_name(base) + " unram deg " + std::to_string(m);
    return e;
  }
  // Lift the residue extension and compute sigma(beta) by refining beta^q to a
  // root of the lifted modulus (Newton; the derivative is a unit).
  int target = base->default_precision;
  int work = target + 4;
  auto g = fq_least_irreducible(base->residue, m);
  auto e = local_ext_base(base, m, ExtKind::UnramifiedLift);
  e->modulus.reserve(m + 1);
  for (const auto& gi : g) e->modulus.push_back(LocalElem::from_residue(base, gi, work));
  e->name = base_name(base) + " unram deg " + std::to_string(m);
  // identity placeholder so arithmetic works during construction
  std::vector<LocalElem> id(m, LocalElem::exact_zero(base));
  id[1] = LocalElem::one(base, work);
  e->sigma_pow_beta.assign(m, id);
  LocalExtPtr self = e;

  auto fext = finite_ext(base->residue, m);  // same lex-least modulus
  ExtElem<LocalElem> y = ExtElem<LocalElem>::beta(self).pow(base->q());
  std::vector<LocalElem> dmod;  // derivative of the modulus
  for (int i = 1; i <= m; ++i)
    dmod.push_back(e->modulus[i] * LocalElem::from_int(base, i, work));
  auto residue_of = [&](const ExtElem<LocalElem>& x) {
    std::vector<FqElem> c;
    for (const auto& v : x.coeffs()) c.push_back(v.digit_at(0 - (v.is_zero() ? 0 : v.valuation())));
    for (auto& v : c)
      if (v.spec() == nullptr) v = FqElem::zero(base->residue);
    return ExtElem<FqElem>(fext, std::move(c));
  };
  auto lift_const = [&](const ExtElem<FqElem>& x) {
    std::vector<LocalElem> c;
    for (const auto& v : x.coeffs()) c.push_back(LocalElem::from_residue(base, v, work));
    return ExtElem<LocalElem>(self, std::move(c));
  };
  // residue of f'(y): constant digits only (all inputs are integral units)
  ExtElem<LocalElem> fpy = ext_eval(self, dmod, y);
  ExtElem<LocalElem> w = lift_const(residue_of(fpy).inv());
  ExtElem<LocalElem> two = ExtElem<LocalElem>::from_base(self, LocalElem::from_int(base, 2, work));
  for (int iter = 0; iter < 64; ++iter) {
    ExtElem<LocalElem> fy = ext_eval(self, e->modulus, y);
    bool done = true;
    for (const auto& c : fy.coeffs()) {
      bool ok = c.is_zero() ? c.abs_precision() >= target : c.valuation() >= target;
      if (!ok) done = false;
    }
    if (done) break;
    y = y - fy * w;
    w = w * (two - ext_eval(self, dmod, y) * w);
    if (iter == 63) fail(Err::HenselHypothesisFails, "unramified sigma iteration did not converge");
  }
  e->sigma_pow_beta.clear();
  fill_sigma_powers(e, y.coeffs());
  return self;
}

LocalExtPtr quartic_tower_descriptor(const LocalFieldSpecPtr& base) {
  if (base->p == 2) fail(Err::UnsupportedCase, "odd residual characteristic required");
  auto e = local_ext_base(base, 4, ExtKind::QuarticTower);
  e->arithmetic_ok = false;
  e->ramified = true;
  e->name = base_name(base) + " quartic tower K0 = E(sqrt(eps_E*pi)), E unramified quadratic";
  return e;
}

// ---- norm membership ----

bool is_norm(const FqExtPtr& ext, const FqElem& x) {
  (void)ext;
  if (x.is_zero()) fail(Err::ZeroInput, "norm membership of zero");
  return true;  // finite-field norms are surjective
}

namespace {

// Formal t-derivative of a characteristic-2 Laurent series: only odd
// exponents survive, with coefficient unchanged.
LocalElem laurent_derivative(const LocalElem& u) {
  const auto& spec = u.spec();
  if (u.is_zero()) {
    if (u.is_exact_zero()) return LocalElem::exact_zero(spec);
    return LocalElem::zero_to_precision(spec, u.abs_precision() - 1);
  }
  int64_t v = u.valuation();
  std::vector<FqElem> d;
  for (int i = 0; i < u.precision(); ++i) {
    if (((v + i) % 2 + 2) % 2 == 1)
      d.push_back(u.digit_at(i));
    else
      d.push_back(FqElem::zero(spec->residue));
  }
  return LocalElem::from_digits(spec, v - 1, std::move(d));
}

// Norm-group membership for the Artin-Schreier quadratic F(alpha),
// alpha^2 + alpha = c: x is a norm iff the residue pairing vanishes,
// i.e. the absolute trace (to F_2) of the t^{-1} coefficient of c * x'/x
// is zero. Exact whenever the precision covers that coefficient.
bool as_is_norm(const LocalExtPtr& ext, const LocalElem& x) {
  LocalElem w = ext->param * laurent_derivative(x) / x;
  const auto& kappa = ext->base->residue;
  FqElem res = FqElem::zero(kappa);
  if (w.abs_precision() <= -1)
    fail(Err::NormTestInconclusive,
         "insufficient precision to read the residue of the norm pairing");
  if (!w.is_zero() && w.valuation() <= -1) res = w.digit_at(-1 - w.valuation());
  FqElem tr = FqElem::zero(kappa);
  FqElem acc = res;
  for (int e = 0; e < kappa->n; ++e) {
    tr = tr + acc;
    acc = acc * acc;
  }
  return tr.is_zero();
}

}  // namespace

bool is_norm(const LocalExtPtr& ext, const LocalElem& x) {
  if (!ext->arithmetic_ok) fail(Err::UnsupportedCase, "descriptor-only extension");
  if (x.is_zero()) fail(Err::ZeroInput, "norm membership of zero");
  if (ext->kind == ExtKind::ArtinSchreier) return as_is_norm(ext, x);
  int m = ext->m;
  if (is_q2(ext->base) && m == 2) {
    auto row = q2_norm_row(q2_square_class(ext->param));
    int cls = q2_square_class(x);
    return std::find(row.begin(), row.end(), cls) != row.end();
  }
  if (!ext->ramified) return ((x.valuation() % m) + m) % m == 0;
  // tame totally ramified: K = F(beta), beta^m = b, N(beta) = (-1)^{m+1} b
  const LocalElem& b = ext->param;
  int64_t r = ((b.valuation() % m) + m) % m;
  if (gcd64(r, m) != 1) fail(Err::UnsupportedCase, "parameter valuation not coprime to the degree");
  LocalElem nb = (m % 2 == 0) ? -b : b;
  int64_t rinv = 1;
  while ((rinv * r) % m != 1) ++rinv;
  int64_t k = ((x.valuation() % m) * rinv % m + m) % m;
  LocalElem y = x * nb.pow(-k);  // valuation divisible by m; pi^m = N(pi) is a norm
  return fq_power_class(y.leading_digit(), m).is_nth_power;
}

bool minus_one_is_norm(const LocalExtPtr& ext) {
  return is_norm(ext, LocalElem::from_int(ext->base, -1, ext->base->default_precision));
}

// ---- norm class representatives ----

std::vector<FqElem> norm_class_reps(const FqExtPtr& ext) {
  return {FqElem::one(ext->base)};
}

std::vector<LocalElem> norm_class_reps(const LocalExtPtr& ext) {
  if (!ext->arithmetic_ok) fail(Err::UnsupportedCase, "descriptor-only extension");
  const auto& base = ext->base;
  int prec = base->default_precision;
  int m = ext->m;
  std::vector<LocalElem> reps;
  if (ext->kind == ExtKind::ArtinSchreier) {
    // {1, gamma}: gamma found by a deterministic bounded search over short
    // series (single digits lambda*t^v, then 1 + lambda*t^v)
    reps.push_back(LocalElem::one(base, prec));
    auto elems = fq_all_elements(base->residue);
    std::vector<LocalElem> candidates;
    for (int v = 0; v <= 4; ++v)
      for (size_t i = 1; i < elems.size(); ++i)
        candidates.push_back(LocalElem::from_residue(base, elems[i], prec).shifted(v));
    for (int v = 1; v <= 4; ++v)
      for (size_t i = 1; i < elems.size(); ++i)
        candidates.push_back(LocalElem::one(base, prec) +
                             LocalElem::from_residue(base, elems[i], prec).shifted(v));
    for (const auto& cand : candidates)
      if (!is_norm(ext, cand)) {
        reps.push_back(cand);
        return reps;
      }
    fail(Err::NormTestInconclusive, "bounded search found no norm-class representative");
  }
  if (is_q2(base) && m == 2) {
    reps.push_back(LocalElem::one(base, prec));
    reps.push_back(LocalElem::from_int(base, q2_gamma(q2_square_class(ext->param)), prec));
    return reps;
  }
  if (!ext->ramified) {
    for (int i = 0; i < m; ++i) reps.push_back(LocalElem::one(base, prec).shifted(i));
    return reps;
  }
  if (m == 2) {
    reps.push_back(LocalElem::one(base, prec));
    reps.push_back(lf_epsilon(base, prec));
    return reps;
  }
  if ((base->q() - 1) % (static_cast<int64_t>(m) * m) != 0) {
    for (int i = 0; i < m; ++i) reps.push_back(ext->zeta.pow(i));
    return reps;
  }
  LocalElem rho = teichmuller(base, fq_generator(base->residue), prec);
  for (int i = 0; i < m; ++i) reps.push_back(rho.pow(i));
  return reps;
}

// ---- enumeration ----

std::vector<FqExtPtr> enumerate_extensions(const FqSpecPtr& base, int m) {
  return {finite_ext(base, m)};
}

std::vector<LocalExtPtr> enumerate_extensions(const LocalFieldSpecPtr& base, int m) {
  int prec = base->default_precision;
  std::vector<LocalExtPtr> out;
  if (m == 2 && is_q2(base)) {
    for (int c : {-3, -6, 2, -1, -2, 3, 6})
      out.push_back(quadratic_ext(base, LocalElem::from_int(base, c, prec)));
    return out;
  }
  if (base->p == 2) fail(Err::UnsupportedCase, "characteristic-2 families are infinite; use Artin-Schreier sampling");
  if (m == 2) {
    LocalElem eps = lf_epsilon(base, prec);
    LocalElem pi = LocalElem::uniformizer(base, prec);
    out.push_back(quadratic_ext(base, eps));
    out.push_back(quadratic_ext(base, pi));
    out.push_back(quadratic_ext(base, eps * pi));
    return out;
  }
  if (is_prime_int(m) && m % 2 == 1) {
    if (m == base->p) fail(Err::WildCase, "wildly ramified degrees are out of scope");
    if ((base->q() - 1) % m != 0)
      fail(Err::MissingRootsOfUnity, "enumeration requires mu_m in the base field");
    out.push_back(unramified_ext(base, m));
    LocalElem g = teichmuller(base, fq_generator(base->residue), prec);
    LocalElem pi = LocalElem::uniformizer(base, prec);
    for (int i = 0; i < m; ++i) out.push_back(kummer_ext(base, m, g.pow(i) * pi));
    return out;
  }
  if (m == 4) {
    if (base->q() % 4 == 1) {
      LocalElem eps = lf_epsilon(base, prec);
      LocalElem pi = LocalElem::uniformizer(base, prec);
      // L4, K0, then the four totally ramified quartics K1..K4
      out.push_back(unramified_ext(base, 4));
      out.push_back(kummer_ext(base, 4, eps * pi * pi));
      for (int i = 1; i <= 4; ++i)
        out.push_back(kummer_ext(base, 4, i == 4 ? pi : eps.pow(i) * pi));
      return out;
    }
    out.push_back(unramified_ext(base, 4));
    out.push_back(quartic_tower_descriptor(base));
    return out;
  }
  fail(Err::UnsupportedCase, "unsupported (field, degree) combination");
}

std::vector<LocalExtPtr> sample_artin_schreier(const LocalFieldSpecPtr& base, int count) {
  std::vector<LocalExtPtr> out;
  for (int k = 0; k < count; ++k) {
    LocalElem c = LocalElem::one(base, base->default_precision).shifted(-(2 * k + 1));
    out.push_back(artin_schreier_ext(base, c));
  }
  return out;
}

// ---- field identity ----

bool ext_same_field(const FqExtPtr& a, const FqExtPtr& b) {
  return a->base->same_as(*b->base) && a->m == b->m;  // unique extension per degree
}

bool ext_same_field(const LocalExtPtr& a, const LocalExtPtr& b) {
  if (!a->base->same_as(*b->base) || a->m != b->m) return false;
  if (a->kind == ExtKind::QuarticTower || b->kind == ExtKind::QuarticTower)
    return a->kind == b->kind;
  if (a->kind == ExtKind::ArtinSchreier || b->kind == ExtKind::ArtinSchreier) {
    if (a->kind != b->kind) return false;
    Tri t = char2_in_p2(a->param + b->param);  // c + c' in P2 iff same field
    if (t == Tri::Unknown) fail(Err::InsufficientPrecision, "cannot compare Artin-Schreier fields");
    return t == Tri::True;
  }
  bool ua = a->kind == ExtKind::UnramifiedLift || !a->ramified;
  bool ub = b->kind == ExtKind::UnramifiedLift || !b->ramified;
  if (ua != ub) return false;
  if (a->kind == ExtKind::UnramifiedLift || b->kind == ExtKind::UnramifiedLift)
    return ua && ub;  // at most one unramified extension per degree
  if (a->m == 2) {
    if (is_q2(a->base)) return q2_square_class(a->param) == q2_square_class(b->param);
    return square_class(a->param) == square_class(b->param);
  }
  // Kummer: same field iff b' lies in the subgroup generated by b mod m-th powers
  for (int j = 1; j < a->m; ++j)
    if (lf_is_mth_power(b->param / a->param.pow(j), a->m)) return true;
  return false;
}

}  // namespace naca
