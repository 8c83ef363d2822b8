#include "naca/classify.hpp"

#include <algorithm>

namespace naca {

namespace {

bool is_q2_base(const LocalFieldSpecPtr& s) {
  return s->kind == LocalKind::Padic && s->p == 2;
}

// The unique norm-class representative r with x/r a norm.
LocalElem norm_class_of(const LocalExtPtr& E, const LocalElem& x) {
  for (const auto& r : norm_class_reps(E))
    if (is_norm(E, x / r)) return r;
  fail(Err::NormTestInconclusive, "no norm-class representative matched " + x.str());
}

std::string quadratic_case_tag(const LocalExtPtr& E) {
  if (E->kind == ExtKind::ArtinSchreier) return "T4.6";
  if (is_q2_base(E->base)) {
    switch (q2_square_class(E->param)) {
      case -3: return "T4.5-a";
      case -6:
      case 2: return "T4.5-b";
      default: return "T4.5-c";
    }
  }
  if (!E->ramified) return "T4.4-1";
  return E->base->q() % 4 == 1 ? "T4.4-2a" : "T4.4-2b";
}

// Window scalars: units with `digits` stored digits (leading digit nonzero)
// times pi^v for v in [vmin, vmax], in canonical order.
std::vector<LocalElem> window_scalars(const LocalFieldSpecPtr& F, const Window& w) {
  auto elems = fq_all_elements(F->residue);
  int nd = std::max(1, w.digits);
  std::vector<LocalElem> out;
  for (int v = w.vmin; v <= w.vmax; ++v) {
    std::vector<size_t> code(nd, 0);
    code[0] = 1;  // leading digit nonzero
    while (true) {
      std::vector<FqElem> d;
      for (int i = 0; i < nd; ++i) d.push_back(elems[code[i]]);
      out.push_back(LocalElem::from_digits(F, v, std::move(d)).padded(F->default_precision));
      // mixed-radix increment, least-significant digit last, keeping code[0] nonzero
      int j = nd - 1;
      while (j >= 0) {
        if (++code[j] < elems.size()) break;
        code[j] = j == 0 ? 1 : 0;
        --j;
      }
      if (j < 0) break;
    }
  }
  return out;
}

LocalElem lf_min(const LocalElem& a, const LocalElem& b) { return lf_less(b, a) ? b : a; }

}  // namespace

// ---- quadratic canonical form ----

CanonicalParam<LocalElem> quaternion_canonical(const LocalExtPtr& E, const ExtElem<LocalElem>& a) {
  if (E->m != 2 || E->kind == ExtKind::ArtinSchreier)
    fail(Err::UnsupportedCase, "expected a quadratic extension in odd residual characteristic or over Q_2");
  if (a.in_base()) fail(Err::NotProper, "canonical forms are defined for a outside F");
  const auto& F = E->base;
  const LocalElem& b0 = a.coeff(0);
  const LocalElem& b1 = a.coeff(1);

  CanonicalParam<LocalElem> out;
  out.ext = E;
  out.generator_power = 1;
  out.case_tag = quadratic_case_tag(E);
  out.precision_used = F->default_precision;

  if (b0.is_zero()) {
    // pure a = b1*sqrt(c): class of b1 in F^x / N, folded by -1 when -1 is not a norm
    LocalElem r = norm_class_of(E, b1);
    if (!minus_one_is_norm(E)) r = lf_min(r, norm_class_of(E, -b1));
    out.a = ExtElem<LocalElem>(E, {LocalElem::exact_zero(F), r});
    return out;
  }
  // mixed a = b0 + b1*sqrt(c): scale by the norm part of b0, fold sqrt-part by -1
  LocalElem r = norm_class_of(E, b0);
  LocalElem n = b0 / r;
  LocalElem s = b1 / n;
  s = lf_min(s, -s);
  out.a = ExtElem<LocalElem>(E, {r, s});
  return out;
}

std::vector<CanonicalParam<LocalElem>> quaternion_enumerate(const LocalExtPtr& E, const Window& w) {
  if (E->m != 2 || E->kind == ExtKind::ArtinSchreier)
    fail(Err::UnsupportedCase, "expected a quadratic extension in odd residual characteristic or over Q_2");
  const auto& F = E->base;
  auto reps = norm_class_reps(E);
  std::vector<CanonicalParam<LocalElem>> out;
  auto emit = [&](const LocalElem& c0, const LocalElem& c1) {
    out.push_back(quaternion_canonical(E, ExtElem<LocalElem>(E, {c0, c1})));
  };
  // pattern heads r*sqrt(c)
  std::vector<std::string> seen;
  for (const auto& r : reps) {
    auto cp = quaternion_canonical(E, ExtElem<LocalElem>(E, {LocalElem::exact_zero(F), r}));
    if (std::find(seen.begin(), seen.end(), cp.a.str()) == seen.end()) {
      seen.push_back(cp.a.str());
      out.push_back(cp);
    }
  }
  // mixed forms r + s*sqrt(c), s over the window folded by +-1
  for (const auto& r : reps)
    for (const auto& s : window_scalars(F, w)) {
      if (lf_less(-s, s)) continue;  // keep the canonical sign only
      emit(r, s);
    }
  return out;
}

// ---- characteristic-2 canonical form ----

CanonicalParam<LocalElem> char2_canonical(const LocalExtPtr& E,
                                          std::optional<LocalElem> gamma,
                                          const ExtElem<LocalElem>& a) {
  if (E->kind != ExtKind::ArtinSchreier)
    fail(Err::UnsupportedCase, "expected an Artin-Schreier quadratic extension");
  if (a.in_base()) fail(Err::NotProper, "canonical forms are defined for a outside F");
  const auto& F = E->base;
  LocalElem g = gamma ? *gamma : norm_class_reps(E)[1];
  if (gamma && is_norm(E, g))
    fail(Err::ZeroInput, "gamma must be a non-norm");
  const LocalElem& a0 = a.coeff(0);
  const LocalElem& a1 = a.coeff(1);

  // factor a1 = r*n with r in {1, gamma}
  LocalElem r = is_norm(E, a1) ? LocalElem::one(F) : g;
  LocalElem n = a1 / r;
  // a = n*(s + r*alpha); s identified with s + r via the Galois twist
  LocalElem s = a0.is_zero() ? LocalElem::exact_zero(F) : a0 / n;
  LocalElem best = lf_min(s, s + r);

  CanonicalParam<LocalElem> out;
  out.ext = E;
  out.generator_power = 1;
  out.case_tag = "T4.6";
  out.precision_used = F->default_precision;
  out.a = ExtElem<LocalElem>(E, {best, r});
  return out;
}

// ---- odd prime degree (Kummer) ----

CanonicalParam<LocalElem> prime_canonical(const LocalExtPtr& E, const ExtElem<LocalElem>& a) {
  int m = E->m;
  if (E->kind != ExtKind::Kummer || !is_prime_int(m) || m % 2 == 0)
    fail(Err::UnsupportedCase, "expected a Kummer extension of odd prime degree");
  if (a.in_base()) fail(Err::NotProper, "canonical forms are defined for a outside F");
  const auto& F = E->base;
  auto I = partition_index(a).indices;
  int i0 = I.front();
  const LocalElem& zeta = E->zeta;
  bool zeta_norm = is_norm(E, zeta);

  CanonicalParam<LocalElem> out;
  out.ext = E;
  out.generator_power = 1;
  out.precision_used = F->default_precision;

  auto tail_reduce = [&](std::vector<LocalElem> coords) {
    // least tuple among the m rotations (a_i * zeta^{s(i - i0)})_i
    std::vector<LocalElem> best = coords;
    for (int s = 1; s < m; ++s) {
      std::vector<LocalElem> cand(coords.size(), LocalElem::exact_zero(F));
      for (int i : I) cand[i] = coords[i] * zeta.pow((static_cast<int64_t>(s) * (i - i0)) % m + m);
      // lexicographic comparison over the tail indices
      bool less = false, greater = false;
      for (size_t k = 1; k < I.size() && !less && !greater; ++k) {
        const LocalElem& x = cand[I[k]];
        const LocalElem& y = best[I[k]];
        if (lf_less(x, y)) less = true;
        else if (lf_less(y, x)) greater = true;
      }
      if (less) best = cand;
    }
    return best;
  };

  if (zeta_norm || i0 == 0) {
    // factor the leading coefficient through the norm classes and rotate the tail
    LocalElem c = norm_class_of(E, a.coeff(i0));
    LocalElem n = a.coeff(i0) / c;
    std::vector<LocalElem> coords(m, LocalElem::exact_zero(F));
    for (int i : I) coords[i] = a.coeff(i) / n;
    out.a = ExtElem<LocalElem>(E, tail_reduce(std::move(coords)));
    out.case_tag = zeta_norm ? "T5.6-zeta-in-N" : "T5.6-zeta-not-in-N";
    return out;
  }

  // zeta not a norm, i0 > 0: norm classes are mu_m; a unique twist makes the
  // leading coefficient exactly 1, tail kept verbatim
  LocalElem c = norm_class_of(E, a.coeff(i0));  // = zeta^k
  LocalElem n = a.coeff(i0) / c;
  int k = 0;
  while (k < m && !lf_eq(zeta.pow(k), c)) ++k;
  if (k == m) fail(Err::NormTestInconclusive, "norm classes are not powers of zeta");
  int s = 0;
  while ((k + static_cast<int64_t>(s) * i0) % m != 0) ++s;
  // apply sigma^s (coefficient i picks up zeta^{s*i}) then scale by 1/n: the
  // leading coefficient becomes zeta^{k + s*i0} = 1
  std::vector<LocalElem> coords(m, LocalElem::exact_zero(F));
  for (int i : I) coords[i] = (a.coeff(i) / n) * zeta.pow((static_cast<int64_t>(s) * i) % m + m);
  out.a = ExtElem<LocalElem>(E, std::move(coords));
  out.case_tag = "T5.6-zeta-not-in-N";
  return out;
}

std::vector<CanonicalParam<LocalElem>> prime_enumerate(const LocalExtPtr& E, const Window& w) {
  int m = E->m;
  if (E->kind != ExtKind::Kummer || !is_prime_int(m) || m % 2 == 0)
    fail(Err::UnsupportedCase, "expected a Kummer extension of odd prime degree");
  const auto& F = E->base;
  auto reps = norm_class_reps(E);
  auto scalars = window_scalars(F, w);

  std::string family_tag;
  if (m == 3)
    family_tag = !E->ramified               ? "T5.8-a"
                 : (F->q() - 1) % 9 != 0    ? "T5.8-b-a"
                                            : "T5.8-b-b";

  std::vector<CanonicalParam<LocalElem>> out;
  // enumerate index sets I (subsets of {0..m-1}, nonempty, != {0}) by bitmask
  for (int mask = 1; mask < (1 << m); ++mask) {
    if (mask == 1) continue;  // I = {0} is the associative case
    std::vector<int> I;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) I.push_back(i);
    int i0 = I.front();
    bool lead_one = !is_norm(E, E->zeta) && i0 > 0;
    const std::vector<LocalElem> lead =
        lead_one ? std::vector<LocalElem>{LocalElem::one(F)} : reps;

    for (const auto& c : lead) {
      // tails: every combination of window scalars on the non-leading indices
      size_t tails = I.size() - 1;
      std::vector<size_t> code(tails, 0);
      while (true) {
        std::vector<LocalElem> coords(m, LocalElem::exact_zero(F));
        coords[i0] = c;
        for (size_t k = 0; k < tails; ++k) coords[I[k + 1]] = scalars[code[k]];
        ExtElem<LocalElem> a(E, coords);
        auto cp = prime_canonical(E, a);
        // keep only self-canonical members so the output is duplicate-free
        if (ext_eq(cp.a, a)) {
          if (!family_tag.empty()) cp.case_tag = family_tag;
          out.push_back(std::move(cp));
        }
        size_t k = 0;
        while (k < tails && ++code[k] == scalars.size()) code[k++] = 0;
        if (k == tails || tails == 0) break;
      }
    }
  }
  return out;
}

// ---- degree-4 type list ----

std::vector<Degree4Type> degree4_types(const LocalFieldSpecPtr& F) {
  if (F->kind != LocalKind::Padic || F->p == 2)
    fail(Err::UnsupportedCase, "degree-4 types cover p-adic fields of odd residual characteristic");
  int prec = F->default_precision;
  auto exts = enumerate_extensions(F, 4);
  LocalElem eps = lf_epsilon(F, prec);
  LocalElem pi = LocalElem::uniformizer(F, prec);

  auto intermediate_of = [&](const LocalExtPtr& K) -> std::string {
    if (K->kind == ExtKind::UnramifiedLift || (K->kind == ExtKind::Kummer && !K->ramified))
      return "F(sqrt(" + eps.str() + "))";  // the unramified quadratic subfield
    if (K->kind == ExtKind::QuarticTower) return "F(sqrt(" + eps.str() + "))";
    // Kummer K = F(b^{1/4}): E = F(sqrt(b)), read b modulo squares
    const LocalElem& b = K->param;
    int64_t v = ((b.valuation() % 2) + 2) % 2;
    bool unit_square = fq_power_class(b.leading_digit(), 2).is_nth_power;
    if (v == 0) return unit_square ? "F(sqrt(" + pi.str() + "))"  // unreachable for listed types
                                   : "F(sqrt(" + eps.str() + "))";
    return unit_square ? "F(sqrt(" + pi.str() + "))" : "F(sqrt(" + (eps * pi).str() + "))";
  };

  std::vector<Degree4Type> out;
  for (const auto& K : exts) {
    for (int j : {1, 3}) {
      Degree4Type t;
      t.extension = K->name;
      t.intermediate = intermediate_of(K);
      t.b_descriptor = "(" + K->name + " / " + t.intermediate + ", sigma^2, a)";
      t.generator_power = j;
      t.label = K->name + " with generator sigma^" + std::to_string(j);
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace naca
