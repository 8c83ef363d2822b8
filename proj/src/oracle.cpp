#include "naca/oracle.hpp"

#include <cstdint>

#include "naca/linalg.hpp"

namespace naca {

namespace {

int64_t algebra_size(const AlgPtr<FqElem>& A) {
  int n = A->ext->m * A->ext->m;
  int64_t sz = 1;
  for (int i = 0; i < n; ++i) {
    if (sz > kOracleGuard) return kOracleGuard + 1;
    sz *= A->ext->base->q;
  }
  return sz;
}

void guard(int64_t size, const char* what) {
  if (size > kOracleGuard)
    fail(Err::TooLarge, std::string(what) + ": search space exceeds the resource guard");
}

int64_t mod_pow(int64_t b, int64_t e, int64_t p) {
  int64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool modp_nonsingular(std::vector<std::vector<int64_t>>& m, int64_t p) {
  int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(m[col], m[piv]);
    int64_t inv = mod_pow(m[col][col], p - 2, p);
    for (int c = col; c < n; ++c) m[col][c] = m[col][c] * inv % p;
    for (int r = col + 1; r < n; ++r) {
      int64_t f = m[r][col] % p;
      if (f == 0) continue;
      for (int c = col; c < n; ++c) m[r][c] = ((m[r][c] - f * m[col][c]) % p + p) % p;
    }
  }
  return true;
}

// Structure tensor T[w][u] = coordinates of e_w * e_u.
std::vector<std::vector<std::vector<FqElem>>> structure_tensor(const AlgPtr<FqElem>& A) {
  int n = A->ext->m * A->ext->m;
  std::vector<AlgElem<FqElem>> basis;
  for (int w = 0; w < n; ++w) basis.push_back(alg_basis_elem(A, w));
  std::vector<std::vector<std::vector<FqElem>>> T(n);
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u) T[w].push_back(alg_coords(basis[w] * basis[u]));
  return T;
}

// All elements of K as coefficient vectors in canonical counting order.
std::vector<ExtElem<FqElem>> all_ext_elements(const FqExtPtr& E) {
  auto all = fq_all_elements(E->base);
  int m = E->m;
  std::vector<size_t> code(m, 0);
  std::vector<ExtElem<FqElem>> out;
  while (true) {
    std::vector<FqElem> c;
    for (int i = 0; i < m; ++i) c.push_back(all[code[i]]);
    out.emplace_back(E, std::move(c));
    int i = 0;
    while (i < m && ++code[i] == all.size()) code[i++] = 0;
    if (i == m) break;
  }
  return out;
}

}  // namespace

bool brute_is_division(const AlgPtr<FqElem>& A) {
  guard(algebra_size(A), "brute_is_division");
  const int n = A->ext->m * A->ext->m;
  const auto& spec = A->ext->base;
  auto T = structure_tensor(A);

  if (spec->n == 1) {
    // prime base: integer arithmetic modulo p
    const int64_t p = spec->p;
    std::vector<std::vector<std::vector<int64_t>>> Ti(n,
        std::vector<std::vector<int64_t>>(n, std::vector<int64_t>(n)));
    for (int w = 0; w < n; ++w)
      for (int u = 0; u < n; ++u)
        for (int k = 0; k < n; ++k) Ti[w][u][k] = T[w][u][k].prime_value();
    std::vector<int64_t> x(n, 0);
    x[0] = 1;
    while (true) {
      // right multiplication: R_x(e_u) = e_u * x
      std::vector<std::vector<int64_t>> R(n, std::vector<int64_t>(n, 0));
      for (int w = 0; w < n; ++w) {
        if (x[w] == 0) continue;
        for (int u = 0; u < n; ++u)
          for (int k = 0; k < n; ++k) R[k][u] = (R[k][u] + x[w] * Ti[u][w][k]) % p;
      }
      if (!modp_nonsingular(R, p)) return false;
      int i = 0;
      while (i < n && ++x[i] == p) x[i++] = 0;
      if (i == n) break;
    }
    return true;
  }

  auto all = fq_all_elements(spec);
  std::vector<size_t> code(n, 0);
  code[0] = 1;
  while (true) {
    std::vector<std::vector<FqElem>> R(n, std::vector<FqElem>(n, FqElem::zero(spec)));
    for (int w = 0; w < n; ++w) {
      if (code[w] == 0) continue;
      for (int u = 0; u < n; ++u)
        for (int k = 0; k < n; ++k) {
          if (T[u][w][k].is_zero()) continue;
          R[k][u] = R[k][u] + all[code[w]] * T[u][w][k];
        }
    }
    if (!fq_matrix_nonsingular(std::move(R), spec)) return false;
    int i = 0;
    while (i < n && ++code[i] == all.size()) code[i++] = 0;
    if (i == n) break;
  }
  return true;
}

AlgElem<FqElem> IsoWitness::apply(const AlgPtr<FqElem>& src, const AlgPtr<FqElem>& dst,
                                  const AlgElem<FqElem>& x) const {
  int m = src->ext->m;
  // z_s = image of t^s
  std::vector<AlgElem<FqElem>> z{AlgElem<FqElem>::one(dst)};
  for (int s = 1; s < m; ++s) z.push_back(image_of_t * z.back());
  auto out = AlgElem<FqElem>::zero(dst);
  for (int s = 0; s < m; ++s) {
    auto k = sigma_apply(ExtElem<FqElem>(dst->ext, x.coeff(s).coeffs()), galois_power);
    out = out + AlgElem<FqElem>::from_ext(dst, k, 0) * z[s];
  }
  return out;
}

std::optional<IsoWitness> brute_isomorphic(const AlgPtr<FqElem>& A, const AlgPtr<FqElem>& B) {
  if (!A->ext->base->same_as(*B->ext->base) || A->ext->m != B->ext->m)
    return std::nullopt;
  guard(algebra_size(B), "brute_isomorphic");
  const int m = A->ext->m;
  const int n = m * m;
  const auto& spec = A->ext->base;
  auto all = fq_all_elements(spec);

  std::vector<AlgElem<FqElem>> basisA, basisB;
  for (int w = 0; w < n; ++w) {
    basisA.push_back(alg_basis_elem(A, w));
    basisB.push_back(alg_basis_elem(B, w));
  }
  auto betaB = ExtElem<FqElem>::beta(B->ext);

  // enumerate candidates phi|_K = sigma^g, phi(t) = y over all of B
  std::vector<size_t> code(n, 0);
  code[0] = 1;
  while (true) {
    // cheap necessary condition, independent of g: phi(t * k) = phi(t) phi(k)
    // forces every nonzero degree s of y to satisfy jB * s = jA (mod m)
    bool support_ok = true;
    for (int w = 0; w < n && support_ok; ++w)
      if (code[w] != 0 && (B->j * (w / m)) % m != A->j % m) support_ok = false;

    if (support_ok) {
      std::vector<FqElem> coords;
      for (int w = 0; w < n; ++w) coords.push_back(all[code[w]]);
      auto y = alg_from_coords(B, coords);
      // images z_s of t^s
      std::vector<AlgElem<FqElem>> z{AlgElem<FqElem>::one(B)};
      for (int s = 1; s < m; ++s) z.push_back(y * z.back());
      for (int g = 0; g < m; ++g) {
        // filter: phi(t^{m-1} t) = phi(a), i.e. z_{m-1} y = sigma^g(a)
        auto aB = sigma_apply(ExtElem<FqElem>(B->ext, A->a.coeffs()), g);
        if (!alg_eq(z[m - 1] * y, AlgElem<FqElem>::from_ext(B, aB, 0))) continue;

        // full linear map: phi(beta^i t^s) = sigma^g(beta^i) * z_s
        IsoWitness wit{g, y};
        std::vector<AlgElem<FqElem>> img;
        bool ok = true;
        for (int w = 0; w < n; ++w) {
          auto k = sigma_apply(betaB.pow(w % m), g);
          img.push_back(AlgElem<FqElem>::from_ext(B, k, 0) * z[w / m]);
        }
        // bijectivity
        std::vector<std::vector<FqElem>> M(n, std::vector<FqElem>(n, FqElem::zero(spec)));
        for (int w = 0; w < n; ++w) {
          auto c = alg_coords(img[w]);
          for (int k = 0; k < n; ++k) M[k][w] = c[k];
        }
        if (!fq_matrix_nonsingular(std::move(M), spec)) continue;
        // multiplicativity on the full basis table
        for (int w = 0; w < n && ok; ++w)
          for (int u = 0; u < n && ok; ++u) {
            auto lhs = wit.apply(A, B, basisA[w] * basisA[u]);
            if (!alg_eq(lhs, img[w] * img[u])) ok = false;
          }
        if (ok) return wit;
      }
    }

    int i = 0;
    while (i < n && ++code[i] == all.size()) code[i++] = 0;
    if (i == n) break;
  }
  return std::nullopt;
}

ClassReport brute_classes(int64_t p, int n, int m) {
  auto base = fq_make(p, n);
  auto E = finite_ext(base, m);
  ClassReport rep;
  for (auto& x : all_ext_elements(E))
    if (!x.in_base()) rep.elements.push_back(x);

  std::vector<int> brute_reps, crit_reps;  // indices into rep.elements
  for (size_t i = 0; i < rep.elements.size(); ++i) {
    const auto& a = rep.elements[i];
    auto Aa = alg_make(E, 1, a);

    int cls = -1;
    for (size_t r = 0; r < brute_reps.size(); ++r) {
      if (brute_isomorphic(Aa, alg_make(E, 1, rep.elements[brute_reps[r]]))) {
        cls = static_cast<int>(r);
        break;
      }
    }
    if (cls < 0) {
      cls = static_cast<int>(brute_reps.size());
      brute_reps.push_back(static_cast<int>(i));
    }
    rep.brute_class.push_back(cls);

    cls = -1;
    for (size_t r = 0; r < crit_reps.size(); ++r) {
      if (equivalent(E, a, rep.elements[crit_reps[r]])) {
        cls = static_cast<int>(r);
        break;
      }
    }
    if (cls < 0) {
      cls = static_cast<int>(crit_reps.size());
      crit_reps.push_back(static_cast<int>(i));
    }
    rep.criterion_class.push_back(cls);
  }
  rep.class_count = static_cast<int>(brute_reps.size());
  rep.agreement = rep.brute_class == rep.criterion_class;
  return rep;
}

TheoremReport verify_theorem(const std::string& name, int64_t p, int n, int m) {
  TheoremReport rep;
  rep.theorem = name;
  rep.params = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
  auto base = fq_make(p, n);
  auto E = finite_ext(base, m);
  std::vector<ExtElem<FqElem>> proper;
  for (auto& x : all_ext_elements(E))
    if (!x.in_base()) proper.push_back(x);

  auto record = [&](bool good, const std::string& what) {
    ++rep.checked;
    if (good)
      ++rep.passed;
    else
      rep.counterexamples.push_back(what);
  };

  if (name == "sigma_distinct") {
    if (m < 3) fail(Err::UnsupportedCase, "distinct generators require m >= 3");
    std::vector<int> gens;
    for (int j = 1; j < m; ++j) {
      int g = m, x = j;
      while (x) {
        int t = g % x;
        g = x;
        x = t;
      }
      if (g == 1) gens.push_back(j);
    }
    for (size_t j1 = 0; j1 < gens.size(); ++j1)
      for (size_t j2 = j1 + 1; j2 < gens.size(); ++j2)
        for (const auto& a1 : proper)
          for (const auto& a2 : proper) {
            auto w = brute_isomorphic(alg_make(E, gens[j1], a1), alg_make(E, gens[j2], a2));
            record(!w, "generators " + std::to_string(gens[j1]) + "," + std::to_string(gens[j2]) +
                           " with a1=" + a1.str() + " a2=" + a2.str());
          }
  } else if (name == "classify_iso") {
    auto cr = brute_classes(p, n, m);
    for (size_t i = 0; i < cr.elements.size(); ++i)
      record(cr.brute_class[i] == cr.criterion_class[i],
             "partition mismatch at a=" + cr.elements[i].str());
  } else if (name == "steele") {
    for (auto& a : all_ext_elements(E)) {
      if (a.is_zero() || subfield_degree(a) != m) continue;
      record(brute_is_division(alg_make(E, 1, a)),
             "a=" + a.str() + " generates K but the algebra splits");
    }
  } else if (name == "nuclei") {
    for (const auto& a : proper) {
      auto A = alg_make(E, 1, a);
      bool good = nucleus(A, NucleusKind::Left).size() == static_cast<size_t>(m) &&
                  nucleus(A, NucleusKind::Middle).size() == static_cast<size_t>(m) &&
                  nucleus(A, NucleusKind::Right).size() == static_cast<size_t>(m) &&
                  nucleus(A, NucleusKind::Center).size() == 1;
      record(good, "nucleus dimensions off at a=" + a.str());
    }
  } else if (name == "petit_division") {
    if (!is_prime_int(m)) fail(Err::UnsupportedCase, "prime-degree check needs m prime");
    for (const auto& a : proper)
      record(brute_is_division(alg_make(E, 1, a)), "proper a=" + a.str() + " gives zero divisors");
  } else {
    fail(Err::UnknownTheorem, "no verifier named '" + name + "'");
  }
  return rep;
}

}  // namespace naca
