#include "naca/nacalg.hpp"

#include <cstdint>

namespace naca {

const char* nucleus_kind_name(NucleusKind k) {
  switch (k) {
    case NucleusKind::Left: return "left";
    case NucleusKind::Middle: return "middle";
    case NucleusKind::Right: return "right";
    case NucleusKind::Nucleus: return "nucleus";
    case NucleusKind::Center: return "center";
  }
  return "?";
}

namespace detail {

namespace {

// Rank test on up-to-32-column bit rows (GF(2)).
bool bits_nonsingular(std::vector<uint32_t> rows) {
  int n = static_cast<int>(rows.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (rows[r] & (1u << col)) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(rows[col], rows[piv]);
    for (int r = 0; r < n; ++r)
      if (r != col && (rows[r] & (1u << col))) rows[r] ^= rows[col];
  }
  return true;
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

}  // namespace

DivisionReport exhaustive_division_fq(const AlgPtr<FqElem>& alg) {
  const int m = alg->ext->m;
  const int n = m * m;
  const auto& spec = alg->ext->base;

  // Structure tensor: T[w][u] = coordinates of e_w * e_u.
  std::vector<AlgElem<FqElem>> basis;
  for (int w = 0; w < n; ++w) basis.push_back(alg_basis_elem(alg, w));
  std::vector<std::vector<std::vector<FqElem>>> T(n);
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u) T[w].push_back(alg_coords(basis[w] * basis[u]));

  const char* method = "exhaustive nonsingularity of every nonzero left multiplication";

  if (spec->p == 2 && spec->n == 1 && n <= 32) {
    // Bit-packed path: mask[w][u] = coordinates of e_w * e_u as a bit row.
    std::vector<std::vector<uint32_t>> mask(n, std::vector<uint32_t>(n, 0));
    for (int w = 0; w < n; ++w)
      for (int u = 0; u < n; ++u)
        for (int k = 0; k < n; ++k)
          if (!T[w][u][k].is_zero()) mask[w][u] |= 1u << k;
    for (uint32_t x = 1; x < (1u << n); ++x) {
      // Columns of L_x, laid out as rows (the rank is unchanged by transpose).
      std::vector<uint32_t> cols(n, 0);
      for (int w = 0; w < n; ++w)
        if (x & (1u << w))
          for (int u = 0; u < n; ++u) cols[u] ^= mask[w][u];
      if (!bits_nonsingular(std::move(cols)))
        return {Tri::False, method};
    }
    return {Tri::True, method};
  }

  if (spec->n == 1) {
    const int64_t p = spec->p;
    std::vector<int64_t> x(n, 0);
    x[0] = 1;  // start from the first nonzero vector in base-p counting order
    while (true) {
      std::vector<std::vector<int64_t>> L(n, std::vector<int64_t>(n, 0));
      for (int w = 0; w < n; ++w) {
        if (x[w] == 0) continue;
        for (int u = 0; u < n; ++u)
          for (int k = 0; k < n; ++k)
            L[k][u] = (L[k][u] + x[w] * T[w][u][k].prime_value()) % p;
      }
      if (!modp_nonsingular(L, p)) return {Tri::False, method};
      int i = 0;
      while (i < n && ++x[i] == p) x[i++] = 0;
      if (i == n) break;
    }
    return {Tri::True, method};
  }

  // Generic path over a non-prime base field.
  auto all = fq_all_elements(spec);
  std::vector<size_t> code(n, 0);
  code[0] = 1;
  while (true) {
    std::vector<std::vector<FqElem>> L(n, std::vector<FqElem>(n, FqElem::zero(spec)));
    for (int w = 0; w < n; ++w) {
      if (code[w] == 0) continue;
      const FqElem& xw = all[code[w]];
      for (int u = 0; u < n; ++u)
        for (int k = 0; k < n; ++k) {
          if (T[w][u][k].is_zero()) continue;
          L[k][u] = L[k][u] + xw * T[w][u][k];
        }
    }
    if (!fq_matrix_nonsingular(std::move(L), spec)) return {Tri::False, method};
    int i = 0;
    while (i < n && ++code[i] == all.size()) code[i++] = 0;
    if (i == n) break;
  }
  return {Tri::True, method};
}

}  // namespace detail

}  // namespace naca
