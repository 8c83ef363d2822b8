#pragma once

// Isomorphism testing and canonical forms for nonassociative cyclic algebras.
//
// Two structure constants a, b in K\F give isomorphic algebras (same K, same
// generator) exactly when a / sigma^i(b) lies in F^x and is a norm of K/F for
// some i; distinct extensions, and distinct generator powers for m >= 3,
// never give isomorphic algebras. Canonicalization picks a unique
// representative of each class, with deterministic tie-breaking by the
// canonical total order on base-field elements.

#include <optional>
#include <string>
#include <vector>

#include "naca/nacalg.hpp"

namespace naca {

// Set of indices of nonzero K-coefficients of a (never {0} for proper a);
// an isomorphism invariant for Kummer extensions.
struct PartitionIndex {
  std::vector<int> indices;

  friend bool operator==(const PartitionIndex& x, const PartitionIndex& y) {
    return x.indices == y.indices;
  }
};

template <class B>
struct CanonicalParam {
  ExtPtr<B> ext;
  int generator_power = 1;
  ExtElem<B> a;
  std::string case_tag;
  int precision_used = 0;
};

// Enumeration window for the infinite local families: valuations of the free
// scalar parameter range over [vmin, vmax] and its unit part runs over
// single-digit representatives (digit precision `digits`).
struct Window {
  int vmin = 0;
  int vmax = 0;
  int digits = 1;
};

template <class B>
PartitionIndex partition_index(const ExtElem<B>& a) {
  if (a.in_base()) fail(Err::NotProper, "partition index requires a outside the base field");
  PartitionIndex idx;
  for (int i = 0; i < a.ext()->m; ++i)
    if (!FieldOps<B>::is_zero(a.coeff(i))) idx.indices.push_back(i);
  return idx;
}

// a ~ b: some i with a / sigma^i(b) in F^x and a norm of K/F.
template <class B>
bool equivalent(const ExtPtr<B>& E, const ExtElem<B>& a, const ExtElem<B>& b) {
  if (a.in_base() || b.in_base())
    fail(Err::NotProper, "equivalence is defined for structure constants outside F");
  if (E->kind == ExtKind::Kummer && !(partition_index(a) == partition_index(b)))
    return false;  // cross-partition pairs are never equivalent
  for (int i = 0; i < E->m; ++i) {
    ExtElem<B> q = a / sigma_apply(b, i);
    if (!q.in_base()) continue;
    if (is_norm(E, q.coeff(0))) return true;
  }
  return false;
}

// Full isomorphism test: extensions must coincide (as subfields of a fixed
// closure), generator powers must match when m >= 3, then the ~ criterion.
template <class B>
bool isomorphic(const AlgPtr<B>& A1, const AlgPtr<B>& A2) {
  if (!A1->proper || !A2->proper)
    fail(Err::NotProper, "isomorphism classification covers proper algebras");
  if (!ext_same_field(A1->ext, A2->ext)) return false;
  if (A1->ext->m >= 3 && A1->j != A2->j) return false;
  // re-express a2 on A1's extension; requires the same presentation (modulus)
  for (int i = 0; i <= A1->ext->m; ++i)
    if (!FieldOps<B>::eq(A1->ext->modulus[i], A2->ext->modulus[i]))
      fail(Err::UnsupportedCase,
           "the two algebras present the same field with different moduli");
  ExtElem<B> b(A1->ext, A2->a.coeffs());
  return equivalent(A1->ext, A1->a, b);
}

// ---- canonical forms over local fields ----

// Quadratic case, odd residual characteristic or Q_2. For a = b0 + b1*sqrt(c):
// pure a (b0 = 0) maps to r*sqrt(c) with r the least norm-class representative
// of b1, reduced further modulo -1 when -1 is not a norm; mixed a maps to
// r + s*sqrt(c) with b0 = r*n factored through the norm classes and s = b1/n
// reduced modulo {+-1}.
CanonicalParam<LocalElem> quaternion_canonical(const LocalExtPtr& E, const ExtElem<LocalElem>& a);

// Windowed enumeration of the pairwise non-isomorphic quadratic family.
std::vector<CanonicalParam<LocalElem>> quaternion_enumerate(const LocalExtPtr& E, const Window& w);

// Characteristic-2 Laurent quadratic (Artin-Schreier) case; gamma is a
// nontrivial norm-class representative, found by bounded search when omitted.
CanonicalParam<LocalElem> char2_canonical(const LocalExtPtr& E,
                                          std::optional<LocalElem> gamma,
                                          const ExtElem<LocalElem>& a);

// Odd prime degree with mu_m in F (Kummer extensions and the unramified
// extension realized as Kummer).
CanonicalParam<LocalElem> prime_canonical(const LocalExtPtr& E, const ExtElem<LocalElem>& a);
std::vector<CanonicalParam<LocalElem>> prime_enumerate(const LocalExtPtr& E, const Window& w);

// Degree-4 structure types over a local field of odd residual characteristic:
// each quartic extension type paired with both generator choices.
struct Degree4Type {
  std::string extension;     // canonical descriptor of K
  std::string intermediate;  // the quadratic subfield E
  std::string b_descriptor;  // the quaternion right-nucleus algebra over E
  int generator_power = 1;
  std::string label;
};
std::vector<Degree4Type> degree4_types(const LocalFieldSpecPtr& F);

}  // namespace naca
