#pragma once

// Independent brute-force verification over small finite bases: zero-divisor
// search (via right-multiplication operators, complementing the left-operator
// test used by the main decision procedure), exhaustive isomorphism search
// with explicit witnesses, and full class-partition computation cross-checked
// against the criterion-based classifier.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "naca/classify.hpp"
#include "naca/nacalg.hpp"

namespace naca {

// Resource guard: exhaustive operations refuse to run past this many algebra
// elements (q^{m^2}).
constexpr int64_t kOracleGuard = 1 << 20;

// True iff the algebra has no zero divisors: every nonzero element has a
// nonsingular right-multiplication operator over F.
bool brute_is_division(const AlgPtr<FqElem>& A);

// An isomorphism candidate: restriction to K is sigma^g, and the image of t.
// Any isomorphism restricts to an automorphism of K = Nuc_l and is determined
// by these two data.
struct IsoWitness {
  int galois_power = 0;
  AlgElem<FqElem> image_of_t;

  // The induced F-linear map, applied to an element of the source algebra.
  AlgElem<FqElem> apply(const AlgPtr<FqElem>& src, const AlgPtr<FqElem>& dst,
                        const AlgElem<FqElem>& x) const;
};

std::optional<IsoWitness> brute_isomorphic(const AlgPtr<FqElem>& A, const AlgPtr<FqElem>& B);

// Partition of the proper elements (K \ F) into isomorphism classes, computed
// twice: exhaustively and by the norm criterion. `agreement` reports whether
// the two partitions coincide.
struct ClassReport {
  std::vector<ExtElem<FqElem>> elements;       // the proper elements, canonical order
  std::vector<int> brute_class;                // class index per element (exhaustive)
  std::vector<int> criterion_class;            // class index per element (criterion)
  int class_count = 0;
  bool agreement = false;
};

ClassReport brute_classes(int64_t p, int n, int m);

// Batch verification of the structural facts the classifier relies on.
struct TheoremReport {
  std::string theorem;
  std::string params;
  int checked = 0;
  int passed = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return checked == passed; }
};

// names: sigma_distinct (distinct generator powers never isomorphic, m >= 3),
//        classify_iso  (brute/criterion partition agreement),
//        steele        (a outside every proper subfield => division),
//        nuclei        (proper algebras have nucleus dims (m, m, m) and center F),
//        petit_division(prime degree, a outside F => division).
TheoremReport verify_theorem(const std::string& name, int64_t p, int n, int m);

}  // namespace naca
