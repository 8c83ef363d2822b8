#pragma once

// The nonassociative cyclic algebra A = (K/F, sigma^j, a) = sum_s K t^s,
// realized as the quotient of the twisted polynomial ring K[t; sigma^j] by
// the left ideal generated by t^m - a:
//   (k t^s)(k' t^s') = k sigma^{js}(k') t^{s+s'}             if s+s' < m,
//   (k t^s)(k' t^s') = k sigma^{js}(k') sigma^{jr}(a) t^r    if r = s+s'-m >= 0,
// since t^{m+r} = t^r(t^m - a) + sigma^{jr}(a) t^r. With this orientation the
// left and middle nuclei equal K and the right nucleus is the eigenspace of
// t^m - a (all of K when m is prime). Multiplication, associators,
// nuclei/center as kernel computations over F, and division-algebra decisions.

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "naca/extension.hpp"
#include "naca/linalg.hpp"

namespace naca {

template <class B>
struct CyclicAlgebra {
  ExtPtr<B> ext;
  int j = 1;        // the chosen generator is sigma^j, gcd(j, m) = 1
  ExtElem<B> a;
  bool proper = false;  // a lies outside F
  std::string name;
};

template <class B>
using AlgPtr = std::shared_ptr<const CyclicAlgebra<B>>;

template <class B>
AlgPtr<B> alg_make(const ExtPtr<B>& ext, int j, const ExtElem<B>& a) {
  if (a.ext() != ext) fail(Err::SpecMismatch, "structure constant from a different extension");
  if (a.is_zero()) fail(Err::ZeroInput, "structure constant a must be nonzero");
  int m = ext->m;
  int g = m, x = ((j % m) + m) % m;
  while (x) {
    int t = g % x;
    g = x;
    x = t;
  }
  if (g != 1) fail(Err::DegreeMismatch, "generator power must be coprime to the degree");
  auto alg = std::make_shared<CyclicAlgebra<B>>();
  alg->ext = ext;
  alg->j = ((j % m) + m) % m;
  alg->a = a;
  alg->proper = !a.in_base();
  alg->name = "(" + ext->name + ", sigma^" + std::to_string(alg->j) + ", " + a.str() + ")";
  return alg;
}

template <class B>
class AlgElem {
 public:
  AlgElem() = default;
  AlgElem(AlgPtr<B> alg, std::vector<ExtElem<B>> coeffs)
      : alg_(std::move(alg)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != alg_->ext->m)
      fail(Err::DegreeMismatch, "element needs exactly m K-coefficients");
  }

  static AlgElem zero(const AlgPtr<B>& alg) {
    return AlgElem(alg, std::vector<ExtElem<B>>(alg->ext->m, ExtElem<B>::zero(alg->ext)));
  }
  static AlgElem one(const AlgPtr<B>& alg) {
    auto z = zero(alg);
    z.c_[0] = ExtElem<B>::one(alg->ext);
    return z;
  }
  // k * t^s
  static AlgElem from_ext(const AlgPtr<B>& alg, const ExtElem<B>& k, int s = 0) {
    auto z = zero(alg);
    z.c_.at(s) = k;
    return z;
  }
  static AlgElem t(const AlgPtr<B>& alg) { return from_ext(alg, ExtElem<B>::one(alg->ext), 1); }

  const AlgPtr<B>& alg() const { return alg_; }
  const std::vector<ExtElem<B>>& coeffs() const { return c_; }
  const ExtElem<B>& coeff(int s) const { return c_.at(s); }

  bool is_zero() const {
    for (const auto& k : c_)
      if (!k.is_zero()) return false;
    return true;
  }

  friend AlgElem operator+(const AlgElem& x, const AlgElem& y) {
    check(x, y);
    std::vector<ExtElem<B>> c;
    for (size_t s = 0; s < x.c_.size(); ++s) c.push_back(x.c_[s] + y.c_[s]);
    return AlgElem(x.alg_, std::move(c));
  }
  friend AlgElem operator-(const AlgElem& x, const AlgElem& y) {
    check(x, y);
    std::vector<ExtElem<B>> c;
    for (size_t s = 0; s < x.c_.size(); ++s) c.push_back(x.c_[s] - y.c_[s]);
    return AlgElem(x.alg_, std::move(c));
  }
  AlgElem operator-() const {
    std::vector<ExtElem<B>> c;
    for (const auto& k : c_) c.push_back(-k);
    return AlgElem(alg_, std::move(c));
  }
  friend AlgElem operator*(const AlgElem& x, const AlgElem& y) {
    check(x, y);
    int m = x.alg_->ext->m;
    auto z = zero(x.alg_);
    for (int s = 0; s < m; ++s) {
      if (x.c_[s].is_zero()) continue;
      for (int s2 = 0; s2 < m; ++s2) {
        if (y.c_[s2].is_zero()) continue;
        ExtElem<B> w = x.c_[s] * sigma_apply(y.c_[s2], x.alg_->j * s);
        if (s + s2 < m) {
          z.c_[s + s2] = z.c_[s + s2] + w;
        } else {
          int r = s + s2 - m;
          z.c_[r] = z.c_[r] + w * sigma_apply(x.alg_->a, x.alg_->j * r);
        }
      }
    }
    return z;
  }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) s += "; ";
      s += c_[i].str();
    }
    return s + "]";
  }

 private:
  AlgPtr<B> alg_;
  std::vector<ExtElem<B>> c_;

  static void check(const AlgElem& x, const AlgElem& y) {
    if (x.alg_ != y.alg_) fail(Err::AlgebraMismatch, "elements of different algebras");
  }
};

template <class B>
AlgElem<B> associator(const AlgElem<B>& x, const AlgElem<B>& y, const AlgElem<B>& z) {
  return (x * y) * z - x * (y * z);
}

template <class B>
bool alg_eq(const AlgElem<B>& x, const AlgElem<B>& y) {
  return (x - y).is_zero();
}

// ---- coordinates over F ----

// Flattened index: w = s*m + i for beta^i t^s.
template <class B>
std::vector<B> alg_coords(const AlgElem<B>& x) {
  int m = x.alg()->ext->m;
  std::vector<B> v;
  v.reserve(m * m);
  for (int s = 0; s < m; ++s)
    for (int i = 0; i < m; ++i) v.push_back(x.coeff(s).coeff(i));
  return v;
}

template <class B>
AlgElem<B> alg_from_coords(const AlgPtr<B>& alg, const std::vector<B>& v) {
  int m = alg->ext->m;
  std::vector<ExtElem<B>> c;
  for (int s = 0; s < m; ++s) {
    std::vector<B> k(v.begin() + s * m, v.begin() + (s + 1) * m);
    c.emplace_back(alg->ext, std::move(k));
  }
  return AlgElem<B>(alg, std::move(c));
}

template <class B>
AlgElem<B> alg_basis_elem(const AlgPtr<B>& alg, int w) {
  int m = alg->ext->m;
  std::vector<B> v(m * m, FieldOps<B>::zero(alg->ext->base));
  v[w] = FieldOps<B>::one(alg->ext->base);
  return alg_from_coords(alg, v);
}

// ---- nuclei and center ----

enum class NucleusKind { Left, Middle, Right, Nucleus, Center };

const char* nucleus_kind_name(NucleusKind k);

// F-basis of the requested nucleus (or the center), via the kernel of the
// associator constraints on the m^2-dimensional structure basis.
template <class B>
std::vector<AlgElem<B>> nucleus(const AlgPtr<B>& alg, NucleusKind kind) {
  int m = alg->ext->m;
  int n = m * m;
  std::vector<AlgElem<B>> basis;
  basis.reserve(n);
  for (int w = 0; w < n; ++w) basis.push_back(alg_basis_elem(alg, w));

  std::vector<std::vector<B>> rows;
  auto add_constraint = [&](auto&& map) {
    // map : w -> AlgElem; contributes n scalar equations per (u, v)
    std::vector<std::vector<B>> block(n, std::vector<B>(n, FieldOps<B>::zero(alg->ext->base)));
    for (int w = 0; w < n; ++w) {
      auto coords = alg_coords(map(w));
      for (int k = 0; k < n; ++k) block[k][w] = coords[k];
    }
    for (auto& r : block) rows.push_back(std::move(r));
  };

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (kind == NucleusKind::Left || kind == NucleusKind::Nucleus || kind == NucleusKind::Center)
        add_constraint([&](int w) { return associator(basis[w], basis[u], basis[v]); });
      if (kind == NucleusKind::Middle || kind == NucleusKind::Nucleus || kind == NucleusKind::Center)
        add_constraint([&](int w) { return associator(basis[u], basis[w], basis[v]); });
      if (kind == NucleusKind::Right || kind == NucleusKind::Nucleus || kind == NucleusKind::Center)
        add_constraint([&](int w) { return associator(basis[u], basis[v], basis[w]); });
    }
    if (kind == NucleusKind::Center)
      add_constraint([&](int w) { return basis[w] * basis[u] - basis[u] * basis[w]; });
  }

  auto kern = kernel_basis(std::move(rows), alg->ext->base, n);
  std::vector<AlgElem<B>> out;
  for (auto& v : kern) out.push_back(alg_from_coords(alg, v));
  return out;
}

// ---- right nucleus structure (composite degrees) ----

struct RightNucleusInfo {
  int subfield_deg = 0;   // d = [F(a):F]; the stabilizer of a is <sigma^d>
  int s = 0;              // the right nucleus is the cyclic algebra (K/E, sigma^s, a), E = Fix(sigma^d)
  int dim_over_F = 0;     // = m^2 / d
  std::string description;
};

template <class B>
RightNucleusInfo right_nucleus_structure(const AlgPtr<B>& alg) {
  int m = alg->ext->m;
  RightNucleusInfo info;
  info.subfield_deg = subfield_degree(alg->a);
  info.s = info.subfield_deg;
  info.dim_over_F = m * m / info.subfield_deg;
  if (info.subfield_deg == m)
    info.description = "a lies in no proper subfield: the right nucleus is K itself";
  else if (info.subfield_deg == 1)
    info.description = "a in F: the algebra is associative and equals its right nucleus";
  else
    info.description = "right nucleus = (K/E, sigma^" + std::to_string(info.s) +
                       ", a) over E = Fix(sigma^" + std::to_string(info.subfield_deg) +
                       "), an associative cyclic algebra of degree " +
                       std::to_string(m / info.subfield_deg);
  return info;
}

// ---- division-algebra decision ----

struct DivisionReport {
  Tri result = Tri::Unknown;
  std::string method;
};

namespace detail {

// Exhaustive test over a finite base: every nonzero left-multiplication
// operator must be nonsingular over F. Uses integer rows modulo p for prime
// bases (with a bitset path for p = 2) and generic elimination otherwise.
DivisionReport exhaustive_division_fq(const AlgPtr<FqElem>& alg);

}  // namespace detail

template <class B>
DivisionReport is_division(const AlgPtr<B>& alg) {
  int m = alg->ext->m;
  if constexpr (std::is_same_v<B, FqElem>) {
    double sz = 1;
    for (int i = 0; i < m * m; ++i) sz *= static_cast<double>(alg->ext->base->q);
    if (sz <= (1 << 20)) return detail::exhaustive_division_fq(alg);
  }
  if (alg->proper) {
    if (is_prime_int(m)) {
      bool roots_ok = m <= 3;
      if (!roots_ok) {
        // mu_m in F: over local bases this is m | q-1 (tame); finite bases
        // were already handled exhaustively above
        if constexpr (std::is_same_v<B, LocalElem>)
          roots_ok = (alg->ext->base->q() - 1) % m == 0 && m != alg->ext->base->p;
        else
          roots_ok = (alg->ext->base->q - 1) % m == 0;
      }
      if (roots_ok) return {Tri::True, "prime-degree criterion (a outside F)"};
    }
    if (subfield_degree(alg->a) == m)
      return {Tri::True, "structure constant lies in no proper subfield"};
    if (m == 4 && subfield_degree(alg->a) == 2)
      return {Tri::Unknown,
              "reduces to a quaternion norm condition over the intermediate field (not decided here)"};
    return {Tri::Unknown, "no applicable criterion"};
  }
  // associative case: a in F
  if constexpr (std::is_same_v<B, LocalElem>) {
    if (is_prime_int(m) && alg->ext->kind != ExtKind::ArtinSchreier &&
        alg->ext->arithmetic_ok) {
      bool n = is_norm(alg->ext, alg->a.coeff(0));
      return {n ? Tri::False : Tri::True, "associative prime-degree norm criterion"};
    }
  }
  return {Tri::Unknown, "associative case without a decision procedure here"};
}

}  // namespace naca
