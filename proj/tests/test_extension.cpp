#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naca/extension.hpp"

using namespace naca;

TEST_CASE("finite extension F_9/F_3: Galois action and norm") {
  auto f3 = fq_make(3, 1);
  auto ext = finite_ext(f3, 2);
  CHECK(ext->modulus.size() == 3);
  auto beta = ExtElem<FqElem>::beta(ext);
  // sigma = cube map; sigma^2 = identity
  auto sb = sigma_apply(beta, 1);
  CHECK(ext_eq(sb, beta.pow(3)));
  CHECK(ext_eq(sigma_apply(sb, 1), beta));
  CHECK_FALSE(ext_eq(sb, beta));
  // norm of beta = beta^(1+3) = beta^4
  auto n = ext_norm(beta);
  CHECK(ext_eq(ExtElem<FqElem>::from_base(ext, n), beta.pow(4)));
  CHECK_FALSE(n.is_zero());
  // norm is multiplicative and surjective onto F_3^x here
  auto one = ExtElem<FqElem>::one(ext);
  CHECK(ext_norm(one) == FqElem::one(f3));
  // every nonzero element inverts: x * x^{-1} = 1
  auto x = beta + one;
  CHECK(ext_eq(x * x.inv(), one));
  CHECK(subfield_degree(beta) == 2);
  CHECK(subfield_degree(one) == 1);
}

TEST_CASE("finite norm surjectivity for q <= 9, m <= 4 in scope") {
  for (auto [p, n, m] : {std::tuple{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {3, 2, 2}, {2, 1, 4}}) {
    auto base = fq_make(p, n);
    auto ext = finite_ext(base, m);
    // enumerate all nonzero elements by coefficient vectors
    auto elems = fq_all_elements(base);
    int64_t qm = 1;
    for (int i = 0; i < m; ++i) qm *= base->q;
    std::vector<bool> hit(static_cast<size_t>(base->q), false);
    for (int64_t code = 1; code < qm; ++code) {
      int64_t c = code;
      std::vector<FqElem> coeffs;
      for (int i = 0; i < m; ++i) {
        coeffs.push_back(elems[c % base->q]);
        c /= base->q;
      }
      ExtElem<FqElem> x(ext, std::move(coeffs));
      auto v = ext_norm(x);
      if (!v.is_zero()) hit[static_cast<size_t>(fq_dlog(v))] = true;
    }
    int count = 0;
    for (int64_t i = 0; i < base->q - 1; ++i) count += hit[i];
    CHECK(count == base->q - 1);
  }
}

TEST_CASE("quadratic extension of Q_5 by sqrt(2) is unramified") {
  auto q5 = padic_field(5);
  auto two = LocalElem::from_int(q5, 2, 12);
  auto ext = quadratic_ext(q5, two);
  CHECK_FALSE(ext->ramified);
  auto beta = ExtElem<LocalElem>::beta(ext);
  CHECK(ext_eq(sigma_apply(beta, 1), -beta));
  // N(s*sqrt(c)) = -c s^2
  auto five = LocalElem::from_int(q5, 5, 12);
  auto x = beta.scaled(five);
  CHECK(lf_eq(ext_norm(x), -(two * five * five)));
  // norm membership: unramified <=> even valuation
  CHECK(is_norm(ext, LocalElem::from_int(q5, 3, 12)));
  CHECK_FALSE(is_norm(ext, five));
  CHECK(is_norm(ext, five * five));
  auto reps = norm_class_reps(ext);
  REQUIRE(reps.size() == 2);
  CHECK(lf_eq(reps[0], LocalElem::one(q5, 12)));
  CHECK(reps[1].valuation() == 1);
  CHECK(minus_one_is_norm(ext));
  // squares are rejected
  CHECK_THROWS_AS(quadratic_ext(q5, LocalElem::from_int(q5, 4, 12)), Error);
}

TEST_CASE("ramified quadratic extensions of Q_3") {
  auto q3 = padic_field(3);
  auto pi = LocalElem::uniformizer(q3, 12);
  auto ext = quadratic_ext(q3, pi);
  CHECK(ext->ramified);
  // N(beta) = -pi; is_norm(-3) should hold, is_norm(3) should not (q = 3 = 3 mod 4)
  CHECK(is_norm(ext, -pi));
  CHECK_FALSE(is_norm(ext, pi));
  CHECK_FALSE(minus_one_is_norm(ext));
  auto reps = norm_class_reps(ext);
  REQUIRE(reps.size() == 2);
  CHECK(square_class(reps[1]) == SquareClass::Eps);
  // inverse in the extension
  auto beta = ExtElem<LocalElem>::beta(ext);
  auto one = ExtElem<LocalElem>::one(ext);
  auto x = one + beta;
  CHECK(ext_eq(x * x.inv(), one));
}

TEST_CASE("Kummer cubic extensions of Q_7") {
  auto q7 = padic_field(7);
  auto exts = enumerate_extensions(q7, 3);
  REQUIRE(exts.size() == 4);
  CHECK_FALSE(exts[0]->ramified);
  for (int i = 1; i < 4; ++i) CHECK(exts[i]->ramified);
  // pairwise distinct fields
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(ext_same_field(exts[i], exts[j]) == (i == j));

  // zeta is a primitive cube root: teich(2) or teich(4) over Q_7
  auto ram = exts[1];  // beta^3 = pi
  CHECK(ram->zeta.leading_digit().prime_value() == 2);
  auto beta = ExtElem<LocalElem>::beta(ram);
  CHECK(ext_eq(sigma_apply(beta, 1), beta.scaled(ram->zeta)));
  // N(beta) = b for odd degree
  CHECK(lf_eq(ext_norm(beta), ram->param));
  CHECK(is_norm(ram, ram->param));

  // unramified: m | v(x)
  auto seven = LocalElem::from_int(q7, 7, 12);
  CHECK_FALSE(is_norm(exts[0], seven));
  CHECK(is_norm(exts[0], seven.pow(3)));
  auto ureps = norm_class_reps(exts[0]);
  REQUIRE(ureps.size() == 3);
  CHECK(ureps[1].valuation() == 1);
  CHECK(ureps[2].valuation() == 2);

  // ramified, 9 does not divide 6: C_K = mu_3
  auto rreps = norm_class_reps(ram);
  REQUIRE(rreps.size() == 3);
  CHECK(lf_eq(rreps[1], ram->zeta));
  CHECK(lf_eq(rreps[2], ram->zeta * ram->zeta));
  // reps pairwise non-equivalent mod norms
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK_FALSE(is_norm(ram, rreps[i] / rreps[j]));
}

TEST_CASE("norm membership consistency: is_norm(N(x)) for random-ish elements") {
  auto q5 = padic_field(5);
  for (auto& ext : enumerate_extensions(q5, 2)) {
    auto beta = ExtElem<LocalElem>::beta(ext);
    auto one = ExtElem<LocalElem>::one(ext);
    for (int k : {2, 3, 7, 9}) {
      auto x = one.scaled(LocalElem::from_int(q5, k, 12)) + beta;
      CHECK(is_norm(ext, ext_norm(x)));
    }
  }
  auto q7 = padic_field(7);
  for (auto& ext : enumerate_extensions(q7, 3)) {
    auto beta = ExtElem<LocalElem>::beta(ext);
    auto one = ExtElem<LocalElem>::one(ext);
    auto x = one.scaled(LocalElem::from_int(q7, 3, 12)) + beta;
    CHECK(is_norm(ext, ext_norm(x)));
    CHECK(subfield_degree(beta) == 3);
  }
}

TEST_CASE("the seven quadratic extensions of Q_2 and their norm groups") {
  auto q2 = padic_field(2);
  auto exts = enumerate_extensions(q2, 2);
  REQUIRE(exts.size() == 7);
  CHECK_FALSE(exts[0]->ramified);  // sqrt(-3) unramified
  for (int i = 1; i < 7; ++i) CHECK(exts[i]->ramified);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(ext_same_field(exts[i], exts[j]) == (i == j));

  // spot checks from the norm-group table
  auto m3 = exts[0];  // sqrt(-3)
  CHECK(is_norm(m3, LocalElem::from_int(q2, -3, 12)));
  CHECK_FALSE(is_norm(m3, LocalElem::from_int(q2, 2, 12)));
  CHECK(minus_one_is_norm(m3));
  auto s6 = exts[6];  // sqrt(6)
  CHECK(is_norm(s6, LocalElem::from_int(q2, -2, 12)));
  CHECK(is_norm(s6, LocalElem::from_int(q2, 3, 12)));
  CHECK_FALSE(minus_one_is_norm(s6));
  auto reps = norm_class_reps(m3);
  REQUIRE(reps.size() == 2);
  CHECK(q2_square_class(reps[1]) == 2);
}

TEST_CASE("unramified quartic over Q_3 via lifted Frobenius") {
  auto q3 = padic_field(3);
  auto ext = unramified_ext(q3, 4);
  CHECK(ext->kind == ExtKind::UnramifiedLift);
  auto beta = ExtElem<LocalElem>::beta(ext);
  auto sb = sigma_apply(beta, 1);
  // sigma(beta) is a root of the modulus and reduces to beta^3
  auto f_at = ext_eval(ext, ext->modulus, sb);
  for (const auto& c : f_at.coeffs()) CHECK(c.is_zero());
  CHECK_FALSE(ext_eq(sb, beta));
  // sigma has order exactly 4
  CHECK(ext_eq(sigma_apply(beta, 4), beta));
  CHECK_FALSE(ext_eq(sigma_apply(beta, 2), beta));
  CHECK(subfield_degree(beta) == 4);
  // norm lands in the base and respects membership rule m | v
  auto x = beta + ExtElem<LocalElem>::one(ext);
  auto n = ext_norm(x);
  CHECK(is_norm(ext, n));
  CHECK_FALSE(is_norm(ext, LocalElem::from_int(q3, 3, 12)));
}

TEST_CASE("degree-4 extension lists") {
  auto q5 = padic_field(5);
  auto l5 = enumerate_extensions(q5, 4);
  REQUIRE(l5.size() == 6);
  for (size_t i = 0; i < l5.size(); ++i)
    for (size_t j = 0; j < l5.size(); ++j) CHECK(ext_same_field(l5[i], l5[j]) == (i == j));
  CHECK_FALSE(l5[0]->ramified);

  auto q3 = padic_field(3);
  auto l3 = enumerate_extensions(q3, 4);
  REQUIRE(l3.size() == 2);
  CHECK(l3[0]->kind == ExtKind::UnramifiedLift);
  CHECK(l3[1]->kind == ExtKind::QuarticTower);
  CHECK_FALSE(ext_same_field(l3[0], l3[1]));
}

TEST_CASE("Artin-Schreier extensions of F_2((t))") {
  auto f2 = fq_make(2, 1);
  auto k = laurent_field(f2);
  // c = t^{-1} is not of the form z^2 + z
  auto c = LocalElem::one(k, 12).shifted(-1);
  auto ext = artin_schreier_ext(k, c);
  CHECK(ext->ramified);
  auto alpha = ExtElem<LocalElem>::beta(ext);
  auto one = ExtElem<LocalElem>::one(ext);
  CHECK(ext_eq(sigma_apply(alpha, 1), alpha + one));
  CHECK(ext_eq(sigma_apply(alpha + one, 1), alpha));
  // alpha^2 = alpha + c (char 2)
  auto sq = alpha * alpha;
  CHECK(lf_eq(sq.coeff(0), c));
  CHECK(lf_eq(sq.coeff(1), LocalElem::one(k, 12)));
  // norm form: N(x0 + x1 alpha) = x0^2 + x0 x1 + c x1^2
  auto x = one.scaled(LocalElem::one(k, 12).shifted(1)) + alpha;  // t + alpha
  auto t1 = LocalElem::one(k, 12).shifted(1);
  CHECK(lf_eq(ext_norm(x), t1 * t1 + t1 + c));

  // members of P2 are rejected
  auto z = LocalElem::one(k, 12).shifted(2);
  CHECK_THROWS_AS(artin_schreier_ext(k, z * z + z), Error);

  // sampling yields pairwise distinct fields
  auto sams = sample_artin_schreier(k, 3);
  REQUIRE(sams.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(ext_same_field(sams[i], sams[j]) == (i == j));
}

TEST_CASE("char-2 helper functions") {
  auto f2 = fq_make(2, 1);
  auto k = laurent_field(f2);
  auto t = LocalElem::uniformizer(k, 10);
  CHECK(char2_is_square(t * t));
  CHECK_FALSE(char2_is_square(t));
  CHECK(lf_eq(char2_sqrt(t * t), t.truncated(char2_sqrt(t * t).precision())));
  auto u = LocalElem::one(k, 10) + t * t;
  CHECK(char2_is_square(u));
  auto r = char2_sqrt(u);
  CHECK(lf_eq(r * r, u.truncated_abs((r * r).abs_precision())));
  // in P2: z^2 + z for z = t^{-1} + 1
  auto z = LocalElem::one(k, 10).shifted(-1) + LocalElem::one(k, 10);
  CHECK(char2_in_p2(z * z + z) == Tri::True);
  CHECK(char2_in_p2(LocalElem::one(k, 10).shifted(-1)) == Tri::False);
  // over F_2, trace of 1 is 1: constant 1 is not in P2
  CHECK(char2_in_p2(LocalElem::one(k, 10)) == Tri::False);
  // over F_4, the constant 1 has trace 1 + 1 = 0: in P2
  auto f4 = fq_make(2, 2);
  auto k4 = laurent_field(f4);
  CHECK(char2_in_p2(LocalElem::one(k4, 10)) == Tri::True);
}

TEST_CASE("validation errors") {
  auto q5 = padic_field(5);
  CHECK_THROWS_AS(kummer_ext(q5, 3, LocalElem::from_int(q5, 5, 12)), Error);  // 3 does not divide 4
  CHECK_THROWS_AS(kummer_ext(q5, 5, LocalElem::uniformizer(q5, 12)), Error);  // wild
  auto q7 = padic_field(7);
  CHECK_THROWS_AS(kummer_ext(q7, 3, LocalElem::from_int(q7, 8, 12)), Error);  // 8 = 2^3 is a cube
  auto k0 = quartic_tower_descriptor(q5);
  CHECK_THROWS_AS(ExtElem<LocalElem>::one(k0), Error);
  CHECK_THROWS_AS(is_norm(k0, LocalElem::one(q5, 12)), Error);
}
