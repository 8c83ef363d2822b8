#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naca/localfield.hpp"

using namespace naca;

TEST_CASE("p-adic integer embedding and rendering") {
  auto q3 = padic_field(3);
  auto x = LocalElem::from_int(q3, 13, 3);
  CHECK(x.valuation() == 0);
  REQUIRE(x.precision() == 3);
  CHECK(x.digit_at(0).prime_value() == 1);
  CHECK(x.digit_at(1).prime_value() == 1);
  CHECK(x.digit_at(2).prime_value() == 1);

  auto y = LocalElem::from_int(q3, 18, 4);  // 2 * 3^2
  CHECK(y.valuation() == 2);
  CHECK(y.leading_digit().prime_value() == 2);
  CHECK(y.str() == "3^2*(2 + O(3^4))");
}

TEST_CASE("addition tracks the coarsest precision") {
  auto q3 = padic_field(3);
  auto a = LocalElem::from_int(q3, 4, 5);   // known mod 3^5
  auto b = LocalElem::from_int(q3, 5, 2);   // known mod 3^2
  auto s = a + b;
  CHECK(s.abs_precision() == 2);  // min of the operands
  CHECK(s.is_zero());  // 9 is indistinguishable from 0 mod 3^2
  CHECK_FALSE(s.is_exact_zero());

  auto t = a - a;
  CHECK(t.is_zero());
  CHECK(t.abs_precision() == 5);
}

TEST_CASE("p-adic negation and subtraction carry correctly") {
  auto q5 = padic_field(5);
  auto one = LocalElem::one(q5, 4);
  auto m = -one;  // ...444 base 5
  CHECK(m.digit_at(0).prime_value() == 4);
  CHECK(m.digit_at(1).prime_value() == 4);
  CHECK(lf_eq(one + m, LocalElem::zero_to_precision(q5, 4)));
  auto seven = LocalElem::from_int(q5, 7, 4);
  auto three = LocalElem::from_int(q5, 3, 4);
  CHECK(lf_eq(seven - three, LocalElem::from_int(q5, 4, 4)));
  CHECK(lf_eq(three - seven, LocalElem::from_int(q5, -4, 4)));
}

TEST_CASE("multiplication and inversion") {
  auto q3 = padic_field(3);
  auto four = LocalElem::from_int(q3, 4, 4);
  auto inv4 = four.inv();
  CHECK(inv4.valuation() == 0);
  // 1/4 = 1 + 2*3 + 0*9 + 2*27 + ...
  CHECK(inv4.digit_at(0).prime_value() == 1);
  CHECK(inv4.digit_at(1).prime_value() == 2);
  CHECK(inv4.digit_at(2).prime_value() == 0);
  CHECK(inv4.digit_at(3).prime_value() == 2);
  CHECK(lf_eq(four * inv4, LocalElem::one(q3, 4)));

  auto x = LocalElem::from_int(q3, 45, 6);  // 3^2 * 5
  auto y = LocalElem::from_int(q3, 6, 6);   // 3 * 2
  auto z = x / y;
  CHECK(z.valuation() == 1);
  CHECK(lf_eq(z * y, x.truncated_abs(z.abs_precision() + 1)));

  CHECK_THROWS_AS(LocalElem::exact_zero(q3).inv(), Error);
  CHECK_THROWS_AS(LocalElem::zero_to_precision(q3, 5).inv(), Error);
}

TEST_CASE("powers and shifts") {
  auto q5 = padic_field(5);
  auto x = LocalElem::from_int(q5, 2, 6);
  CHECK(lf_eq(x.pow(10), LocalElem::from_int(q5, 1024, 6)));
  CHECK(lf_eq(x.pow(-2), LocalElem::from_int(q5, 4, 6).inv()));
  CHECK(x.shifted(3).valuation() == 3);
  CHECK(lf_eq(x.shifted(3), x * LocalElem::uniformizer(q5, 6).pow(3)));
}

TEST_CASE("Laurent series arithmetic") {
  auto f4 = fq_make(2, 2);
  auto k = laurent_field(f4);
  FqElem w(f4, {0, 1});
  auto a = LocalElem::from_digits(k, -1, {FqElem::one(f4), w});  // t^-1 + w
  auto b = LocalElem::from_digits(k, 0, {w, w});                 // w + w t
  auto s = a + b;
  CHECK(s.valuation() == -1);
  CHECK(s.digit_at(0) == FqElem::one(f4));
  CHECK(s.digit_at(1) == (w + w));  // cancels in characteristic 2
  auto p = a * b;
  CHECK(p.valuation() == -1);
  CHECK(p.leading_digit() == w);
  CHECK(lf_eq(p / a, b.truncated(p.precision())));
  CHECK(lf_eq(-a, a));  // characteristic 2
}

TEST_CASE("canonical order") {
  auto q5 = padic_field(5);
  auto a = LocalElem::from_int(q5, 5, 4);
  auto b = LocalElem::from_int(q5, 2, 4);
  auto c = LocalElem::from_int(q5, 7, 4);
  CHECK(lf_less(b, a));                                 // valuation first
  CHECK(lf_less(b, c));                                 // 2 < 2 + 1*5
  CHECK(lf_less(LocalElem::zero_to_precision(q5, 2), b));  // zeros first
  CHECK_FALSE(lf_less(b, b));
}

TEST_CASE("unit decomposition") {
  auto q5 = padic_field(5);
  auto x = LocalElem::from_int(q5, 50, 6);  // 2 * 5^2
  auto d = lf_decompose(x);
  CHECK(d.valuation == 2);
  CHECK(d.teich.leading_digit().prime_value() == 2);
  CHECK(lf_eq(d.teich.pow(4), LocalElem::one(q5, d.teich.precision())));
  CHECK(d.one_unit.leading_digit().prime_value() == 1);
  auto back = d.teich * d.one_unit;
  CHECK(lf_eq(back.shifted(2), x.truncated_abs(back.abs_precision() + 2)));
}

TEST_CASE("Teichmueller lift of 2 in Z_5 is 7 mod 25") {
  auto q5 = padic_field(5);
  auto w = teichmuller(q5, FqElem::from_int(q5->residue, 2), 6);
  CHECK(w.digit_at(0).prime_value() == 2);
  CHECK(w.digit_at(1).prime_value() == 1);  // 2 + 1*5 = 7
  CHECK(lf_eq(w.pow(4), LocalElem::one(q5, 6)));
}

TEST_CASE("Hensel lifting x^2 - 7 over Z_3") {
  auto q3 = padic_field(3);
  auto f = lf_poly_from_ints(q3, {-7, 0, 1}, 8);
  auto root = hensel_lift(f, LocalElem::from_int(q3, 1, 8), 3);
  // 13^2 = 169 = 7 + 6*27
  CHECK(root.digit_at(0).prime_value() == 1);
  CHECK(root.digit_at(1).prime_value() == 1);
  CHECK(root.digit_at(2).prime_value() == 1);
  CHECK(root.abs_precision() == 3);

  auto deep = hensel_lift(f, LocalElem::from_int(q3, 1, 10), 8);
  auto check = lf_poly_eval(f, deep);
  CHECK(check.is_zero());
  CHECK(check.abs_precision() >= 8);

  // x^2 - 5 has no root near 1 over Z_3 (5 is not a square mod 3... it is 2)
  auto g = lf_poly_from_ints(q3, {-5, 0, 1}, 8);
  CHECK_THROWS_AS(hensel_lift(g, LocalElem::from_int(q3, 1, 8), 4), Error);
  // double root: f'(a) = 0
  auto h = lf_poly_from_ints(q3, {0, 0, 1}, 8);
  CHECK_THROWS_AS(hensel_lift(h, LocalElem::exact_zero(q3), 4), Error);
}

TEST_CASE("square classes at odd residual characteristic") {
  auto q5 = padic_field(5);
  auto mk = [&](int64_t k) { return LocalElem::from_int(q5, k, 6); };
  CHECK(square_class(mk(4)) == SquareClass::One);
  CHECK(square_class(mk(-1)) == SquareClass::One);  // -1 = 4 is a square mod 5
  CHECK(square_class(mk(2)) == SquareClass::Eps);
  CHECK(square_class(mk(5)) == SquareClass::Pi);
  CHECK(square_class(mk(10)) == SquareClass::EpsPi);
  CHECK(square_class(mk(1).shifted(-2)) == SquareClass::One);
  auto eps = lf_epsilon(q5, 6);
  CHECK(eps.leading_digit().prime_value() == 2);
  CHECK(square_class(eps) == SquareClass::Eps);
  CHECK_THROWS_AS(square_class(LocalElem::from_int(padic_field(2), 3, 6)), Error);
}

TEST_CASE("square classes over Q_2") {
  auto q2 = padic_field(2);
  auto mk = [&](int64_t k) { return LocalElem::from_int(q2, k, 6); };
  CHECK(q2_square_class(mk(1)) == 1);
  CHECK(q2_square_class(mk(3)) == 3);
  CHECK(q2_square_class(mk(5)) == -3);
  CHECK(q2_square_class(mk(7)) == -1);
  CHECK(q2_square_class(mk(-1)) == -1);
  CHECK(q2_square_class(mk(2)) == 2);
  CHECK(q2_square_class(mk(6)) == 6);
  CHECK(q2_square_class(mk(10)) == -6);
  CHECK(q2_square_class(mk(14)) == -2);
  CHECK(q2_square_class(mk(9)) == 1);     // 9 = 1 mod 8
  CHECK(q2_square_class(mk(-8)) == -2);   // -8 = 2^3 * (-1)
  CHECK_THROWS_AS(q2_square_class(LocalElem::from_int(q2, 3, 2)), Error);
}

TEST_CASE("m-th power unit classes") {
  auto q7 = padic_field(7);
  auto mk = [&](int64_t k) { return LocalElem::from_int(q7, k, 6); };
  auto c1 = mth_unit_class(mk(6), 3);  // 6 = 3^3 mod 7 is a cube
  CHECK(c1.is_mth_power);
  CHECK(c1.class_index == 0);
  auto c2 = mth_unit_class(mk(2), 3);
  CHECK_FALSE(c2.is_mth_power);
  auto c3 = mth_unit_class(mk(7), 3);
  CHECK_FALSE(c3.is_mth_power);
  CHECK(c3.valuation_mod_m == 1);
  auto c4 = mth_unit_class(mk(1).shifted(3), 3);
  CHECK(c4.is_mth_power);
  CHECK_THROWS_AS(mth_unit_class(LocalElem::from_int(padic_field(3), 2, 6), 3), Error);  // wild
  CHECK_THROWS_AS(mth_unit_class(LocalElem::from_int(padic_field(5), 2, 6), 3), Error);  // 3 does not divide 4
}

TEST_CASE("string round-trips are canonical") {
  auto q5 = padic_field(5);
  CHECK(LocalElem::exact_zero(q5).str() == "0");
  CHECK(LocalElem::zero_to_precision(q5, 3).str() == "O(5^3)");
  auto x = LocalElem::from_int(q5, 7, 3);
  CHECK(x.str() == "5^0*(2 + 1*5 + O(5^3))");
  auto f4 = fq_make(2, 2);
  auto k = laurent_field(f4);
  FqElem w(f4, {0, 1});
  auto y = LocalElem::from_digits(k, -1, {FqElem::one(f4), w});
  CHECK(y.str() == "t^-1*([1,0] + [0,1]*t + O(t^2))");
}
