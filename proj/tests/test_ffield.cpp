#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naca/ffield.hpp"

using namespace naca;

TEST_CASE("prime field construction and arithmetic") {
  auto f5 = fq_make(5, 1);
  CHECK(f5->q == 5);
  CHECK(f5->modulus == std::vector<int64_t>{0, 1});  // x itself: the identity reduction

  auto two = FqElem::from_int(f5, 2);
  auto three = FqElem::from_int(f5, 3);
  CHECK(two * three == FqElem::one(f5));
  CHECK(two.inv() == three);
  CHECK((two + three).is_zero());
  CHECK(-two == three);
  CHECK(two.pow(4) == FqElem::one(f5));
  CHECK(two.prime_value() == 2);
}

TEST_CASE("default modulus is the lexicographically least irreducible") {
  auto f9 = fq_make(3, 2);
  CHECK(f9->modulus == std::vector<int64_t>{1, 0, 1});  // x^2 + 1
  // i = the adjoined root; i*i = -1 = 2
  FqElem i(f9, {0, 1});
  FqElem res = i * i;
  CHECK(res == FqElem::from_int(f9, 2));

  auto f4 = fq_make(2, 2);
  CHECK(f4->modulus == std::vector<int64_t>{1, 1, 1});  // x^2 + x + 1

  auto f8 = fq_make(2, 3);
  CHECK(f8->modulus == std::vector<int64_t>{1, 1, 0, 1});  // x^3 + x + 1
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(fq_make(4, 1), Error);
  CHECK_THROWS_AS(fq_make(3, 2, std::vector<int64_t>{2, 0, 1}), Error);  // x^2+2 = (x+1)(x+2)
  CHECK_THROWS_AS(fq_make(3, 2, std::vector<int64_t>{1, 1}), Error);     // degree mismatch
  try {
    fq_make(4, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotPrime);
  }
}

TEST_CASE("canonical order and enumeration") {
  auto f9 = fq_make(3, 2);
  auto all = fq_all_elements(f9);
  REQUIRE(all.size() == 9);
  CHECK(all[0].is_zero());
  for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(fq_less(all[i], all[i + 1]));
  // order is lexicographic on (c0, c1), so the adjoined root precedes 1
  CHECK(all[1].coeffs() == std::vector<int64_t>{0, 1});
  CHECK(all[2].coeffs() == std::vector<int64_t>{0, 2});
  CHECK(all[3].is_one());
}

TEST_CASE("generator, discrete log, power classes") {
  auto f7 = fq_make(7, 1);
  auto g = fq_generator(f7);
  CHECK(g.prime_value() == 3);  // least generator of F_7^x
  CHECK(fq_order(g) == 6);
  CHECK(fq_dlog(FqElem::one(f7)) == 0);
  CHECK(fq_dlog(g) == 1);
  CHECK(fq_dlog(g * g) == 2);

  // cubes in F_7 are {1, 6}
  auto pc1 = fq_power_class(FqElem::from_int(f7, 6), 3);
  CHECK(pc1.is_nth_power);
  auto pc2 = fq_power_class(FqElem::from_int(f7, 2), 3);
  CHECK_FALSE(pc2.is_nth_power);

  CHECK(fq_nonresidue(f7, 3).prime_value() == 2);
  auto f5 = fq_make(5, 1);
  CHECK(fq_nonresidue(f5, 2).prime_value() == 2);
  CHECK_THROWS_AS(fq_nonresidue(f5, 3), Error);  // 3 does not divide 4: all elements are cubes

  CHECK(fq_element_of_order(f7, 2).prime_value() == 6);
  CHECK(fq_element_of_order(f7, 3).prime_value() == 2);
}

TEST_CASE("extension field arithmetic respects the modulus") {
  auto f8 = fq_make(2, 3);  // x^3 = x + 1
  FqElem x(f8, {0, 1, 0});
  FqElem x3 = x.pow(3);
  CHECK(x3.coeffs() == std::vector<int64_t>{1, 1, 0});
  CHECK(fq_order(x) == 7);
  // every nonzero element inverts
  for (const auto& e : fq_all_elements(f8)) {
    if (e.is_zero()) continue;
    CHECK(e * e.inv() == FqElem::one(f8));
  }
}

TEST_CASE("spec mismatch is rejected") {
  auto f5 = fq_make(5, 1);
  auto f7 = fq_make(7, 1);
  CHECK_THROWS_AS(FqElem::one(f5) + FqElem::one(f7), Error);
}
