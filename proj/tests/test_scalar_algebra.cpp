// Unit tests for the exact scalar/polynomial layer.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "howe/scalar_algebra.hpp"
#include "howe/unipoly.hpp"

using namespace howe;

TEST_CASE("rational helpers") {
  CHECK(rat_from_long(2, 4) == Rat(1, 2));
  CHECK(factorial(5) == 120);
  CHECK(binomial(-3, 2) == 6);
  CHECK(rising_product(Rat(2), 3) == 24);
  CHECK(pow2(-3) == Rat(1, 8));
  CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(rat_to_string(Rat(-7, 2)) == "-7/2");
  CHECK(rat_from_string("-7/2") == Rat(-7, 2));
  CHECK(to_long(Rat(42)) == 42);
  CHECK_THROWS(to_long(Rat(1, 2)));
}

TEST_CASE("pi scalar algebra") {
  const PiScalar two_pi(Rat(2), 1, 0);
  const PiScalar i(Rat(1), 0, 1);
  CHECK((i * i) == PiScalar(Rat(-1)));
  CHECK((i * i * i * i) == PiScalar(Rat(1)));
  CHECK((two_pi * i).to_complex().imag() == doctest::Approx(2 * M_PI));
  CHECK((two_pi / two_pi) == PiScalar(Rat(1)));
  CHECK_THROWS(two_pi + i);  // incompatible pi-power
  CHECK((PiScalar(Rat(3), 2, 1) + PiScalar(Rat(-3), 2, 1)).is_zero());
}

TEST_CASE("unipoly basics") {
  const UniPoly p{Rat(1), Rat(0), Rat(-2)};  // 1 - 2x^2
  CHECK(p.degree() == 2);
  CHECK(p.derivative() == UniPoly{Rat(0), Rat(-4)});
  CHECK(p.eval(Rat(1, 2)) == Rat(1, 2));
  CHECK(p.shifted(2).degree() == 4);
  CHECK((p - p).is_zero());
  CHECK(p.compose_scaled(Rat(2)) == UniPoly{Rat(1), Rat(0), Rat(-8)});
}

TEST_CASE("vandermonde_det examples") {
  // (3, 1): (z2 - z1) = -2.
  CHECK(vandermonde_det({Rat(3), Rat(1)}) == -2);
  // (5, 2, 0): (2-5)(0-5)(0-2) = -30.
  CHECK(vandermonde_det({Rat(5), Rat(2), Rat(0)}) == -30);
  // (1, 2, 4): (2-1)(4-1)(4-2) = 6.
  CHECK(vandermonde_det({Rat(1), Rat(2), Rat(4)}) == 6);
}

TEST_CASE("falling_product_sum equals the Vandermonde determinant") {
  // Frozen small case: m = 2, (3, 1): (z2-1) - (z1-1) = -2.
  CHECK(falling_product_sum({Rat(3), Rat(1)}) == -2);
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  for (int m = 1; m <= 6; ++m) {
    for (int rep = 0; rep < 100; ++rep) {
      std::vector<Rat> z;
      for (int j = 0; j < m; ++j) z.push_back(rat_from_long(num(rng), den(rng)));
      CAPTURE(m);
      CHECK(falling_product_sum(z) == vandermonde_det(z));
    }
  }
}

TEST_CASE("exact_det") {
  CHECK(exact_det({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}) == -2);
  CHECK(exact_det({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == -1);
  CHECK(exact_det({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}) == 0);
  CHECK_THROWS(exact_det({{Rat(1), Rat(2)}}));
  // Random cross-check against the Vandermonde formula.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Rat> z;
    for (int j = 0; j < 4; ++j) z.push_back(Rat(num(rng)));
    std::vector<std::vector<Rat>> m(4, std::vector<Rat>(4));
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m[j][k] = rat_pow(z[j], k);
    CHECK(exact_det(m) == vandermonde_det(z));
  }
}

TEST_CASE("signed permutations act correctly") {
  SignedPermutation s(2);
  s.perm = {1, 0};  // swap
  const auto r = s.apply(std::vector<Rat>{Rat(5), Rat(7)});
  CHECK(r == std::vector<Rat>{Rat(7), Rat(5)});
  CHECK(s.perm_parity() == -1);
  CHECK(compose(s, s) == SignedPermutation(2));
  CHECK(s.inverse() == s);
  CHECK(symmetric_group(3).size() == 6);
  CHECK(hyperoctahedral_group(2).size() == 8);
  // Sign change in coordinate 0.
  SignedPermutation f(2);
  f.signs = {-1, 1};
  CHECK(f.apply(std::vector<Rat>{Rat(3), Rat(4)}) == std::vector<Rat>{Rat(-3), Rat(4)});
  CHECK(f.perm_parity() == 1);
}

TEST_CASE("multipoly substitution and evaluation") {
  // p = y1^2 - y2^2 on 2 variables.
  MultiPoly p = MultiPoly::monomial(2, {2, 0}, PiScalar(Rat(1))) +
                MultiPoly::monomial(2, {0, 2}, PiScalar(Rat(-1)));
  SignedPermutation swap(2);
  swap.perm = {1, 0};
  CHECK(p.substitute(swap) == -p);
  CHECK(p.eval_exact({Rat(3), Rat(2)}) == PiScalar(Rat(5)));
  SignedPermutation flip(2);
  flip.signs = {-1, 1};
  CHECK(p.substitute(flip) == p);  // even powers
}

TEST_CASE("exact division by the Vandermonde product") {
  // (y1^2 - y2^2) / (y1 - y2) = y1 + y2.
  MultiPoly skew = MultiPoly::monomial(2, {2, 0}, PiScalar(Rat(1))) +
                   MultiPoly::monomial(2, {0, 2}, PiScalar(Rat(-1)));
  MultiPoly q = divide_by_vandermonde(skew, symmetric_group(2));
  MultiPoly expected =
      MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
  CHECK(q == expected);
  // Non-skew input is rejected.
  MultiPoly sym = MultiPoly::monomial(2, {2, 0}, PiScalar(Rat(1))) +
                  MultiPoly::monomial(2, {0, 2}, PiScalar(Rat(1)));
  CHECK_THROWS(divide_by_vandermonde(sym, symmetric_group(2)));
  // Nonzero remainder detection.
  MultiPoly one = MultiPoly::constant(2, PiScalar(Rat(1)));
  CHECK_THROWS(exact_divide(one, plain_vandermonde_poly(2)));
}

TEST_CASE("group_sign_on matches permutation parity on the Vandermonde") {
  const MultiPoly vdm = plain_vandermonde_poly(3);
  for (const auto& s : symmetric_group(3)) CHECK(group_sign_on(vdm, s) == s.perm_parity());
}
