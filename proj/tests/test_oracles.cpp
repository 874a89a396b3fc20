// Unit tests for the independent verification engines: quadrature of the line
// symbol, Gaussian test-function pairing, exact Selberg/Fan/pairing constants
// and the tableau character oracle.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "howe/oracles.hpp"

using namespace howe;

TEST_CASE("adaptive simpson on closed forms") {
  const auto sq = adaptive_simpson([](double x) { return std::complex<double>(x * x); }, 0, 1,
                                   1e-12);
  CHECK(std::abs(sq - 1.0 / 3.0) < 1e-10);
  const auto osc = adaptive_simpson(
      [](double x) { return std::exp(std::complex<double>(0, x)); }, 0, 2 * M_PI, 1e-12);
  CHECK(std::abs(osc) < 1e-9);
}

TEST_CASE("quad_fourier matches the polynomial table at sample points") {
  auto close = [](double got, double want, double rel) {
    return std::abs(got - want) <= rel * std::max(1.0, std::abs(want));
  };
  CHECK(close(quad_fourier(1, 1, Rat(1)), M_PI / std::exp(1.0), 1e-7));
  CHECK(close(quad_fourier(1, 1, Rat(-2)), M_PI / std::exp(2.0), 1e-7));
  CHECK(close(quad_fourier(2, 1, Rat(0)), M_PI / 2.0, 1e-7));
  CHECK(close(quad_fourier(-1, 2, Rat(1, 2)), fourier_expected(-1, 2, Rat(1, 2)), 1e-6));
  CHECK(close(quad_fourier(3, -1, Rat(-1)), fourier_expected(3, -1, Rat(-1)), 1e-6));
  CHECK(close(quad_fourier(2, 2, Rat(0)), fourier_expected(2, 2, Rat(0)), 1e-6));
  CHECK_THROWS(quad_fourier(0, 0, Rat(1)));  // needs a + b >= 1
  CHECK_THROWS(quad_fourier(1, 0, Rat(0)));  // xi = 0 needs a + b >= 2
}

TEST_CASE("gaussian_hermite_transform frozen small cases") {
  // p = 1: transform is sqrt(pi) e^{-y^2/4}.
  const auto [re0, im0] = gaussian_hermite_transform(UniPoly{Rat(1)});
  CHECK(re0 == UniPoly{Rat(1)});
  CHECK(im0.is_zero());
  // p = x: i p_1 = i (-y/2).
  const auto [re1, im1] = gaussian_hermite_transform(UniPoly{Rat(0), Rat(1)});
  CHECK(re1.is_zero());
  CHECK(im1 == UniPoly{Rat(0), Rat(-1, 2)});
  // Numeric cross-check at y = 1 for p = x^2.
  const auto [re2, im2] = gaussian_hermite_transform(UniPoly{Rat(0), Rat(0), Rat(1)});
  const std::complex<double> I(0, 1);
  const auto direct = adaptive_simpson(
      [&](double x) { return x * x * std::exp(-x * x) * std::exp(-I * x); }, -12.0, 12.0, 1e-12);
  const std::complex<double> table = std::sqrt(M_PI) * std::exp(-0.25) *
                                     (std::complex<double>(re2.eval(1.0), im2.eval(1.0)));
  CHECK(std::abs(direct - table) < 1e-10);
}

TEST_CASE("pairing against Gaussian test functions") {
  auto close = [](const PairingReport& r) {
    return std::abs(r.lhs - r.rhs) <= 1e-6 * std::max(1.0, std::abs(r.rhs));
  };
  CHECK(close(pair_with_test_function(0, 0)));
  CHECK(close(pair_with_test_function(-1, 0)));
  CHECK(close(pair_with_test_function(0, -2)));
  CHECK(close(pair_with_test_function(-1, -1)));
  CHECK(close(pair_with_test_function(1, -2)));
  CHECK(close(pair_with_test_function(-2, 1)));
  // Custom polynomial part with a nonzero value at 0 exercises the delta terms.
  const UniPoly p{Rat(1), Rat(0), Rat(0), Rat(2)};
  CHECK(close(pair_with_test_function(-1, 0, &p)));
  CHECK(close(pair_with_test_function(0, -1, &p)));
  CHECK_THROWS(pair_with_test_function(1, 1));
}

TEST_CASE("gaussian_selberg closed form") {
  CHECK(gaussian_selberg(1, 1) == 1);
  CHECK(gaussian_selberg(2, 3) == 4);
  for (long l = 1; l <= 3; ++l)
    for (long lp = l; lp <= 6; ++lp) CHECK_NOTHROW(gaussian_selberg(l, lp));
  CHECK_THROWS(gaussian_selberg(3, 2));
}

TEST_CASE("fan determinant closed form") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (long n = 2; n <= 8; ++n) {
    CHECK_NOTHROW(fan_det(Rat(0), n));
    for (int rep = 0; rep < 5; ++rep)
      CHECK_NOTHROW(fan_det(rat_from_long(num(rng), den(rng)), n));
  }
  CHECK(fan_det(Rat(7, 3), 3) == 2);  // 1! * 2!
  CHECK_THROWS(fan_det(Rat(1), 1));
}

TEST_CASE("partial(pi)(pi) closed form") {
  for (long l = 1; l <= 5; ++l) CHECK_NOTHROW(partial_pi_pi(l));
  CHECK(partial_pi_pi(2) == 2);
  CHECK(partial_pi_pi(3) == 12);  // 0! 1! 2! 3!
}

TEST_CASE("schur oracle small shapes") {
  const std::vector<std::complex<double>> x{{0.3, 0.4}, {-1.1, 0.2}};
  const auto s10 = schur_oracle(HighestWeight({Rat(1), Rat(0)}), x);
  CHECK(std::abs(s10 - (x[0] + x[1])) < 1e-12);
  const auto s21 = schur_oracle(HighestWeight({Rat(2), Rat(1)}), x);
  CHECK(std::abs(s21 - x[0] * x[1] * (x[0] + x[1])) < 1e-12);
  const auto s22 = schur_oracle(HighestWeight({Rat(2), Rat(2)}), x);
  CHECK(std::abs(s22 - x[0] * x[0] * x[1] * x[1]) < 1e-12);
  // Dimension check: s_lambda(1,...,1) is the Weyl dimension for U_l.
  const auto pr = make_dual_pair(Algebra::C, GFamily::U, 3, 3, 0, 3);
  const HighestWeight lam({Rat(2), Rat(1), Rat(0)});
  const auto s111 = schur_oracle(lam, {1.0, 1.0, 1.0});
  CHECK(std::abs(s111 - weyl_dimension(lam, pr).get_d()) < 1e-10);
  CHECK_THROWS(schur_oracle(HighestWeight({Rat(1), Rat(-1)}), x));
}

TEST_CASE("schur oracle matches the Weyl character on torus points") {
  const auto pr = make_dual_pair(Algebra::C, GFamily::U, 2, 2, 0, 2);
  const HighestWeight lam({Rat(3), Rat(1)});
  const std::vector<Rat> angles{Rat(2, 5), Rat(-1, 3)};
  std::vector<std::complex<double>> x;
  for (const auto& a : angles) x.push_back(std::polar(1.0, M_PI * a.get_d()));
  const auto chi = weyl_character(lam, pr, angles);
  const auto s = schur_oracle(lam, x);
  CHECK(std::abs(chi - s) < 1e-10);
}
