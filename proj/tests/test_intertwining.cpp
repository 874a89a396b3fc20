// Unit tests for the intertwining machinery: exponent conventions, parameter
// correspondence, integrand profiles, the unitary closed form, the skew sum at
// zero, the multiplicity-one sweep and the rank-one toy computation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "howe/intertwining.hpp"

using namespace howe;

namespace {
DualPair o_sp(long d, long d_prime) {
  return make_dual_pair(Algebra::R, d % 2 == 0 ? GFamily::O_even : GFamily::O_odd, d, d_prime);
}
DualPair u_u(long d, long p, long q) {
  return make_dual_pair(Algebra::C, GFamily::U, d, p + q, p, q);
}
}  // namespace

TEST_CASE("ab exponent conventions") {
  const HCParam mu({Rat(2)});
  const auto e6 = ab_exponents(mu, Rat(1), ABConvention::sec6);
  CHECK(e6.a == std::vector<long>{-2});
  CHECK(e6.b == std::vector<long>{2});
  const auto e7 = ab_exponents(mu, Rat(1), ABConvention::sec7);
  CHECK(e7.a == std::vector<long>{2});
  CHECK(e7.b == std::vector<long>{-2});
  // a_j + b_j = 2(1 - delta) in either convention.
  CHECK(e6.a[0] + e6.b[0] == 0);
  CHECK_THROWS(ab_exponents(mu, Rat(1, 2), ABConvention::sec6));  // non-integer exponents
}

TEST_CASE("occurrence and admissibility") {
  const auto pr = u_u(1, 0, 2);
  CHECK(occurs_in_omega(HighestWeight({Rat(1)}), pr));
  CHECK_FALSE(occurs_in_omega(HighestWeight({Rat(0)}), pr));
  CHECK_THROWS(occurs_in_omega(HighestWeight({Rat(1)}), o_sp(2, 2)));
  CHECK(admissible_mu(HCParam({Rat(3), Rat(1)}), Rat(1)));
  CHECK_FALSE(admissible_mu(HCParam({Rat(3), Rat(1, 2)}), Rat(1)));
  CHECK_FALSE(admissible_mu(HCParam({Rat(0)}), Rat(1)));  // mu - delta < 0
}

TEST_CASE("vanishing condition in the deep-rank regime") {
  // (O_6, Sp_2): l = 3, l' = 1, target rho'' = (1/2, -1/2); signs allowed.
  const auto pr = o_sp(6, 2);
  CHECK(vanishing_condition_l_gt_lprime(HCParam({Rat(5, 2), Rat(3, 2), Rat(1, 2)}), pr) ==
        false);  // only one +-1/2 available
  CHECK(vanishing_condition_l_gt_lprime(HCParam({Rat(5, 2), Rat(1, 2), Rat(-1, 2)}), pr));
  CHECK_FALSE(vanishing_condition_l_gt_lprime(HCParam({Rat(7, 2), Rat(5, 2), Rat(3, 2)}), pr));
  // Unitary family: signs are not allowed.
  const auto pc = u_u(3, 0, 1);
  CHECK(vanishing_condition_l_gt_lprime(HCParam({Rat(3, 2), Rat(1, 2), Rat(-1, 2)}), pc));
  CHECK_FALSE(vanishing_condition_l_gt_lprime(HCParam({Rat(3, 2), Rat(1, 2), Rat(-3, 2)}), pc));
  CHECK_THROWS(vanishing_condition_l_gt_lprime(HCParam({Rat(1)}), u_u(1, 0, 2)));
}

TEST_CASE("parameter correspondence") {
  const auto mu_p = correspond(HCParam({Rat(2)}), 1, 2);
  CHECK(mu_p.entries == std::vector<Rat>{Rat(0), Rat(-2)});
  const auto mu_q = correspond(HCParam({Rat(1)}), 1, 2);
  CHECK(mu_q.entries == std::vector<Rat>{Rat(0), Rat(-1)});
  const auto mu_r = correspond(HCParam({Rat(1, 2)}), 1, 1);
  CHECK(mu_r.entries == std::vector<Rat>{Rat(-1, 2)});
  const auto mu_s = correspond(HCParam({Rat(7, 2), Rat(5, 2)}), 2, 4);
  CHECK(mu_s.entries ==
        std::vector<Rat>{Rat(1, 2), Rat(-1, 2), Rat(-5, 2), Rat(-7, 2)});
  CHECK_THROWS(correspond(HCParam({Rat(1)}), 1, 1));  // inadmissible (delta = 1/2)
}

TEST_CASE("integrand profiles") {
  const auto prof = integrand_profile(HCParam({Rat(2)}), o_sp(2, 2));
  CHECK(prof.coords.size() == 1);
  CHECK(prof.beta == PiScalar(Rat(1), 1, 0));
  CHECK(prof.delta_allowed);
  // mu = 2, delta = 1 -> (a, b) = (-2, 2): plus part P_{-2,2,2} = 4 xi - 4,
  // and Q_{-2,2} = 1 (single term k = 2 of the middle branch).
  CHECK(prof.coords[0].plus_part == UniPoly{Rat(-4), Rat(4)});
  CHECK(prof.coords[0].delta_part == UniPoly{Rat(1)});
  CHECK(prof.coords[0].overall == PiScalar(Rat(1)));

  // Unitary profile with l > min(p, q) masks the delta parts.
  const auto pc = u_u(2, 1, 1);
  const auto prof2 = integrand_profile(HCParam({Rat(3, 2), Rat(1, 2)}), pc);  // delta = 1/2
  CHECK_FALSE(prof2.delta_allowed);
  for (const auto& c : prof2.coords) CHECK(c.delta_part.is_zero());

  const auto ph = make_dual_pair(Algebra::H, GFamily::Sp, 1, 2);
  const auto prof3 = integrand_profile(HCParam({Rat(2)}), ph);
  CHECK(prof3.beta == PiScalar(Rat(2), 1, 0));  // beta = pi / iota = 2 pi

  CHECK_THROWS(integrand_profile(HCParam({Rat(2), Rat(1)}), o_sp(6, 4)));  // l > l'
}

TEST_CASE("uu_distribution closed forms at rank one") {
  // (1, 1), mu = 1/2: exponents (1, 0), P_{1,0,-2} = 1.
  const auto p0 = uu_distribution(HCParam({Rat(1, 2)}), 1, 1);
  CHECK(p0.invariant_poly == MultiPoly::constant(1, PiScalar(Rat(1))));
  CHECK(p0.gaussian_rate == PiScalar(Rat(1, 2), 1, 0));
  // (1, 1), mu = 3/2: exponents (2, -1), P_{2,-1,-2}(pi y) = -2 pi y - 1.
  const auto p1 = uu_distribution(HCParam({Rat(3, 2)}), 1, 1);
  MultiPoly expect = MultiPoly::constant(1, PiScalar(Rat(-1))) +
                     MultiPoly::variable(1, 0, PiScalar(Rat(-2), 1, 0));
  CHECK(p1.invariant_poly == expect);
  CHECK_THROWS(uu_distribution(HCParam({Rat(1)}), 1, 1));  // inadmissible
}

TEST_CASE("eval_uu smoke values at rank one") {
  const auto prof = uu_distribution(HCParam({Rat(1, 2)}), 1, 1);
  MatrixOverD w(Algebra::C, 1, 1);
  w.set_entry(0, 0, 1.0);
  CHECK(eval_uu(prof, w) == doctest::Approx(std::exp(-M_PI / 2.0)).epsilon(1e-12));
  w.set_entry(0, 0, 0.0);
  CHECK(eval_uu(prof, w) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("skew sum at zero frozen values") {
  CHECK(T_at_zero_skew_sum(HCParam({Rat(1)}), 1, 2) == 2);
  CHECK(T_at_zero_skew_sum(HCParam({Rat(2)}), 1, 2) == -4);
  CHECK(T_at_zero_skew_sum(HCParam({Rat(1, 2)}), 1, 1) == 1);
}

TEST_CASE("multiplicity-one sweeps") {
  const auto r12 = multiplicity_one_check(1, 2, 4);
  CHECK(r12.ok);
  CHECK(r12.checked == 5);
  CHECK(r12.ratio == 2);
  const auto r23 = multiplicity_one_check(2, 3, 4);
  CHECK(r23.ok);
  CHECK(r23.checked > 0);
  const auto r33 = multiplicity_one_check(3, 3, 4);
  CHECK(r33.ok);
  CHECK_THROWS(multiplicity_one_check(2, 1, 3));
}

TEST_CASE("rank-one toy distribution") {
  for (long n = 1; n <= 8; ++n) {
    for (int sign : {1, -1}) {
      const auto t = o1_sp_toy(n, sign);
      CHECK(t.delta_coeff == Rat(1, 2));
      CHECK(t.lebesgue_coeff == sign * pow2(-n - 1));
    }
  }
  CHECK_THROWS(o1_sp_toy(0, 1));
  CHECK_THROWS(o1_sp_toy(2, 0));
}
