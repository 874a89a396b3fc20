// Unit tests for the matrix model of W, the moment maps, Cartan normal forms,
// orbit dimensions and the dilation/homogeneity bookkeeping.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "howe/symplectic_geometry.hpp"

using namespace howe;

namespace {
DualPair o_sp(long d, long d_prime) {
  return make_dual_pair(Algebra::R, d % 2 == 0 ? GFamily::O_even : GFamily::O_odd, d, d_prime);
}
DualPair u_u(long d, long p, long q) {
  return make_dual_pair(Algebra::C, GFamily::U, d, p + q, p, q);
}
DualPair sp_ostar(long d, long d_prime) {
  return make_dual_pair(Algebra::H, GFamily::Sp, d, d_prime);
}

const std::vector<DualPair> kSamplePairs = {
    o_sp(2, 4), o_sp(3, 2), o_sp(5, 6), u_u(2, 1, 2), u_u(1, 0, 2), sp_ostar(1, 2),
    sp_ostar(2, 3)};
}  // namespace

TEST_CASE("invariant forms square to minus the identity") {
  for (const auto& pr : kSamplePairs) {
    const Eigen::MatrixXcd F = form_matrix(pr).m;
    CHECK((F * F + Eigen::MatrixXcd::Identity(F.rows(), F.cols())).norm() < 1e-14);
    CHECK((F.adjoint() + F).norm() < 1e-14);  // skew-hermitian
  }
}

TEST_CASE("quaternionic block realization multiplies correctly") {
  // (i)(j) = k and (j)(j) = -1 in the 2x2 complex block model.
  MatrixOverD i1(Algebra::H, 1, 1), j1(Algebra::H, 1, 1), k1(Algebra::H, 1, 1);
  i1.set_entry(0, 0, 0, 1, 0, 0);
  j1.set_entry(0, 0, 0, 0, 1, 0);
  k1.set_entry(0, 0, 0, 0, 0, 1);
  CHECK(((i1 * j1) - k1).norm() < 1e-15);
  MatrixOverD minus1(Algebra::H, 1, 1);
  minus1.set_entry(0, 0, -1);
  CHECK(((j1 * j1) - minus1).norm() < 1e-15);
  // Conjugate-transpose of j is -j.
  CHECK((j1.conj_transpose().m + j1.m).norm() < 1e-15);
}

TEST_CASE("moment map symmetry types") {
  std::mt19937_64 rng(7);
  for (const auto& pr : kSamplePairs) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto w = random_W(pr, rng);
      const auto t = tau(w, pr);
      CHECK((t.m.adjoint() + t.m).norm() < 1e-10 * (1.0 + t.norm()));
      const auto tp = tau_prime(w, pr);
      const Eigen::MatrixXcd F = form_matrix(pr).m;
      // F-skew: F^{-1} X* F = -X.
      CHECK((F.inverse() * tp.m.adjoint() * F + tp.m).norm() < 1e-10 * (1.0 + tp.norm()));
    }
  }
}

TEST_CASE("group samplers land in the right groups") {
  std::mt19937_64 rng(11);
  for (const auto& pr : kSamplePairs) {
    const auto g = random_G(pr, rng);
    CHECK((g.m.adjoint() * g.m - Eigen::MatrixXcd::Identity(g.m.rows(), g.m.cols())).norm() <
          1e-10);
    const auto gp = random_Gprime(pr, rng);
    const Eigen::MatrixXcd F = form_matrix(pr).m;
    // g' preserves F: g'* F g' = F.
    CHECK((gp.m.adjoint() * F * gp.m - F).norm() < 1e-8 * (1.0 + gp.norm() * gp.norm()));
  }
}

TEST_CASE("moment map equivariance on random samples") {
  std::mt19937_64 rng(23);
  for (const auto& pr : kSamplePairs) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto w = random_W(pr, rng);
      const auto g = random_G(pr, rng);
      MatrixOverD wg(pr.algebra, pr.d_prime, pr.d);
      wg.m = w.m * g.m.inverse();
      const auto lhs = tau(wg, pr);
      Eigen::MatrixXcd rhs = g.m * tau(w, pr).m * g.m.inverse();
      CHECK((lhs.m - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));

      const auto gp = random_Gprime(pr, rng);
      MatrixOverD gw(pr.algebra, pr.d_prime, pr.d);
      gw.m = gp.m * w.m;
      const auto lhs2 = tau_prime(gw, pr);
      Eigen::MatrixXcd rhs2 = gp.m * tau_prime(w, pr).m * gp.m.inverse();
      CHECK((lhs2.m - rhs2).norm() < 1e-8 * (1.0 + rhs2.norm()));
    }
  }
}

TEST_CASE("Cartan elements have the diagonal normal form") {
  auto check_normal_form = [](const CartanSpec& cs) {
    const DualPair& pr = cs.pair;
    const auto w = cartan_element(cs);
    const auto deltas = cartan_deltas(cs);
    Eigen::MatrixXcd expect_g =
        Eigen::MatrixXcd::Zero(MatrixOverD::span(pr.algebra) * pr.d,
                               MatrixOverD::span(pr.algebra) * pr.d);
    Eigen::MatrixXcd expect_gp =
        Eigen::MatrixXcd::Zero(MatrixOverD::span(pr.algebra) * pr.d_prime,
                               MatrixOverD::span(pr.algebra) * pr.d_prime);
    for (long j = 0; j < cartan_rank(pr); ++j) {
      const double c = cs.coords[j].get_d() * cs.coords[j].get_d() * deltas[j];
      expect_g += c * cartan_J(cs, j).m;
      expect_gp += c * cartan_J_prime(cs, j).m;
    }
    CHECK((tau(w, pr).m - expect_g).norm() < 1e-12);
    CHECK((tau_prime(w, pr).m - expect_gp).norm() < 1e-12);
  };

  check_normal_form({o_sp(2, 4), 1, {Rat(3, 2)}});
  check_normal_form({o_sp(4, 4), 2, {Rat(2), Rat(1, 3)}});
  check_normal_form({o_sp(5, 6), 2, {Rat(1), Rat(-1, 2)}});
  check_normal_form({u_u(2, 1, 2), 1, {Rat(1), Rat(2)}});
  check_normal_form({u_u(2, 1, 2), 0, {Rat(1), Rat(2)}});
  check_normal_form({u_u(1, 0, 2), 0, {Rat(5, 2)}});
  check_normal_form({sp_ostar(1, 2), 1, {Rat(3)}});
  check_normal_form({sp_ostar(2, 3), 2, {Rat(1), Rat(1, 2)}});

  CHECK_THROWS(cartan_element({u_u(2, 1, 2), 2, {Rat(1), Rat(2)}}));  // m > p
  CHECK_THROWS(cartan_element({o_sp(2, 4), 0, {Rat(1)}}));            // m must be min(l, l')
  CHECK_THROWS(cartan_element({o_sp(2, 4), 1, {Rat(1), Rat(2)}}));    // wrong coord count
}

TEST_CASE("rank over D and the open-set predicate") {
  std::mt19937_64 rng(31);
  for (const auto& pr : kSamplePairs) {
    const auto w = random_W(pr, rng);
    if (pr.d <= pr.d_prime) CHECK(rank_over_D(w) == pr.d);  // generic full rank
    CHECK(is_in_Wg(w, pr) == (rank_over_D(w) >= pr.d - (pr.algebra == Algebra::R ? 1 : 0)));
    MatrixOverD z(pr.algebra, pr.d_prime, pr.d);
    CHECK(rank_over_D(z) == 0);
  }
  // Rank-one quaternionic matrix has complex rank two, quaternionic rank one.
  MatrixOverD q(Algebra::H, 2, 2);
  q.set_entry(0, 0, 1, 2, 3, 4);
  CHECK(rank_over_D(q) == 1);
}

TEST_CASE("witt index and orbit dimensions") {
  CHECK(witt_index(o_sp(2, 4)) == 2);
  CHECK(witt_index(u_u(2, 1, 2)) == 1);
  CHECK(witt_index(sp_ostar(2, 3)) == 1);
  CHECK(max_orbit_rank(o_sp(2, 4)) == 2);
  CHECK(orbit_dim(o_sp(2, 4), 2) == 6);
  CHECK(orbit_dim(u_u(2, 1, 2), 1) == 4);
  CHECK(orbit_dim(sp_ostar(2, 3), 1) == 6);
  CHECK_THROWS(orbit_dim(o_sp(2, 4), 3));
  // Dual-formula agreement on a sweep.
  for (const auto& pr : kSamplePairs)
    for (long k = 0; k <= max_orbit_rank(pr); ++k)
      CHECK(orbit_dim(pr, k) == orbit_dim_general(pr, k));
}

TEST_CASE("stable range predicate") {
  CHECK(stable_range_equality(o_sp(2, 8)));
  CHECK(stable_range_equality(u_u(1, 1, 2)));
  CHECK_FALSE(stable_range_equality(o_sp(4, 2)));
}

TEST_CASE("homogeneity gap zero set") {
  CHECK(homogeneity_gap(o_sp(1, 2)) == 0);
  CHECK(homogeneity_gap(o_sp(1, 8)) == 0);
  CHECK(homogeneity_gap(o_sp(2, 2)) == 0);
  CHECK(homogeneity_gap(o_sp(2, 6)) == 0);
  CHECK(homogeneity_gap(o_sp(3, 2)) == 0);
  CHECK(homogeneity_gap(u_u(1, 1, 1)) == 0);
  CHECK(homogeneity_gap(u_u(2, 1, 1)) == 0);
  CHECK(homogeneity_gap(o_sp(3, 4)) > 0);
  CHECK(homogeneity_gap(sp_ostar(1, 2)) > 0);
  CHECK_THROWS(homogeneity_gap(o_sp(6, 4)));  // l > l'
}

TEST_CASE("dilation determinant exponents") {
  const auto pr = o_sp(2, 4);
  CHECK(gt_dilation_exponent(pr, 0) == dim_W(pr));
  CHECK(gt_dilation_exponent(pr, 2) == dim_W(pr) - 6);
  CHECK(gt_dilation_det(pr, 2, Rat(3)) == rat_pow(Rat(3), dim_W(pr) - 6));
  CHECK_THROWS(gt_dilation_det(pr, 2, Rat(0)));
}

TEST_CASE("derivative order bound") {
  CHECK(derivative_order_bound(o_sp(2, 2)) == 0);
  CHECK(derivative_order_bound(u_u(1, 0, 2)) == 0);
  CHECK(derivative_order_bound(u_u(1, 0, 4)) == 2);
  CHECK(derivative_order_bound(sp_ostar(1, 2)) == 1);
  CHECK_THROWS(derivative_order_bound(o_sp(6, 4)));
}
