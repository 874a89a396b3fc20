// intertwining.hpp - the intertwining-distribution machinery: admissibility of
// highest weights, the parameter correspondence mu -> mu', symbolic integrand
// profiles, the (U_l, U_{l'}) closed form and its invariant evaluation, the
// skew sum S(mu) at zero, the multiplicity-one check, and the (O_1, Sp_{2n})
// toy computation.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "howe/multipoly.hpp"
#include "howe/rational.hpp"
#include "howe/root_data.hpp"
#include "howe/scalar_algebra.hpp"
#include "howe/special_functions.hpp"
#include "howe/symplectic_geometry.hpp"

namespace howe {

enum class ABConvention { sec6, sec7 };

struct ABExponents {
  std::vector<long> a, b;
  ABConvention convention = ABConvention::sec6;
};

// Procedure: ab_exponents
// sec6: a_j = -mu_j - delta + 1, b_j = mu_j - delta + 1;
// sec7: a_j =  mu_j - delta + 1, b_j = -mu_j - delta + 1.
// The two coexist because the second realization flips the signature signs.
inline ABExponents ab_exponents(const HCParam& mu, const Rat& delta, ABConvention conv) {
  ABExponents e;
  e.convention = conv;
  for (const auto& m : mu.entries) {
    const Rat am = conv == ABConvention::sec6 ? Rat(-m - delta + 1) : Rat(m - delta + 1);
    const Rat bm = conv == ABConvention::sec6 ? Rat(m - delta + 1) : Rat(-m - delta + 1);
    if (!is_integer(am) || !is_integer(bm))
      throw std::domain_error("ab_exponents: exponents must be integers");
    e.a.push_back(to_long(am));
    e.b.push_back(to_long(bm));
  }
  return e;
}

// Procedure: occurs_in_omega
// (U_l, U_{l'}), l <= l': lambda occurs iff lambda_l >= l'/2, equivalently
// mu_j in delta + Z>=0 for mu = lambda + rho.
inline bool occurs_in_omega(const HighestWeight& lambda, const DualPair& pr) {
  if (pr.algebra != Algebra::C || pr.l > pr.l_prime)
    throw std::domain_error("occurs_in_omega: supported only for (U_l, U_{l'}), l <= l'");
  if (static_cast<long>(lambda.entries.size()) != pr.l)
    throw std::invalid_argument("occurs_in_omega: wrong rank");
  return lambda.entries.back() >= Rat(pr.l_prime) / 2;
}

// Procedure: admissible_mu
// mu_j in delta + Z>=0.
inline bool admissible_mu(const HCParam& mu, const Rat& delta) {
  for (const auto& m : mu.entries)
    if (!is_integer(m - delta) || m - delta < 0) return false;
  return true;
}

// Procedure: vanishing_condition_l_gt_lprime
// l > l': true iff some Weyl conjugate of mu restricts on h'' to rho'' (the
// rho vector of u_{l-l'}).  Sign changes are allowed unless D = C.
inline bool vanishing_condition_l_gt_lprime(const HCParam& mu, const DualPair& pr) {
  if (pr.l <= pr.l_prime)
    throw std::domain_error("vanishing_condition_l_gt_lprime: requires l > l'");
  const std::vector<Rat> target = rho_doubleprime(pr.l_prime, pr.l);
  const bool signs = pr.algebra != Algebra::C;
  std::vector<bool> used(mu.entries.size(), false);
  std::function<bool(size_t)> match = [&](size_t t) {
    if (t == target.size()) return true;
    for (size_t j = 0; j < mu.entries.size(); ++j) {
      if (used[j]) continue;
      if (mu.entries[j] == target[t] || (signs && mu.entries[j] == -target[t])) {
        used[j] = true;
        if (match(t + 1)) return true;
        used[j] = false;
      }
    }
    return false;
  };
  return match(0);
}

// Procedure: correspond
// mu' of length l': restriction -mu on the first block, rho'' of u_{l'-l} on
// the rest, sorted strictly decreasing.
inline HCParam correspond(const HCParam& mu, long l, long l_prime) {
  if (static_cast<long>(mu.entries.size()) != l)
    throw std::invalid_argument("correspond: wrong rank");
  const Rat delta = Rat(l_prime - l + 1) / 2;
  if (!admissible_mu(mu, delta)) throw std::domain_error("correspond: inadmissible mu");
  std::vector<Rat> out;
  for (const auto& m : mu.entries) out.push_back(-m);
  if (l < l_prime)
    for (const auto& r : rho_doubleprime(l, l_prime)) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const Rat& x, const Rat& y) { return x > y; });
  return HCParam(out);
}

struct IntegrandProfile {
  std::vector<LinePolyDistribution> coords;  // per-coordinate, argument beta*y_j
  PiScalar beta;                             // pi / iota
  bool delta_allowed = true;                 // boundary rule mask
  std::string domain;                        // description of h cap tau(W)
};

// Procedure: integrand_profile
// The symbolic u(y) = C prod_j (p_j + q_j(-d)delta_0) with p_j carrying
// P_{a_j,b_j,+-2}(beta y_j) e^{-beta |y_j|} and q_j = Q_{a_j,b_j} (zero when
// a_j+b_j >= 1).  Delta parts are masked off when the boundary of h cap tau(W)
// is not contained in the relevant hyperplanes: for D = C this happens
// whenever l > min(p, q); for the other families the cone is symmetric and
// delta parts stay.
inline IntegrandProfile integrand_profile(const HCParam& mu, const DualPair& pr) {
  if (pr.l > pr.l_prime) throw std::domain_error("integrand_profile: requires l <= l'");
  if (static_cast<long>(mu.entries.size()) != pr.l)
    throw std::invalid_argument("integrand_profile: wrong rank");
  const ABExponents ab = ab_exponents(mu, pr.delta, ABConvention::sec6);
  IntegrandProfile prof;
  prof.beta = PiScalar(pr.beta_pi_multiple, 1, 0);
  prof.delta_allowed =
      pr.algebra != Algebra::C || pr.l <= std::min(pr.p, pr.q);
  for (long j = 0; j < pr.l; ++j) {
    LinePolyDistribution d = fourier_pair({ab.a[j], ab.b[j]});
    d.overall = PiScalar(Rat(1));  // the global constant C is tracked separately
    if (!prof.delta_allowed) d.delta_part = {};
    prof.coords.push_back(d);
  }
  switch (pr.algebra) {
    case Algebra::C:
      prof.domain = "y_1 >= ... >= y_m >= 0 >= y_{m+1} >= ... >= y_l (m positive deltas)";
      break;
    default: prof.domain = "Weyl chamber of the full signed-permutation group"; break;
  }
  return prof;
}

struct UUProfile {
  HCParam mu;
  long l = 0, l_prime = 0;
  MultiPoly invariant_poly;  // P~_mu, pi-powers carried in the coefficients
  PiScalar gaussian_rate;    // pi/2
};

// Procedure: uu_distribution
// P~_mu = [sum_s sgn(s) P_mu(s y)] / prod_{j<k}(y_j - y_k) with
// P_mu(y) = prod_j P_{a_j, b_j, -2}(pi y_j) in the sec7 exponents.  The
// quotient by the plain Vandermonde differs from the quotient by pi_{g/h} by
// the constant (-i)^{l(l-1)/2}; stripping it keeps the coefficients real so
// eval_uu returns a real number.
inline UUProfile uu_distribution(const HCParam& mu, long l, long l_prime) {
  if (static_cast<long>(mu.entries.size()) != l)
    throw std::invalid_argument("uu_distribution: wrong rank");
  const Rat delta = Rat(l_prime - l + 1) / 2;
  if (!admissible_mu(mu, delta)) throw std::domain_error("uu_distribution: inadmissible mu");
  const ABExponents ab = ab_exponents(mu, delta, ABConvention::sec7);
  const int n = static_cast<int>(l);
  MultiPoly pmu = MultiPoly::constant(n, PiScalar(Rat(1)));
  for (int j = 0; j < n; ++j) {
    const UniPoly pj = poly_Pm2({ab.a[j], ab.b[j]});
    MultiPoly factor(n);
    for (long k = 0; k <= pj.degree(); ++k) {
      std::vector<int> e(n, 0);
      e[j] = static_cast<int>(k);
      factor.add_term(e, PiScalar(pj.coeff(k), k, 0));  // (pi y_j)^k
    }
    pmu = pmu * factor;
  }
  MultiPoly skew(n);
  for (const auto& s : symmetric_group(n)) {
    MultiPoly moved = pmu.substitute(s);
    skew = skew + (s.perm_parity() == 1 ? moved : -moved);
  }
  UUProfile prof{mu, l, l_prime, MultiPoly(n), PiScalar(Rat(1, 2), 1, 0)};
  if (!skew.is_zero()) prof.invariant_poly = divide_by_vandermonde(skew, symmetric_group(n));
  return prof;
}

// Procedure: eval_uu
// Numeric e^{-(pi/2) tr(w w*)} P~_mu(y), y the eigenvalues of i tau(w)
// (nonpositive reals in the compact-compact realization F = iI).
inline double eval_uu(const UUProfile& prof, const MatrixOverD& w) {
  const DualPair pr = make_dual_pair(Algebra::C, GFamily::U, prof.l, prof.l_prime, 0,
                                     prof.l_prime);
  const MatrixOverD t = tau(w, pr);
  Eigen::MatrixXcd h = std::complex<double>(0, 1) * t.m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  std::vector<std::complex<double>> y;
  for (long j = 0; j < es.eigenvalues().size(); ++j) y.push_back(es.eigenvalues()(j));
  const double trace = (w.m * w.m.adjoint()).trace().real();
  return std::exp(-M_PI / 2.0 * trace) * prof.invariant_poly.eval_complex(y).real();
}

// Procedure: T_at_zero_skew_sum
// S(mu) = sum_{s in Sigma_l} sgn(s) prod_j [d^{s(j)-1} P_{a_j,b_j,-2}](0)
// with a_j = mu_j - delta + 1, b_j = -mu_j - delta + 1, using the exact
// derivative rule d^m P_{a,b,-2} = (-1)^m P_{a-m,b,-2}.  (The (-1)^m factors
// multiply to the constant (-1)^{l(l-1)/2} across every permutation, so they
// scale S(mu) by a global sign only.)
inline Rat T_at_zero_skew_sum(const HCParam& mu, long l, long l_prime) {
  if (static_cast<long>(mu.entries.size()) != l)
    throw std::invalid_argument("T_at_zero_skew_sum: wrong rank");
  const Rat delta = Rat(l_prime - l + 1) / 2;
  const ABExponents ab = ab_exponents(mu, delta, ABConvention::sec7);
  Rat total = 0;
  for (const auto& s : symmetric_group(static_cast<int>(l))) {
    Rat term = s.perm_parity();
    for (long j = 0; j < l; ++j) {
      const long m = s.perm[j];  // s(j) - 1
      const ExponentPair e{ab.a[j] - m, ab.b[j]};
      Rat v = (e.a < 1) ? Rat(0) : poly_Pm2(e).coeff(0);
      if (m % 2) v = -v;
      term *= v;
    }
    total += term;
  }
  return total;
}

struct MultOneReport {
  bool ok = true;
  Rat ratio;              // |S(mu)| / dim_pi_prime(mu), constant over the sweep
  long checked = 0;
  std::string failure;
};

// Procedure: multiplicity_one_check
// Over all admissible mu with mu_j - delta <= mu_max: (i) the falling-product
// identity sum_s sgn(s) prod_j (z_j-1)...(z_j-s(j)+1) = prod_{j<k}(z_k - z_j)
// with z_j = mu_j - delta + 1, exactly; (ii) |S(mu)| / dim_pi_prime(mu) is the
// same rational for every mu in the sweep.
inline MultOneReport multiplicity_one_check(long l, long l_prime, long mu_max) {
  if (l < 1 || l > l_prime) throw std::domain_error("multiplicity_one_check: requires 1 <= l <= l'");
  const Rat delta = Rat(l_prime - l + 1) / 2;
  MultOneReport rep;
  bool have_ratio = false;
  // Enumerate strictly decreasing nonnegative integer offsets t_1 > ... > t_l.
  std::vector<long> t(l);
  std::function<void(long, long)> sweep = [&](long pos, long hi) {
    if (!rep.ok) return;
    if (pos == l) {
      std::vector<Rat> entries, z;
      for (long j = 0; j < l; ++j) {
        entries.push_back(delta + t[j]);
        z.push_back(delta + t[j] - delta + 1);  // mu_j - delta + 1
      }
      const HCParam mu(entries);
      if (falling_product_sum(z) != vandermonde_det(z)) {
        rep.ok = false;
        rep.failure = "falling-product identity failed";
        return;
      }
      Rat s = T_at_zero_skew_sum(mu, l, l_prime);
      if (s < 0) s = -s;
      const Rat ratio = s / dim_pi_prime(mu, l, l_prime);
      if (!have_ratio) {
        rep.ratio = ratio;
        have_ratio = true;
      } else if (ratio != rep.ratio) {
        rep.ok = false;
        rep.failure = "|S(mu)| / dim ratio not constant";
        return;
      }
      ++rep.checked;
      return;
    }
    for (long v = hi; v >= l - 1 - pos; --v) {
      t[pos] = v;
      sweep(pos + 1, v - 1);
    }
  };
  sweep(0, mu_max);
  return rep;
}

struct ToyDistribution {
  Rat delta_coeff;
  Rat lebesgue_coeff;
};

// Procedure: o1_sp_toy
// T(Theta-check_{Pi+-}) = (1/4) sum over the four-element preimage of O_1 in
// the metaplectic-style cover with C(-1,-1) = 2^{2n}:
//   elements (1, +-1) and (-1, +- i^n 2^{-n});
//   (1, xi)^{-1} = (1, xi), (-1, eta)^{-1} = (-1, eta^{-1} 2^{-2n});
//   Theta_{Pi+-}(g, eta) = (+-1 at g = -1) |eta|^{-1} eta;
//   T((1, xi)) = xi delta_0, T((-1, xi)) = xi dw.
// The exact result is (1/2) delta_0 +- 2^{-n-1} dw.
inline ToyDistribution o1_sp_toy(long n, int sign) {
  if (n < 1) throw std::domain_error("o1_sp_toy: n must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("o1_sp_toy: sign must be +-1");
  // Exact Gaussian-rational arithmetic: value = re + im*i.
  struct GR {
    Rat re, im;
    GR operator*(const GR& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  };
  const auto ipow = [](long k) -> GR {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  };
  GR delta_sum{0, 0}, leb_sum{0, 0};
  for (int eps : {1, -1}) {
    // (1, eps): self-inverse; Theta(1, eps) = eps; T = eps delta_0.
    GR contrib{Rat(eps) * Rat(eps), 0};
    delta_sum.re += contrib.re;
    delta_sum.im += contrib.im;
    // (-1, eta) with eta = eps i^n 2^{-n}; inverse has eta_inv = eps i^{-n} 2^{-n};
    // Theta_{Pi+-}((-1, eta)^{-1}) = (+-1) eps i^{-n}; T((-1, eta)) = eps i^n 2^{-n} dw.
    GR theta = ipow(-n);
    theta.re *= Rat(eps) * sign;
    theta.im *= Rat(eps) * sign;
    GR tcoeff = ipow(n);
    tcoeff.re *= Rat(eps) * pow2(-n);
    tcoeff.im *= Rat(eps) * pow2(-n);
    GR term = theta * tcoeff;
    leb_sum.re += term.re;
    leb_sum.im += term.im;
  }
  if (delta_sum.im != 0 || leb_sum.im != 0)
    throw std::logic_error("o1_sp_toy: nonreal coefficient");
  return {delta_sum.re / 4, leb_sum.re / 4};
}

}  // namespace howe
