// root_data.hpp - descriptors for the compact dual pairs (O_d, Sp_{2l'}(R)),
// (U_d, U_{p,q}), (Sp_d, O*_{2d'}) and their root-system data: the constants
// r, iota, delta, beta; rho vectors; products of positive roots as exact
// multivariate polynomials; Weyl groups, denominators, characters and
// dimension formulas.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "howe/multipoly.hpp"
#include "howe/rational.hpp"
#include "howe/scalar_algebra.hpp"
#include "howe/signed_permutation.hpp"

namespace howe {

enum class Algebra { R, C, H };
enum class GFamily { O_even, O_odd, U, Sp };

struct DualPair {
  Algebra algebra = Algebra::R;
  GFamily g_family = GFamily::O_even;
  long d = 1;        // G = O_d, U_d or Sp_d
  long d_prime = 1;  // dim of V_1 over the division algebra
  long p = 0, q = 0; // signature of U_{p,q} (C only, p <= q)
  // Derived constants.
  long l = 0;        // rank of g
  long l_prime = 0;  // rank of g'
  Rat r, iota, delta, beta_pi_multiple;
};

// Procedure: make_dual_pair
// Builds the descriptor and all derived constants; validates consistency.
inline DualPair make_dual_pair(Algebra alg, GFamily fam, long d, long d_prime, long p = 0,
                               long q = 0) {
  DualPair pr;
  pr.algebra = alg;
  pr.g_family = fam;
  pr.d = d;
  pr.d_prime = d_prime;
  if (d < 1 || d_prime < 1) throw std::invalid_argument("make_dual_pair: d, d' must be positive");
  switch (alg) {
    case Algebra::R:
      if (fam != GFamily::O_even && fam != GFamily::O_odd)
        throw std::invalid_argument("make_dual_pair: R requires an orthogonal family");
      if ((fam == GFamily::O_even) != (d % 2 == 0))
        throw std::invalid_argument("make_dual_pair: parity of d vs family");
      if (d_prime % 2 != 0) throw std::invalid_argument("make_dual_pair: d' must be even over R");
      pr.l = d / 2;
      pr.l_prime = d_prime / 2;
      pr.r = d - 1;
      pr.iota = 1;
      break;
    case Algebra::C:
      if (fam != GFamily::U) throw std::invalid_argument("make_dual_pair: C requires U family");
      if (p + q != d_prime || p < 0 || p > q)
        throw std::invalid_argument("make_dual_pair: signature must satisfy p+q = d', 0 <= p <= q");
      pr.p = p;
      pr.q = q;
      pr.l = d;
      pr.l_prime = d_prime;
      pr.r = d;
      pr.iota = 1;
      break;
    case Algebra::H:
      if (fam != GFamily::Sp) throw std::invalid_argument("make_dual_pair: H requires Sp family");
      pr.l = d;
      pr.l_prime = d_prime;
      pr.r = Rat(2 * d + 1) / 2;
      pr.iota = Rat(1) / 2;
      break;
  }
  pr.delta = (Rat(pr.d_prime) - pr.r + pr.iota) / (2 * pr.iota);
  pr.beta_pi_multiple = 1 / pr.iota;
  return pr;
}

struct HCParam {
  std::vector<Rat> entries;  // strictly decreasing
  explicit HCParam(std::vector<Rat> e) : entries(std::move(e)) {
    for (size_t j = 1; j < entries.size(); ++j)
      if (!(entries[j - 1] > entries[j]))
        throw std::invalid_argument("HCParam: entries must be strictly decreasing");
  }
};

struct HighestWeight {
  std::vector<Rat> entries;  // weakly decreasing, integer steps
  explicit HighestWeight(std::vector<Rat> e) : entries(std::move(e)) {
    for (size_t j = 1; j < entries.size(); ++j) {
      Rat step = entries[j - 1] - entries[j];
      if (step < 0 || !is_integer(step))
        throw std::invalid_argument("HighestWeight: steps must be nonnegative integers");
    }
  }
};

// Procedure: rho
// Half the sum of positive roots of the compact member, coordinate form.
inline std::vector<Rat> rho(const DualPair& pr) {
  std::vector<Rat> v;
  for (long j = 1; j <= pr.l; ++j) {
    switch (pr.algebra) {
      case Algebra::R: v.push_back(Rat(pr.d) / 2 - j); break;
      case Algebra::C: v.push_back(Rat(pr.d + 1) / 2 - j); break;
      case Algebra::H: v.push_back(Rat(pr.d + 1 - j)); break;
    }
  }
  return v;
}

// Procedure: rho_doubleprime
// The rho vector of u_{l'-l}: entries (l'-l+1-2j')/2, j' = 1..l'-l.
inline std::vector<Rat> rho_doubleprime(long l, long l_prime) {
  if (l >= l_prime) throw std::domain_error("rho_doubleprime: requires l < l'");
  std::vector<Rat> v;
  for (long j = 1; j <= l_prime - l; ++j) v.push_back(Rat(l_prime - l + 1 - 2 * j) / 2);
  return v;
}

namespace detail {
// i*y_j, -i*y_j, 2i*y_j, -y_j^2 + y_k^2, -y_j + y_k as MultiPoly factors.
inline MultiPoly i_y(int n, int j, int ipow, const Rat& c) {
  return MultiPoly::variable(n, j, PiScalar(c, 0, ipow));
}
inline MultiPoly pair_sq(int n, int j, int k) {
  std::vector<int> ej(n, 0), ek(n, 0);
  ej[j] = 2;
  ek[k] = 2;
  return MultiPoly::monomial(n, ej, PiScalar(Rat(-1))) + MultiPoly::monomial(n, ek, PiScalar(Rat(1)));
}
inline MultiPoly pair_lin(int n, int j, int k, int ipow) {
  return MultiPoly::variable(n, j, PiScalar(Rat(-1), 0, ipow)) +
         MultiPoly::variable(n, k, PiScalar(Rat(1), 0, ipow));
}
inline MultiPoly pow_poly(MultiPoly base, long e) {
  MultiPoly r = MultiPoly::constant(base.nvars, PiScalar(Rat(1)));
  for (long t = 0; t < e; ++t) r = r * base;
  return r;
}
}  // namespace detail

// Procedure: pi_g_h
// Product of positive roots of the compact member, as a polynomial in the
// Cartan coordinates y_1..y_l (i-powers carried in the coefficients):
//   u_d:       prod_{j<k} i(-y_j + y_k)
//   sp_d:      prod_{j<k} (-y_j^2 + y_k^2) * prod_j 2i y_j
//   so_{2l}:   prod_{j<k} (-y_j^2 + y_k^2)
//   so_{2l+1}: prod_{j<k} (-y_j^2 + y_k^2) * prod_j i y_j
inline MultiPoly pi_g_h(const DualPair& pr) {
  const int n = static_cast<int>(pr.l);
  MultiPoly prod = MultiPoly::constant(n, PiScalar(Rat(1)));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      prod = prod * (pr.algebra == Algebra::C ? detail::pair_lin(n, j, k, 1)
                                              : detail::pair_sq(n, j, k));
  if (pr.algebra == Algebra::H)
    for (int j = 0; j < n; ++j) prod = prod * detail::i_y(n, j, 1, Rat(2));
  if (pr.g_family == GFamily::O_odd)
    for (int j = 0; j < n; ++j) prod = prod * detail::i_y(n, j, 1, Rat(1));
  return prod;
}

// Procedure: pi_gprime_zprime
// Product of positive roots of g'/z' (the l <= l' regime), in the same
// coordinates, including the (d'-d)-power factors:
//   u:         prod_{j<k} i(-y_j + y_k) * prod_j (-i y_j)^{d'-d}
//   sp/o*:     prod_{j<k} (-y_j^2 + y_k^2) * prod_j (-y_j^2)^{d'-d}
//   so_{2l}:   prod_{j<k} (-y_j^2 + y_k^2) * prod_j 2i y_j * (i y_j)^{d'-d}
//   so_{2l+1}: prod_{j<k} (-y_j^2 + y_k^2) * prod_j 2i y_j * (i y_j)^{d'-d+1}
inline MultiPoly pi_gprime_zprime(const DualPair& pr) {
  if (pr.l > pr.l_prime) throw std::domain_error("pi_gprime_zprime: requires l <= l'");
  const int n = static_cast<int>(pr.l);
  const long dd = pr.d_prime - pr.d;
  MultiPoly prod = MultiPoly::constant(n, PiScalar(Rat(1)));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      prod = prod * (pr.algebra == Algebra::C ? detail::pair_lin(n, j, k, 1)
                                              : detail::pair_sq(n, j, k));
  for (int j = 0; j < n; ++j) {
    switch (pr.algebra) {
      case Algebra::C:
        prod = prod * detail::pow_poly(detail::i_y(n, j, 3, Rat(1)), dd);  // (-i y_j)^{d'-d}
        break;
      case Algebra::H: {
        std::vector<int> e(n, 0);
        e[j] = 2;
        prod = prod * detail::pow_poly(MultiPoly::monomial(n, e, PiScalar(Rat(-1))), dd);
        break;
      }
      case Algebra::R: {
        const long extra = (pr.g_family == GFamily::O_odd) ? dd + 1 : dd;
        prod = prod * detail::i_y(n, j, 1, Rat(2)) *
               detail::pow_poly(detail::i_y(n, j, 1, Rat(1)), extra);
        break;
      }
    }
  }
  return prod;
}

// Procedure: pi_gprime_hprime
// l >= l' regime: product of positive roots of g' in l' coordinates.
//   u: prod i(-y_j+y_k); o*: prod (-y_j^2+y_k^2); sp(R): same * prod 2i y_j.
inline MultiPoly pi_gprime_hprime(const DualPair& pr) {
  if (pr.l < pr.l_prime) throw std::domain_error("pi_gprime_hprime: requires l >= l'");
  const int n = static_cast<int>(pr.l_prime);
  MultiPoly prod = MultiPoly::constant(n, PiScalar(Rat(1)));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      prod = prod * (pr.algebra == Algebra::C ? detail::pair_lin(n, j, k, 1)
                                              : detail::pair_sq(n, j, k));
  if (pr.algebra == Algebra::R)
    for (int j = 0; j < n; ++j) prod = prod * detail::i_y(n, j, 1, Rat(2));
  return prod;
}

// Procedure: pi_g_z
// l >= l' regime: product of positive roots of g/z in l' coordinates.
//   u:         prod i(-y_j+y_k) * prod (-i y_j)^{d-d'}
//   sp_d:      prod (-y_j^2+y_k^2) * prod 2i y_j * (-y_j^2)^{d-d'}
//   so_{2l}:   prod (-y_j^2+y_k^2) * prod (i y_j)^{d-d'}
//   so_{2l+1}: prod (-y_j^2+y_k^2) * prod (i y_j)^{d-d'+1}
inline MultiPoly pi_g_z(const DualPair& pr) {
  if (pr.l < pr.l_prime) throw std::domain_error("pi_g_z: requires l >= l'");
  const int n = static_cast<int>(pr.l_prime);
  const long dd = pr.d - pr.d_prime;
  MultiPoly prod = MultiPoly::constant(n, PiScalar(Rat(1)));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      prod = prod * (pr.algebra == Algebra::C ? detail::pair_lin(n, j, k, 1)
                                              : detail::pair_sq(n, j, k));
  for (int j = 0; j < n; ++j) {
    switch (pr.algebra) {
      case Algebra::C:
        prod = prod * detail::pow_poly(detail::i_y(n, j, 3, Rat(1)), dd);
        break;
      case Algebra::H: {
        std::vector<int> e(n, 0);
        e[j] = 2;
        prod = prod * detail::i_y(n, j, 1, Rat(2)) *
               detail::pow_poly(MultiPoly::monomial(n, e, PiScalar(Rat(-1))), dd);
        break;
      }
      case Algebra::R: {
        const long extra = (pr.g_family == GFamily::O_odd) ? dd + 1 : dd;
        prod = prod * detail::pow_poly(detail::i_y(n, j, 1, Rat(1)), extra);
        break;
      }
    }
  }
  return prod;
}

// Procedure: substitute_squares
// y_j -> delta_j w_j^2, used to compare products of roots on s_0 with those on
// g and g'/z'.
inline MultiPoly substitute_squares(const MultiPoly& poly, const std::vector<int>& deltas) {
  MultiPoly r(poly.nvars);
  for (const auto& [e, c] : poly.terms) {
    std::vector<int> ne(poly.nvars);
    PiScalar nc = c;
    for (int j = 0; j < poly.nvars; ++j) {
      ne[j] = 2 * e[j];
      if (deltas[j] < 0 && (e[j] & 1)) nc = -nc;
    }
    r.add_term(ne, nc);
  }
  return r;
}

// Procedure: pi_s0_h2
// pi_{s0/h1^2}(w^2) = pi_{g/h}(tau(w)) * pi_{g'/z'}(tau'(w)) after the exact
// substitution y_j = delta_j w_j^2.
inline MultiPoly pi_s0_h2(const DualPair& pr, const std::vector<int>& deltas) {
  return substitute_squares(pi_g_h(pr) * pi_gprime_zprime(pr), deltas);
}

// Procedure: weyl_group
// Sigma_l for the unitary family; Sigma_l x {+-1}^l otherwise.
inline std::vector<SignedPermutation> weyl_group(const DualPair& pr) {
  const int l = static_cast<int>(pr.l);
  return pr.algebra == Algebra::C ? symmetric_group(l) : hyperoctahedral_group(l);
}

// Procedure: positive_roots
// Positive roots of the compact member in the dominant-decreasing convention
// (so that <rho, alpha> > 0): U: e_j - e_k (j<k); O_{2l}: e_j +- e_k;
// O_{2l+1}: additionally e_j; Sp: e_j +- e_k and 2 e_j.
inline std::vector<std::vector<Rat>> positive_roots(const DualPair& pr) {
  const long l = pr.l;
  std::vector<std::vector<Rat>> roots;
  auto root = [&](long j, long k, int sk) {
    std::vector<Rat> a(l, Rat(0));
    a[j] = 1;
    if (k >= 0) a[k] += sk;
    return a;
  };
  for (long j = 0; j < l; ++j)
    for (long k = j + 1; k < l; ++k) {
      roots.push_back(root(j, k, -1));
      if (pr.algebra != Algebra::C) roots.push_back(root(j, k, 1));
    }
  if (pr.g_family == GFamily::O_odd)
    for (long j = 0; j < l; ++j) roots.push_back(root(j, -1, 0));
  if (pr.algebra == Algebra::H)
    for (long j = 0; j < l; ++j) {
      auto a = root(j, -1, 0);
      a[j] = 2;
      roots.push_back(a);
    }
  return roots;
}

// Procedure: weyl_denominator
// Delta(h) = xi_rho(h) prod_{alpha>0} (1 - xi_{-alpha}(h)) at the torus point
// with angles theta_j = pi * angle_j.
inline std::complex<double> weyl_denominator(const DualPair& pr,
                                             const std::vector<Rat>& torus_angles) {
  if (static_cast<long>(torus_angles.size()) != pr.l)
    throw std::invalid_argument("weyl_denominator: wrong number of angles");
  std::vector<double> th(pr.l);
  for (long j = 0; j < pr.l; ++j) th[j] = M_PI * torus_angles[j].get_d();
  auto xi = [&](const std::vector<Rat>& mu) {
    double phase = 0;
    for (long j = 0; j < pr.l; ++j) phase += mu[j].get_d() * th[j];
    return std::polar(1.0, phase);
  };
  std::complex<double> v = xi(rho(pr));
  for (const auto& alpha : positive_roots(pr)) {
    std::vector<Rat> neg(alpha);
    for (auto& x : neg) x = -x;
    v *= (1.0 - xi(neg));
  }
  return v;
}

// Procedure: weyl_character
// Sigma_s sgn_{g/h}(s) xi_{s mu}(h) / Delta(h), mu = lambda + rho.
inline std::complex<double> weyl_character(const HighestWeight& lambda, const DualPair& pr,
                                           const std::vector<Rat>& torus_angles) {
  if (static_cast<long>(lambda.entries.size()) != pr.l)
    throw std::invalid_argument("weyl_character: wrong rank");
  const std::complex<double> den = weyl_denominator(pr, torus_angles);
  if (std::abs(den) < 1e-12) throw std::runtime_error("weyl_character: denominator too small");
  std::vector<double> th(pr.l);
  for (long j = 0; j < pr.l; ++j) th[j] = M_PI * torus_angles[j].get_d();
  std::vector<Rat> mu = rho(pr);
  for (long j = 0; j < pr.l; ++j) mu[j] += lambda.entries[j];
  const MultiPoly skew_ref = pi_g_h(pr);
  std::complex<double> num = 0;
  for (const auto& s : weyl_group(pr)) {
    const int sgn = group_sign_on(skew_ref, s);
    const std::vector<Rat> smu = s.apply(mu);
    double phase = 0;
    for (long j = 0; j < pr.l; ++j) phase += smu[j].get_d() * th[j];
    num += double(sgn) * std::polar(1.0, phase);
  }
  return num / den;
}

// Procedure: weyl_dimension
// prod_{alpha>0} <lambda+rho, alpha> / <rho, alpha>.
inline Rat weyl_dimension(const HighestWeight& lambda, const DualPair& pr) {
  if (static_cast<long>(lambda.entries.size()) != pr.l)
    throw std::invalid_argument("weyl_dimension: wrong rank");
  std::vector<Rat> mu = rho(pr);
  std::vector<Rat> rh = mu;
  for (long j = 0; j < pr.l; ++j) mu[j] += lambda.entries[j];
  Rat dim = 1;
  for (const auto& alpha : positive_roots(pr)) {
    Rat num = 0, den = 0;
    for (long j = 0; j < pr.l; ++j) {
      num += mu[j] * alpha[j];
      den += rh[j] * alpha[j];
    }
    dim *= num / den;
  }
  return dim;
}

// Procedure: dim_pi_prime
// [1/prod_{j=1}^{l}(l'-j)!] * prod_j (delta+mu_j-1)!/(mu_j-delta)!
//   * prod_{j<k}(mu_j - mu_k), with delta = (l'-l+1)/2 of the unitary
// companion pair; requires mu_j - delta to be nonnegative integers.
inline Rat dim_pi_prime(const HCParam& mu, long l, long l_prime) {
  if (static_cast<long>(mu.entries.size()) != l)
    throw std::invalid_argument("dim_pi_prime: wrong rank");
  const Rat delta = Rat(l_prime - l + 1) / 2;
  Rat dim = 1;
  for (long j = 1; j <= l; ++j) dim /= factorial(l_prime - j);
  for (const auto& m : mu.entries) {
    const Rat lo = m - delta, hi = delta + m - 1;
    if (!is_integer(lo) || lo < 0)
      throw std::domain_error("dim_pi_prime: mu_j - delta must be a nonnegative integer");
    dim *= factorial(to_long(hi)) / factorial(to_long(lo));
  }
  for (size_t j = 0; j < mu.entries.size(); ++j)
    for (size_t k = j + 1; k < mu.entries.size(); ++k) dim *= (mu.entries[j] - mu.entries[k]);
  return dim;
}

// Procedure: dim_g / dim_gprime / dim_W
inline long dim_g(const DualPair& pr) {
  switch (pr.algebra) {
    case Algebra::R: return pr.d * (pr.d - 1) / 2;
    case Algebra::C: return pr.d * pr.d;
    case Algebra::H: return pr.d * (2 * pr.d + 1);
  }
  throw std::logic_error("dim_g");
}
inline long dim_gprime(const DualPair& pr) {
  switch (pr.algebra) {
    case Algebra::R: return pr.l_prime * (2 * pr.l_prime + 1);  // sp_{2l'}(R)
    case Algebra::C: return pr.d_prime * pr.d_prime;            // u_{p,q}
    case Algebra::H: return pr.d_prime * (2 * pr.d_prime - 1);  // o*_{2d'}
  }
  throw std::logic_error("dim_gprime");
}
inline long dim_W(const DualPair& pr) {
  const long dimD = pr.algebra == Algebra::R ? 1 : pr.algebra == Algebra::C ? 2 : 4;
  return pr.d * pr.d_prime * dimD;
}

// Procedure: degree_relation_check
// Asserts max_j deg_{y_j} pi_{g/h} = (r-1)/iota exactly; throws on failure.
inline void degree_relation_check(const DualPair& pr) {
  const MultiPoly p = pi_g_h(pr);
  int deg = 0;
  for (int j = 0; j < p.nvars; ++j) deg = std::max(deg, p.max_degree_in(j));
  const Rat expected = (pr.r - 1) / pr.iota;
  if (Rat(deg) != expected) throw std::logic_error("degree_relation_check failed");
}

// Procedure: dimension_identity_check
// Asserts dim W = dim g + dim g'/z' + dim h + dim s1(V^0) exactly, where
// z' = u_1^l x (same family at rank l'-l), dim h = l, and dim s1(V^0) is
// 2(l'-l) for odd orthogonal G with d < d' and zero otherwise.
inline void dimension_identity_check(const DualPair& pr) {
  if (pr.d > pr.d_prime) throw std::domain_error("dimension_identity_check: requires d <= d'");
  const long k = pr.l_prime - pr.l;
  long dim_small = 0;  // same-family algebra at rank l'-l
  switch (pr.algebra) {
    case Algebra::R: dim_small = k * (2 * k + 1); break;
    case Algebra::C: dim_small = k * k; break;
    case Algebra::H: dim_small = k * (2 * k - 1); break;
  }
  const long dim_zprime = pr.l + dim_small;
  const long dim_s1 =
      (pr.g_family == GFamily::O_odd && pr.d < pr.d_prime) ? 2 * (pr.l_prime - pr.l) : 0;
  const long lhs = dim_W(pr);
  const long rhs = dim_g(pr) + (dim_gprime(pr) - dim_zprime) + pr.l + dim_s1;
  if (lhs != rhs) throw std::logic_error("dimension_identity_check failed");
}

}  // namespace howe
