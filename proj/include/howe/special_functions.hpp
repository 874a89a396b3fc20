// special_functions.hpp - the polynomial family P_{a,b,2}, P_{a,b,-2}, Q_{a,b}
// and the distributional Fourier transform of (1+iy)^{-a} (1-iy)^{-b}:
//
//   F[(1+iy)^{-a}(1-iy)^{-b}](xi)
//     = 2*pi * ( P_{a,b,2}(xi) e^{-xi} [xi>0] + P_{a,b,-2}(xi) e^{xi} [xi<0] )
//       + 2*pi * Q_{a,b}(-d/dxi) delta_0 ,
// with the Fourier convention F[f](xi) = int f(y) e^{-i y xi} dy.
//
// The 2*pi prefactor is carried separately as a PiScalar; Q is a polynomial in
// the variable t = iy, and its delta part pairs with a test function psi as
// sum_k q_k psi^{(k)}(0).

#pragma once

#include <cmath>
#include <stdexcept>

#include "howe/pi_scalar.hpp"
#include "howe/rational.hpp"
#include "howe/unipoly.hpp"

namespace howe {

struct ExponentPair {
  long a = 0;
  long b = 0;
};

struct LinePolyDistribution {
  UniPoly plus_part;   // polynomial factor of e^{-xi} on xi > 0
  UniPoly minus_part;  // polynomial factor of e^{xi} on xi < 0
  UniPoly delta_part;  // coefficients of (-d/dxi)^k delta_0, variable t = iy
  PiScalar overall;    // the 2*pi prefactor
};

// Procedure: poly_P2
// P_{a,b,2}(xi) = sum_{k=0}^{b-1} [a(a+1)...(a+k-1) / (k!(b-1-k)!)] 2^{-a-k} xi^{b-1-k}
// for b >= 1, zero otherwise.
inline UniPoly poly_P2(const ExponentPair& e) {
  if (e.b < 1) return {};
  UniPoly p;
  p.c.assign(static_cast<size_t>(e.b), Rat(0));
  for (long k = 0; k <= e.b - 1; ++k)
    p.c[e.b - 1 - k] = rising_product(Rat(e.a), k) / (factorial(k) * factorial(e.b - 1 - k)) *
                       pow2(-e.a - k);
  p.trim();
  return p;
}

// Procedure: poly_Pm2
// P_{a,b,-2}(xi) = (-1)^{a+b-1} sum_{k=0}^{a-1} [b(b+1)...(b+k-1) / (k!(a-1-k)!)]
//                  (-2)^{-b-k} xi^{a-1-k}   for a >= 1, zero otherwise.
inline UniPoly poly_Pm2(const ExponentPair& e) {
  if (e.a < 1) return {};
  UniPoly p;
  p.c.assign(static_cast<size_t>(e.a), Rat(0));
  const Rat sign = ((e.a + e.b - 1) % 2 == 0) ? 1 : -1;
  for (long k = 0; k <= e.a - 1; ++k) {
    Rat m2pow = pow2(-e.b - k);
    if ((e.b + k) % 2 != 0) m2pow = -m2pow;  // (-2)^{-b-k}
    p.c[e.a - 1 - k] =
        sign * rising_product(Rat(e.b), k) / (factorial(k) * factorial(e.a - 1 - k)) * m2pow;
  }
  p.trim();
  return p;
}

// Procedure: binomial_expand
// (1 + s*t)^n as a polynomial in t, for n >= 0.
inline UniPoly binomial_expand(long n, const Rat& s) {
  UniPoly p;
  for (long k = 0; k <= n; ++k) p.c.push_back(binomial(n, k) * rat_pow(s, k));
  p.trim();
  return p;
}

// Procedure: poly_Q
// Q_{a,b} as a polynomial in t = iy, without the 2*pi prefactor (which is
// carried as LinePolyDistribution::overall).  Branches:
//   0                                                         if a+b >= 1,
//   sum_{k=b}^{-a} [a...(a+k-1)/k!] 2^{-a-k} (1-t)^{k-b}      if -a > b-1 >= 0,
//   sum_{k=a}^{-b} [b...(b+k-1)/k!] 2^{-b-k} (1+t)^{k-a}      if -b > a-1 >= 0,
//   (1+t)^{-a} (1-t)^{-b}                                     if a <= 0, b <= 0.
inline UniPoly poly_Q(const ExponentPair& e) {
  const long a = e.a, b = e.b;
  if (a + b >= 1) return {};
  if (a <= 0 && b <= 0) return binomial_expand(-a, 1) * binomial_expand(-b, -1);
  if (-a > b - 1 && b >= 1) {
    UniPoly q;
    for (long k = b; k <= -a; ++k)
      q = q + (rising_product(Rat(a), k) / factorial(k) * pow2(-a - k)) * binomial_expand(k - b, -1);
    return q;
  }
  if (-b > a - 1 && a >= 1) {
    UniPoly q;
    for (long k = a; k <= -b; ++k)
      q = q + (rising_product(Rat(b), k) / factorial(k) * pow2(-b - k)) * binomial_expand(k - a, 1);
    return q;
  }
  throw std::logic_error("poly_Q: unreachable branch");
}

// Procedure: fourier_pair
inline LinePolyDistribution fourier_pair(const ExponentPair& e) {
  LinePolyDistribution d;
  d.plus_part = poly_P2(e);
  d.minus_part = poly_Pm2(e);
  d.delta_part = poly_Q(e);
  d.overall = PiScalar(Rat(2), 1, 0);  // 2*pi
  return d;
}

// Procedure: fourier_eval
// Numeric value of the smooth part of the transform at xi != 0.
inline double fourier_eval(const LinePolyDistribution& d, double xi) {
  const UniPoly& p = xi > 0 ? d.plus_part : d.minus_part;
  return d.overall.to_complex().real() * p.eval(xi) * std::exp(-std::abs(xi));
}

// Procedure: value_at_zero
// P_{a,b,branch}(0) from the defining sums.  (The printed closed form for the
// -2 branch has its sign off by one power of -1; the tests pin the corrected
// closed forms against these constant terms.)
inline Rat value_at_zero(const ExponentPair& e, int branch) {
  if (branch == 2) {
    if (e.b < 1) throw std::domain_error("value_at_zero: branch +2 needs b >= 1");
    return poly_P2(e).coeff(0);
  }
  if (branch == -2) {
    if (e.a < 1) throw std::domain_error("value_at_zero: branch -2 needs a >= 1");
    return poly_Pm2(e).coeff(0);
  }
  throw std::invalid_argument("value_at_zero: branch must be +-2");
}

// Procedure: shift_identity_check
// Exact verification of the multiplication identities (hypotheses: c >= 0,
// a+b+c = 1, and b >= 1 for the +2 branch resp. a >= 1 for the -2 branches):
//   P_{a,b,2}(xi) xi^c      = (b+c-1)! 2^c / (b-1)!        * P_{a+c,b+c,2}(xi)
//   P_{a,b,-2}(xi) xi^c     = (-1)^c (a+c-1)! 2^c / (a-1)! * P_{a+c,b+c,-2}(xi)
//   P_{a,b,-2}(xi) (-xi)^c  = (a+c-1)! 2^c / (a-1)!        * P_{a+c,b+c,-2}(xi)
// Throws on failure; returns normally on success.
inline void shift_identity_check(long a, long b, long c) {
  if (c < 0 || a + b + c != 1) throw std::domain_error("shift_identity_check: hypotheses");
  if (b >= 1) {
    UniPoly lhs = poly_P2({a, b}).shifted(c);
    UniPoly rhs = (factorial(b + c - 1) * pow2(c) / factorial(b - 1)) * poly_P2({a + c, b + c});
    if (lhs != rhs) throw std::logic_error("shift_identity_check: +2 branch failed");
  }
  if (a >= 1) {
    UniPoly lhs = poly_Pm2({a, b}).shifted(c);
    Rat k = factorial(a + c - 1) * pow2(c) / factorial(a - 1);
    UniPoly rhs = ((c % 2 == 0) ? k : -k) * poly_Pm2({a + c, b + c});
    if (lhs != rhs) throw std::logic_error("shift_identity_check: -2 branch failed");
    // (-xi)^c variant.
    UniPoly lhs2 = ((c % 2 == 0) ? Rat(1) : Rat(-1)) * poly_Pm2({a, b}).shifted(c);
    UniPoly rhs2 = k * poly_Pm2({a + c, b + c});
    if (lhs2 != rhs2) throw std::logic_error("shift_identity_check: reflected branch failed");
  }
}

// Procedure: derivative_identity_check
// P'_{a,b,2} = P_{a,b-1,2} and P'_{a,b,-2} = -P_{a-1,b,-2}, exactly.  (The
// minus sign comes from the (-1)^{a+b-1} prefactor in the -2 normalization,
// whose parity flips when a drops by one.)
inline void derivative_identity_check(long a, long b) {
  if (poly_P2({a, b}).derivative() != poly_P2({a, b - 1}))
    throw std::logic_error("derivative_identity_check: +2 branch failed");
  if (poly_Pm2({a, b}).derivative() != -poly_Pm2({a - 1, b}))
    throw std::logic_error("derivative_identity_check: -2 branch failed");
}

}  // namespace howe
