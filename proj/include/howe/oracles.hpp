// oracles.hpp - independent verification engines: oscillatory quadrature for
// the line Fourier pairs, the test-function pairing check, exact Selberg-type
// Gaussian integrals, the Fan determinant, the pairing partial(pi)(pi), and a
// semistandard-tableaux character oracle.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "howe/multipoly.hpp"
#include "howe/rational.hpp"
#include "howe/root_data.hpp"
#include "howe/scalar_algebra.hpp"
#include "howe/special_functions.hpp"
#include "howe/unipoly.hpp"

namespace howe {

struct QuadratureSpec {
  long a = 0, b = 0;
  Rat xi;
  double truncation = 30.0;
  double tol = 1e-9;
};

// Procedure: adaptive_simpson
// Standard adaptive Simpson with Richardson-style error control.
inline std::complex<double> adaptive_simpson(const std::function<std::complex<double>(double)>& f,
                                             double lo, double hi, double tol, int depth = 0) {
  const double mid = 0.5 * (lo + hi);
  const std::complex<double> fl = f(lo), fm = f(mid), fh = f(hi);
  std::function<std::complex<double>(double, double, std::complex<double>, std::complex<double>,
                                     std::complex<double>, std::complex<double>, double, int)>
      rec = [&](double x0, double x1, std::complex<double> f0, std::complex<double> f1,
                std::complex<double> f2, std::complex<double> whole, double eps,
                int d) -> std::complex<double> {
    const double xm = 0.5 * (x0 + x1), h = x1 - x0;
    const double xl = 0.5 * (x0 + xm), xr = 0.5 * (xm + x1);
    const std::complex<double> fL = f(xl), fR = f(xr);
    const std::complex<double> left = (h / 12.0) * (f0 + 4.0 * fL + f1);
    const std::complex<double> right = (h / 12.0) * (f1 + 4.0 * fR + f2);
    if (d > 48) return left + right;
    if (std::abs(left + right - whole) < 15.0 * eps && d > 4)
      return left + right + (left + right - whole) / 15.0;
    return rec(x0, xm, f0, fL, f1, left, eps / 2, d + 1) +
           rec(xm, x1, f1, fR, f2, right, eps / 2, d + 1);
  };
  const std::complex<double> whole = ((hi - lo) / 6.0) * (fl + 4.0 * fm + fh);
  return rec(lo, hi, fl, fm, fh, whole, tol, depth);
}

namespace detail {
// (1 + iy)^{-a} (1 - iy)^{-b} at a complex point y.
inline std::complex<double> line_symbol(long a, long b, std::complex<double> y) {
  const std::complex<double> I(0, 1);
  return std::pow(1.0 + I * y, static_cast<double>(-a)) *
         std::pow(1.0 - I * y, static_cast<double>(-b));
}
}  // namespace detail

// Procedure: quad_fourier
// Numerical value of int (1+iy)^{-a} (1-iy)^{-b} e^{-i y xi} dy for a+b >= 1.
// The integrand is conjugate-symmetric, so the value is 2 Re of the half-line
// integral; the [Y, inf) tail is computed by rotating the contour into the
// half-plane where e^{-i xi y} decays (the integrand is pole-free there for
// Y > 0), turning the tail into a non-oscillatory exponentially damped
// integral.  At xi = 0 (needs a+b >= 2) the tail is summed from the exact
// Laurent expansion of the symbol instead.
inline double quad_fourier(long a, long b, const Rat& xi_rat) {
  if (a + b < 1) throw std::domain_error("quad_fourier: requires a + b >= 1");
  const double xi = xi_rat.get_d();
  const double Y = 30.0;
  const std::complex<double> I(0, 1);
  const auto f = [&](std::complex<double> y) {
    return detail::line_symbol(a, b, y) * std::exp(-I * xi * y);
  };
  const std::complex<double> central =
      adaptive_simpson([&](double y) { return f(y); }, 0.0, Y, 1e-10);
  std::complex<double> tail;
  if (xi_rat != 0) {
    // Rotate: for xi > 0 the ray y = Y - i s, for xi < 0 the ray y = Y + i s.
    const double dir = xi > 0 ? -1.0 : 1.0;
    const double S = 40.0 / std::abs(xi);
    tail = dir * I *
           adaptive_simpson([&](double s) { return f(Y + dir * I * s); }, 0.0, S, 1e-10);
  } else {
    if (a + b < 2) throw std::domain_error("quad_fourier: xi = 0 requires a + b >= 2");
    // Symbol = (-1)^b sum_m d_m (iy)^{-a-b-m}, sum_m d_m u^m = (1+u)^{-a}(1-u)^{-b}.
    const int M = 40;
    std::vector<Rat> d(M + 1, Rat(0));
    {
      std::vector<Rat> pa(M + 1), pb(M + 1);
      // (1+u)^{-a}: C(-a, m); (1-u)^{-b}: (-1)^m C(-b, m).
      for (int m = 0; m <= M; ++m) {
        pa[m] = binomial(-a, m);
        pb[m] = Rat(m % 2 ? -1 : 1) * binomial(-b, m);
      }
      for (int m = 0; m <= M; ++m)
        for (int k = 0; k <= m; ++k) d[m] += pa[k] * pb[m - k];
    }
    tail = 0;
    for (int m = 0; m <= M; ++m) {
      const long n = a + b + m;
      if (n < 2) continue;  // conditionally convergent order cannot occur here
      const std::complex<double> ipow = std::pow(I, static_cast<double>(-n));
      double sgn = (b % 2) ? -1.0 : 1.0;
      tail += sgn * d[m].get_d() * ipow * std::pow(Y, 1.0 - n) / (n - 1.0);
    }
  }
  return 2.0 * (central + tail).real();
}

// Procedure: fourier_expected
// The closed-form value of the same integral from the polynomial family, for
// xi != 0; at xi = 0 the average of the one-sided limits.
inline double fourier_expected(long a, long b, const Rat& xi_rat) {
  const LinePolyDistribution d = fourier_pair({a, b});
  const double two_pi = 2.0 * M_PI;
  if (xi_rat > 0) return two_pi * d.plus_part.eval(xi_rat.get_d()) * std::exp(-xi_rat.get_d());
  if (xi_rat < 0) return two_pi * d.minus_part.eval(xi_rat.get_d()) * std::exp(xi_rat.get_d());
  return M_PI * Rat(d.plus_part.coeff(0) + d.minus_part.coeff(0)).get_d();
}

// Procedure: gaussian_hermite_transform
// For psi(xi) = p(xi) e^{-xi^2}, its transform int psi(xi) e^{-i y xi} d xi is
// sqrt(pi) * r(y) e^{-y^2/4} with r obtained from p by the exact rule below;
// returns r as a complex-coefficient pair (real part poly, imag part poly).
// x^n e^{-x^2} contributes i^n p_n(y) with p_0 = 1, p_{n+1} = p_n' - (y/2) p_n.
inline std::pair<UniPoly, UniPoly> gaussian_hermite_transform(const UniPoly& p) {
  // Build i^n p_n for each monomial degree n and accumulate by i-parity.
  UniPoly re, im;
  UniPoly pn{Rat(1)};  // p_0
  for (long n = 0; n <= p.degree(); ++n) {
    if (p.coeff(n) != 0) {
      UniPoly contrib = p.coeff(n) * pn;
      switch (n % 4) {
        case 0: re = re + contrib; break;
        case 1: im = im + contrib; break;
        case 2: re = re - contrib; break;
        case 3: im = im - contrib; break;
      }
    }
    // p_{n+1} = p_n' - (y/2) p_n
    pn = pn.derivative() - (Rat(1) / 2) * pn.shifted(1);
  }
  return {re, im};
}

struct PairingReport {
  double lhs = 0, rhs = 0;
};

// Procedure: pair_with_test_function
// For a + b <= 0 and psi(xi) = xi^{c+1} e^{-xi^2} with c = -a-b, compares
//   LHS = int (1+iy)^{-a}(1-iy)^{-b} psihat(y) dy   (transform of psi)
//   RHS = 2 pi [ int_0^inf P_{a,b,2} e^{-xi} psi + int_{-inf}^0 P_{a,b,-2} e^{xi} psi
//               + sum_k q_k psi^{(k)}(0) ].
// An arbitrary polynomial part can be supplied to exercise the delta terms.
inline PairingReport pair_with_test_function(long a, long b, const UniPoly* psi_poly = nullptr) {
  if (a + b > 0) throw std::domain_error("pair_with_test_function: requires a + b <= 0");
  const long c = -a - b;
  UniPoly p;
  if (psi_poly) {
    p = *psi_poly;
  } else {
    p = UniPoly{Rat(1)}.shifted(c + 1);  // xi^{c+1}
  }
  const auto [re, im] = gaussian_hermite_transform(p);
  PairingReport rep;
  // LHS: the symbol is polynomial here (a, b <= 0 up to one factor), decay is
  // Gaussian; integrate on [-L, L].
  const double L = 30.0;
  const std::complex<double> I(0, 1);
  rep.lhs = std::sqrt(M_PI) *
            adaptive_simpson(
                [&](double y) {
                  const std::complex<double> r(re.eval(y), im.eval(y));
                  return detail::line_symbol(a, b, y) * r * std::exp(-y * y / 4.0);
                },
                -L, L, 1e-10)
                .real();
  // RHS smooth parts.
  const LinePolyDistribution d = fourier_pair({a, b});
  const double two_pi = 2.0 * M_PI;
  double rhs = 0;
  rhs += adaptive_simpson(
             [&](double xi) { return std::complex<double>(
                                  d.plus_part.eval(xi) * std::exp(-xi) * p.eval(xi) *
                                  std::exp(-xi * xi)); },
             0.0, L, 1e-10)
             .real();
  rhs += adaptive_simpson(
             [&](double xi) { return std::complex<double>(
                                  d.minus_part.eval(xi) * std::exp(xi) * p.eval(xi) *
                                  std::exp(-xi * xi)); },
             -L, 0.0, 1e-10)
             .real();
  // RHS delta part: psi^{(k)}(0) via symbolic differentiation of p e^{-xi^2}.
  UniPoly rk = p;
  for (long k = 0; k <= d.delta_part.degree(); ++k) {
    rhs += d.delta_part.coeff(k).get_d() * rk.coeff(0).get_d();
    rk = rk.derivative() - Rat(2) * rk.shifted(1);
  }
  rep.rhs = two_pi * rhs;
  return rep;
}

// Procedure: gaussian_selberg
// Exact value of int_{(R+)^l} prod_{j<k}(x_j-x_k)^2 prod_j x_j^{l'-l}
// e^{-sum x} dx by monomial expansion and int x^n e^{-x} = n!; asserted equal
// to prod_{k=0}^{l} k! * prod_{k=0}^{l-1} (k + l'-l)!.
inline Rat gaussian_selberg(long l, long l_prime) {
  if (l < 1 || l > l_prime) throw std::domain_error("gaussian_selberg: requires 1 <= l <= l'");
  MultiPoly sq = MultiPoly::constant(static_cast<int>(l), PiScalar(Rat(1)));
  for (int j = 0; j < l; ++j)
    for (int k = j + 1; k < l; ++k) {
      MultiPoly diff = MultiPoly::variable(l, j) - MultiPoly::variable(l, k);
      sq = sq * diff * diff;
    }
  Rat total = 0;
  for (const auto& [e, coeff] : sq.terms) {
    if (coeff.pi_power != 0 || coeff.i_power != 0)
      throw std::logic_error("gaussian_selberg: unexpected coefficient type");
    Rat term = coeff.coeff;
    for (int j = 0; j < l; ++j) term *= factorial(e[j] + l_prime - l);
    total += term;
  }
  Rat closed = 1;
  for (long k = 0; k <= l; ++k) closed *= factorial(k);
  for (long k = 0; k < l; ++k) closed *= factorial(k + l_prime - l);
  if (total != closed) throw std::logic_error("gaussian_selberg: closed form mismatch");
  return total;
}

// Procedure: fan_det
// det [ (a+j)(a+j+1)...(a+j+k-1) ]_{j,k=0..n-1}; independent of a and equal
// to prod_{k=1}^{n-1} k!.
inline Rat fan_det(const Rat& a, long n) {
  if (n < 2) throw std::domain_error("fan_det: requires n >= 2");
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (long j = 0; j < n; ++j)
    for (long k = 0; k < n; ++k) m[j][k] = rising_product(a + j, k);
  const Rat det = exact_det(m);
  Rat closed = 1;
  for (long k = 1; k < n; ++k) closed *= factorial(k);
  if (det != closed) throw std::logic_error("fan_det: closed form mismatch");
  return det;
}

// Procedure: partial_pi_pi
// The constant partial(pi)(pi) for pi = prod_{j<k}(x_k - x_j): the operator
// pi(d/dx) applied to pi.  Equals sum_alpha c_alpha^2 alpha! =
// prod_{k=0}^{l} k!.
inline Rat partial_pi_pi(long l) {
  MultiPoly pi = MultiPoly::constant(static_cast<int>(l), PiScalar(Rat(1)));
  for (int j = 0; j < l; ++j)
    for (int k = j + 1; k < l; ++k)
      pi = pi * (MultiPoly::variable(l, k) - MultiPoly::variable(l, j));
  Rat total = 0;
  for (const auto& [e, coeff] : pi.terms) {
    Rat term = coeff.coeff * coeff.coeff;
    for (int j = 0; j < l; ++j) term *= factorial(e[j]);
    total += term;
  }
  Rat closed = 1;
  for (long k = 0; k <= l; ++k) closed *= factorial(k);
  if (total != closed) throw std::logic_error("partial_pi_pi: closed form mismatch");
  return total;
}

struct Tableau {
  std::vector<long> shape;
  std::vector<std::vector<int>> rows;
};

// Procedure: schur_oracle
// Schur polynomial s_lambda(x_1..x_l) by semistandard tableau enumeration.
inline std::complex<double> schur_oracle(const HighestWeight& lambda,
                                         const std::vector<std::complex<double>>& x) {
  const int l = static_cast<int>(x.size());
  std::vector<long> shape;
  for (const auto& e : lambda.entries) {
    if (!is_integer(e) || e < 0)
      throw std::invalid_argument("schur_oracle: lambda must have nonnegative integer entries");
    shape.push_back(to_long(e));
  }
  std::complex<double> total = 0;
  // Fill cells in row-major order; entry bounds enforce semistandardness.
  std::vector<std::vector<int>> fill(shape.size());
  std::function<void(size_t, long)> rec = [&](size_t r, long c) {
    while (r < shape.size() && c >= shape[r]) {
      ++r;
      c = 0;
    }
    if (r == shape.size()) {
      std::complex<double> m = 1;
      for (const auto& row : fill)
        for (int v : row) m *= x[v];
      total += m;
      return;
    }
    const int lo = std::max(c > 0 ? fill[r][c - 1] : 0,            // weakly increasing rows
                            r > 0 ? fill[r - 1][c] + 1 : 0);       // strictly increasing cols
    for (int v = lo; v < l; ++v) {
      fill[r].push_back(v);
      rec(r, c + 1);
      fill[r].pop_back();
    }
  };
  rec(0, 0);
  return total;
}

}  // namespace howe
