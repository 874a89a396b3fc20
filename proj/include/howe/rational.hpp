// rational.hpp - exact rational arithmetic helpers on top of GMP's mpq_class.
//
// Rat is always stored reduced with positive denominator (mpq_class guarantees
// this after canonicalize(), which the gmpxx operators maintain).

#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace howe {

using Rat = mpq_class;

// Procedure: rat_from_long
inline Rat rat_from_long(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// Procedure: is_integer
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Procedure: to_long
// Exact conversion; throws if r is not an integer that fits in a long.
inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("to_long: not an integer");
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("to_long: overflow");
  return r.get_num().get_si();
}

// Procedure: factorial
inline Rat factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

// Procedure: binomial
inline Rat binomial(long n, long k) {
  if (k < 0) return 0;
  // Generalized binomial C(n,k) = n(n-1)...(n-k+1)/k!, n may be negative.
  Rat num = 1;
  for (long j = 0; j < k; ++j) num *= Rat(n - j);
  return num / factorial(k);
}

// Procedure: rising_product
// a(a+1)...(a+k-1); empty product (k <= 0) is 1.
inline Rat rising_product(const Rat& a, long k) {
  Rat p = 1;
  for (long j = 0; j < k; ++j) p *= (a + j);
  return p;
}

// Procedure: pow2
// Exact 2^e for any integer e.
inline Rat pow2(long e) {
  mpz_class p = 1;
  p <<= static_cast<unsigned long>(e >= 0 ? e : -e);
  return e >= 0 ? Rat(p) : Rat(1, p);
}

// Procedure: rat_pow
inline Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
    Rat inv = Rat(base.get_den()) / Rat(base.get_num());
    return rat_pow(inv, -e);
  }
  Rat p = 1, b = base;
  long n = e;
  while (n > 0) {
    if (n & 1) p *= b;
    b *= b;
    n >>= 1;
  }
  return p;
}

// Procedure: rat_to_string
// Serializes as "p/q", or "p" when q = 1.
inline std::string rat_to_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Procedure: rat_from_string
inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad input: " + s);
  r.canonicalize();
  return r;
}

}  // namespace howe
