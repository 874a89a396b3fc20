// pi_scalar.hpp - exact scalars of the form (rational) * pi^k * i^m.
//
// The i-power is kept mod 4.  Equality and addition canonicalize by folding
// i^2 = -1 into the rational coefficient, so two values equal as complex
// numbers compare equal.  Addition requires matching pi-power and i-parity
// (the sums arising here are always homogeneous in that sense).

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "howe/rational.hpp"

namespace howe {

struct PiScalar {
  Rat coeff = 0;
  long pi_power = 0;
  int i_power = 0;  // in {0,1,2,3}

  PiScalar() = default;
  PiScalar(Rat c, long pi = 0, long i = 0) : coeff(std::move(c)), pi_power(pi) {
    i_power = static_cast<int>(((i % 4) + 4) % 4);
    normalize();
  }
  PiScalar(long c) : PiScalar(Rat(c)) {}

  // Procedure: normalize
  // Canonical form: zero is (0,0,0); i-power is folded to {0,1}.
  void normalize() {
    if (coeff == 0) {
      pi_power = 0;
      i_power = 0;
      return;
    }
    if (i_power >= 2) {
      coeff = -coeff;
      i_power -= 2;
    }
  }

  bool is_zero() const { return coeff == 0; }

  friend bool operator==(const PiScalar& a, const PiScalar& b) {
    return a.coeff == b.coeff && a.pi_power == b.pi_power && a.i_power == b.i_power;
  }
  friend bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }

  friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
    if (a.is_zero() || b.is_zero()) return PiScalar();
    return PiScalar(a.coeff * b.coeff, a.pi_power + b.pi_power, a.i_power + b.i_power);
  }
  PiScalar& operator*=(const PiScalar& b) { return *this = *this * b; }

  friend PiScalar operator/(const PiScalar& a, const PiScalar& b) {
    if (b.is_zero()) throw std::domain_error("PiScalar: division by zero");
    if (a.is_zero()) return PiScalar();
    return PiScalar(a.coeff / b.coeff, a.pi_power - b.pi_power, a.i_power - b.i_power + 4);
  }

  friend PiScalar operator-(const PiScalar& a) { return PiScalar(-a.coeff, a.pi_power, a.i_power); }

  friend PiScalar operator+(const PiScalar& a, const PiScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.pi_power != b.pi_power || a.i_power != b.i_power)
      throw std::domain_error("PiScalar: incompatible addition");
    return PiScalar(a.coeff + b.coeff, a.pi_power, a.i_power);
  }
  PiScalar& operator+=(const PiScalar& b) { return *this = *this + b; }
  friend PiScalar operator-(const PiScalar& a, const PiScalar& b) { return a + (-b); }

  // Procedure: to_complex
  std::complex<double> to_complex() const {
    double mag = coeff.get_d() * std::pow(M_PI, static_cast<double>(pi_power));
    switch (i_power) {
      case 0: return {mag, 0.0};
      case 1: return {0.0, mag};
      case 2: return {-mag, 0.0};
      default: return {0.0, -mag};
    }
  }
};

// Procedure: pi_scalar_i_pow
inline PiScalar pi_scalar_i_pow(long m) { return PiScalar(Rat(1), 0, m); }

}  // namespace howe
