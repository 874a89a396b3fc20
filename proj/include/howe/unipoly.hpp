// unipoly.hpp - dense univariate polynomials over Rat, constant term first.
//
// Invariant: no trailing zero coefficient except for the zero polynomial,
// which is the empty coefficient list.

#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "howe/rational.hpp"

namespace howe {

struct UniPoly {
  std::vector<Rat> c;  // c[k] is the coefficient of x^k

  UniPoly() = default;
  UniPoly(std::initializer_list<Rat> lst) : c(lst) { trim(); }
  explicit UniPoly(Rat constant) {
    if (constant != 0) c.push_back(std::move(constant));
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero

  Rat coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c.size())) return 0;
    return c[k];
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Rat(0));
    for (size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
    r.trim();
    return r;
  }
  friend UniPoly operator-(const UniPoly& a) {
    UniPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UniPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t j = 0; j < a.c.size(); ++j)
      for (size_t k = 0; k < b.c.size(); ++k) r.c[j + k] += a.c[j] * b.c[k];
    r.trim();
    return r;
  }
  friend UniPoly operator*(const Rat& s, const UniPoly& a) {
    UniPoly r = a;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
  }

  // Procedure: derivative
  UniPoly derivative() const {
    UniPoly r;
    for (size_t k = 1; k < c.size(); ++k) r.c.push_back(Rat(static_cast<long>(k)) * c[k]);
    r.trim();
    return r;
  }

  // Procedure: shifted
  // Multiplication by x^n.
  UniPoly shifted(long n) const {
    if (is_zero()) return {};
    UniPoly r;
    r.c.assign(static_cast<size_t>(n), Rat(0));
    r.c.insert(r.c.end(), c.begin(), c.end());
    return r;
  }

  // Procedure: eval (exact)
  Rat eval(const Rat& x) const {
    Rat v = 0;
    for (size_t k = c.size(); k-- > 0;) v = v * x + c[k];
    return v;
  }

  // Procedure: eval (numeric)
  std::complex<double> eval(std::complex<double> x) const {
    std::complex<double> v = 0;
    for (size_t k = c.size(); k-- > 0;) v = v * x + c[k].get_d();
    return v;
  }
  double eval(double x) const { return eval(std::complex<double>(x, 0)).real(); }

  // Procedure: compose_scaled
  // p(s*x) for exact scalar s.
  UniPoly compose_scaled(const Rat& s) const {
    UniPoly r;
    Rat pw = 1;
    for (size_t k = 0; k < c.size(); ++k) {
      r.c.push_back(c[k] * pw);
      pw *= s;
    }
    r.trim();
    return r;
  }

  // Procedure: to_json
  // JSON array of rational strings, constant term first.
  std::string to_json() const {
    std::string s = "[";
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) s += ",";
      s += "\"" + rat_to_string(c[k]) + "\"";
    }
    return s + "]";
  }
};

}  // namespace howe
