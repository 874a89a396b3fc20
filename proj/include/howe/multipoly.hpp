// multipoly.hpp - sparse multivariate polynomials with PiScalar coefficients.
//
// Terms are keyed by exponent vectors of fixed length; zero coefficients are
// never stored.  The monomial order used for division is lexicographic.

#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "howe/pi_scalar.hpp"
#include "howe/signed_permutation.hpp"

namespace howe {

struct MultiPoly {
  int nvars = 0;
  std::map<std::vector<int>, PiScalar> terms;

  explicit MultiPoly(int n = 0) : nvars(n) {}

  // Procedure: constant
  static MultiPoly constant(int n, PiScalar c) {
    MultiPoly p(n);
    if (!c.is_zero()) p.terms[std::vector<int>(n, 0)] = std::move(c);
    return p;
  }

  // Procedure: monomial
  static MultiPoly monomial(int n, std::vector<int> expo, PiScalar c) {
    MultiPoly p(n);
    if (!c.is_zero()) p.terms[std::move(expo)] = std::move(c);
    return p;
  }

  // Procedure: variable
  static MultiPoly variable(int n, int j, PiScalar c = PiScalar(Rat(1))) {
    std::vector<int> e(n, 0);
    e[j] = 1;
    return monomial(n, e, std::move(c));
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const std::vector<int>& e, const PiScalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars);
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        std::vector<int> e(ea);
        for (int j = 0; j < r.nvars; ++j) e[j] += eb[j];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPoly operator*(const PiScalar& s, const MultiPoly& a) {
    MultiPoly r(a.nvars);
    for (const auto& [e, c] : a.terms) r.add_term(e, s * c);
    return r;
  }

  // Procedure: substitute
  // Returns q with q(y) = p(s.y) for the coordinate action of signed permutations.
  MultiPoly substitute(const SignedPermutation& s) const {
    MultiPoly r(nvars);
    for (const auto& [e, c] : terms) {
      std::vector<int> ne(nvars);
      PiScalar nc = c;
      // Monomial prod_j y_j^{e_j} maps to prod_j (eps_j y_{sigma^{-1}(j)})^{e_j}.
      for (int j = 0; j < nvars; ++j) {
        int src = s.inverse_index(j);
        ne[src] = e[j];
        if (s.signs[j] < 0 && (e[j] & 1)) nc = -nc;
      }
      r.add_term(ne, nc);
    }
    return r;
  }

  // Procedure: max_degree_in
  int max_degree_in(int j) const {
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e[j]);
    return d;
  }

  // Procedure: eval_exact
  // Requires all contributing terms to share pi-power and i-parity.
  PiScalar eval_exact(const std::vector<Rat>& y) const {
    PiScalar v;
    for (const auto& [e, c] : terms) {
      Rat m = 1;
      for (int j = 0; j < nvars; ++j) m *= rat_pow(y[j], e[j]);
      v += PiScalar(m) * c;
    }
    return v;
  }

  // Procedure: eval_complex
  std::complex<double> eval_complex(const std::vector<std::complex<double>>& y) const {
    std::complex<double> v = 0;
    for (const auto& [e, c] : terms) {
      std::complex<double> m = c.to_complex();
      for (int j = 0; j < nvars; ++j)
        for (int k = 0; k < e[j]; ++k) m *= y[j];
      v += m;
    }
    return v;
  }
};

// Procedure: exact_divide
// Exact multivariate division (lex order); throws on nonzero remainder.
inline MultiPoly exact_divide(MultiPoly dividend, const MultiPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("exact_divide: zero divisor");
  MultiPoly q(dividend.nvars);
  const auto& dl = *divisor.terms.rbegin();  // lex-leading term of the divisor
  while (!dividend.is_zero()) {
    const auto& [e, c] = *dividend.terms.rbegin();
    std::vector<int> de(dividend.nvars);
    for (int j = 0; j < dividend.nvars; ++j) {
      de[j] = e[j] - dl.first[j];
      if (de[j] < 0) throw std::domain_error("exact_divide: nonzero remainder");
    }
    MultiPoly t = MultiPoly::monomial(dividend.nvars, de, c / dl.second);
    q = q + t;
    dividend = dividend - t * divisor;
  }
  return q;
}

}  // namespace howe
