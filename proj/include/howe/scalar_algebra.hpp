// scalar_algebra.hpp - Vandermonde determinants, signed permutation sums,
// exact determinants over Rat, and exact division by skew products.

#pragma once

#include <stdexcept>
#include <vector>

#include "howe/multipoly.hpp"
#include "howe/rational.hpp"
#include "howe/signed_permutation.hpp"

namespace howe {

// Procedure: vandermonde_det
// prod_{j<k} (z_k - z_j), the row-index-increasing convention.
inline Rat vandermonde_det(const std::vector<Rat>& z) {
  Rat p = 1;
  for (size_t j = 0; j < z.size(); ++j)
    for (size_t k = j + 1; k < z.size(); ++k) p *= (z[k] - z[j]);
  return p;
}

// Procedure: falling_product_sum
// sum_{s in Sigma_m} sgn(s) prod_j (z_j - 1)(z_j - 2)...(z_j - s(j) + 1).
// Equals prod_{j<k}(z_k - z_j); the global sign is frozen by the brute-force
// oracle in the tests.
inline Rat falling_product_sum(const std::vector<Rat>& z) {
  const int m = static_cast<int>(z.size());
  Rat total = 0;
  for (const auto& s : symmetric_group(m)) {
    Rat term = s.perm_parity();
    for (int j = 0; j < m; ++j) {
      // s(j)-1 falling factors starting at z_j - 1.
      const int k = s.perm[j] + 1;  // 1-based s(j)
      for (int t = 1; t <= k - 1; ++t) term *= (z[j] - t);
    }
    total += term;
  }
  return total;
}

// Procedure: exact_det
// Exact determinant by Gaussian elimination over Rat.
inline Rat exact_det(std::vector<std::vector<Rat>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("exact_det: matrix not square");
  Rat det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Procedure: plain_vandermonde_poly
// prod_{j<k} (y_j - y_k) as a MultiPoly (the divisor used by
// divide_by_vandermonde; matches the spec's worked examples).
inline MultiPoly plain_vandermonde_poly(int l) {
  MultiPoly p = MultiPoly::constant(l, PiScalar(Rat(1)));
  for (int j = 0; j < l; ++j)
    for (int k = j + 1; k < l; ++k)
      p = p * (MultiPoly::variable(l, j) - MultiPoly::variable(l, k));
  return p;
}

// Procedure: group_sign_on
// The character s -> (s.skew_ref)/skew_ref in {+1,-1}; throws if skew_ref is
// not an eigenvector of the action.
inline int group_sign_on(const MultiPoly& skew_ref, const SignedPermutation& s) {
  MultiPoly moved = skew_ref.substitute(s);
  if (moved == skew_ref) return 1;
  if (moved == -skew_ref) return -1;
  throw std::domain_error("group_sign_on: polynomial is not group-skew");
}

// Procedure: divide_by_vandermonde
// Checks that `skew` transforms by the sign character of the group acting on
// prod_{j<k}(y_j - y_k) and returns the exact quotient by that product.
inline MultiPoly divide_by_vandermonde(const MultiPoly& skew,
                                       const std::vector<SignedPermutation>& group) {
  const MultiPoly vdm = plain_vandermonde_poly(skew.nvars);
  for (const auto& s : group) {
    const int sgn = group_sign_on(vdm, s);
    MultiPoly moved = skew.substitute(s);
    const MultiPoly expected = sgn == 1 ? skew : -skew;
    if (moved != expected) throw std::domain_error("divide_by_vandermonde: input is not skew");
  }
  return exact_divide(skew, vdm);
}

}  // namespace howe
