// signed_permutation.hpp - elements of the groups Sigma_l and Sigma_l x {+-1}^l
// acting on coordinates y_1..y_l by (eps,sigma): y |-> (eps_j y_{sigma^{-1}(j)})_j.

#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace howe {

struct SignedPermutation {
  std::vector<int> perm;   // 0-based; perm[k] = sigma(k)
  std::vector<int> signs;  // entries +-1; all +1 for the plain symmetric group

  explicit SignedPermutation(int l = 0) : perm(l), signs(l, 1) {
    std::iota(perm.begin(), perm.end(), 0);
  }

  int size() const { return static_cast<int>(perm.size()); }

  // Procedure: apply
  // Image of a coordinate vector under the group element.
  template <typename T>
  std::vector<T> apply(const std::vector<T>& y) const {
    std::vector<T> r(y.size());
    // (s.y)_j = eps_j * y_{sigma^{-1}(j)}, i.e. r[perm[k]] = eps_{perm[k]} * y[k].
    for (int k = 0; k < size(); ++k) r[perm[k]] = T(signs[perm[k]]) * y[k];
    return r;
  }

  // Procedure: compose
  // (a*b) acts as: apply b, then a.
  friend SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
    SignedPermutation r(a.size());
    for (int k = 0; k < a.size(); ++k) {
      r.perm[k] = a.perm[b.perm[k]];
      r.signs[r.perm[k]] = a.signs[r.perm[k]] * b.signs[b.perm[k]];
    }
    return r;
  }

  // Procedure: inverse
  SignedPermutation inverse() const {
    SignedPermutation r(size());
    for (int k = 0; k < size(); ++k) {
      r.perm[perm[k]] = k;
      r.signs[k] = signs[perm[k]];
    }
    return r;
  }

  // Procedure: inverse_index
  // sigma^{-1}(j).
  int inverse_index(int j) const {
    for (int k = 0; k < size(); ++k)
      if (perm[k] == j) return k;
    throw std::logic_error("invalid permutation");
  }

  // Procedure: perm_parity
  // Sign of the underlying permutation.
  int perm_parity() const {
    std::vector<bool> seen(perm.size(), false);
    int parity = 1;
    for (int k = 0; k < size(); ++k) {
      if (seen[k]) continue;
      int len = 0;
      for (int j = k; !seen[j]; j = perm[j]) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) parity = -parity;
    }
    return parity;
  }

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.perm == b.perm && a.signs == b.signs;
  }
};

// Procedure: symmetric_group
inline std::vector<SignedPermutation> symmetric_group(int l) {
  std::vector<SignedPermutation> g;
  SignedPermutation s(l);
  std::vector<int> p = s.perm;
  std::sort(p.begin(), p.end());
  do {
    s.perm = p;
    g.push_back(s);
  } while (std::next_permutation(p.begin(), p.end()));
  return g;
}

// Procedure: hyperoctahedral_group
// Sigma_l x {+-1}^l (all sign changes and permutations).
inline std::vector<SignedPermutation> hyperoctahedral_group(int l) {
  std::vector<SignedPermutation> g;
  for (auto s : symmetric_group(l)) {
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      for (int j = 0; j < l; ++j) s.signs[j] = (mask >> j) & 1 ? -1 : 1;
      g.push_back(s);
    }
  }
  return g;
}

}  // namespace howe
