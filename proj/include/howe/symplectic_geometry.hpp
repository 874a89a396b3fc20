// symplectic_geometry.hpp - matrix realization of the symplectic space
// W = M_{d',d}(D) for the pairs (O_d, Sp_{2l'}(R)), (U_d, U_{p,q}),
// (Sp_d, O*_{2d'}); the moment maps tau, tau'; Cartan subspaces of W;
// nilpotent-orbit dimensions; dilation determinants; stable-range and
// homogeneity predicates.
//
// Storage: quaternions are realized as 2x2 complex blocks
//   a+bi+cj+dk -> [[a+bi, c+di], [-c+di, a-bi]],
// so quaternionic conjugate-transpose is the complex adjoint.  Elements w of W
// map V_0 -> V_1; the form on V_0 is the identity (G compact) and the form on
// V_1 is F, so tau(w) = w* F w in g and tau'(w) = w w* F in g'.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "howe/rational.hpp"
#include "howe/root_data.hpp"

namespace howe {

struct MatrixOverD {
  Algebra algebra = Algebra::R;
  long rows = 0, cols = 0;  // shape over D
  Eigen::MatrixXcd m;       // (s*rows) x (s*cols), s = 2 for H else 1

  static long span(Algebra a) { return a == Algebra::H ? 2 : 1; }

  MatrixOverD() = default;
  MatrixOverD(Algebra a, long r, long c)
      : algebra(a), rows(r), cols(c), m(Eigen::MatrixXcd::Zero(span(a) * r, span(a) * c)) {}

  // Procedure: set_entry
  // Writes one D-entry; over H the four components are (a, b, c, d) of
  // a+bi+cj+dk, over R/C only (a, b) are used.
  void set_entry(long r, long c, double a, double b = 0, double cc = 0, double dd = 0) {
    if (algebra == Algebra::H) {
      m(2 * r, 2 * c) = {a, b};
      m(2 * r, 2 * c + 1) = {cc, dd};
      m(2 * r + 1, 2 * c) = {-cc, dd};
      m(2 * r + 1, 2 * c + 1) = {a, -b};
    } else {
      if (algebra == Algebra::R && b != 0)
        throw std::invalid_argument("set_entry: real matrix with imaginary part");
      m(r, c) = {a, b};
    }
  }

  MatrixOverD conj_transpose() const {
    MatrixOverD r(algebra, cols, rows);
    r.m = m.adjoint();
    return r;
  }

  friend MatrixOverD operator*(const MatrixOverD& a, const MatrixOverD& b) {
    if (a.algebra != b.algebra || a.cols != b.rows)
      throw std::invalid_argument("MatrixOverD: shape mismatch");
    MatrixOverD r(a.algebra, a.rows, b.cols);
    r.m = a.m * b.m;
    return r;
  }
  friend MatrixOverD operator-(const MatrixOverD& a, const MatrixOverD& b) {
    MatrixOverD r = a;
    r.m -= b.m;
    return r;
  }
  double norm() const { return m.norm(); }
};

// Procedure: form_matrix
// The invariant form F on V_1: Sp_{2l'}(R): [[0, I], [-I, 0]];
// U_{p,q}: i diag(-I_p, I_q); O*_{2d'}: j at each quaternionic coordinate.
inline MatrixOverD form_matrix(const DualPair& pr) {
  MatrixOverD F(pr.algebra, pr.d_prime, pr.d_prime);
  switch (pr.algebra) {
    case Algebra::R: {
      const long lp = pr.l_prime;
      for (long k = 0; k < lp; ++k) {
        F.set_entry(k, k + lp, 1);
        F.set_entry(k + lp, k, -1);
      }
      break;
    }
    case Algebra::C:
      for (long k = 0; k < pr.d_prime; ++k) F.set_entry(k, k, 0, k < pr.p ? -1 : 1);
      break;
    case Algebra::H:
      for (long k = 0; k < pr.d_prime; ++k) F.set_entry(k, k, 0, 0, 1, 0);  // j
      break;
  }
  return F;
}

// Procedure: tau
// The g-valued moment map tau(w) = w* F w (skew-hermitian d x d over D).
inline MatrixOverD tau(const MatrixOverD& w, const DualPair& pr) {
  if (w.algebra != pr.algebra || w.rows != pr.d_prime || w.cols != pr.d)
    throw std::invalid_argument("tau: shape mismatch");
  return w.conj_transpose() * form_matrix(pr) * w;
}

// Procedure: tau_prime
// The g'-valued moment map tau'(w) = w w* F (F-skew d' x d' over D).
inline MatrixOverD tau_prime(const MatrixOverD& w, const DualPair& pr) {
  if (w.algebra != pr.algebra || w.rows != pr.d_prime || w.cols != pr.d)
    throw std::invalid_argument("tau_prime: shape mismatch");
  return w * w.conj_transpose() * form_matrix(pr);
}

struct CartanSpec {
  DualPair pair;
  long m = 0;               // number of positive delta_j (C only; else min(l, l'))
  std::vector<Rat> coords;  // w_1..w_{l''}
};

// Procedure: cartan_rank
inline long cartan_rank(const DualPair& pr) { return std::min(pr.l, pr.l_prime); }

// Procedure: validate_cartan
inline void validate_cartan(const CartanSpec& cs) {
  const DualPair& pr = cs.pair;
  const long l2 = cartan_rank(pr);
  if (static_cast<long>(cs.coords.size()) != l2)
    throw std::invalid_argument("CartanSpec: wrong number of coordinates");
  if (pr.algebra == Algebra::C) {
    if (cs.m < std::max(l2 - pr.q, 0L) || cs.m > std::min(pr.p, l2))
      throw std::invalid_argument("CartanSpec: m out of range");
  } else if (cs.m != l2) {
    throw std::invalid_argument("CartanSpec: m is degenerate (min(l, l')) unless D = C");
  }
}

// Procedure: cartan_deltas
// delta_j = +1 for j <= m, -1 otherwise (all +1 when D != C).
inline std::vector<int> cartan_deltas(const CartanSpec& cs) {
  std::vector<int> d(cartan_rank(cs.pair), 1);
  if (cs.pair.algebra == Algebra::C)
    for (long j = cs.m; j < static_cast<long>(d.size()); ++j) d[j] = -1;
  return d;
}

// Procedure: cartan_element
// sum_j w_j u_j as an explicit matrix, where the u_j are commuting rank-one
// (rank-two over R) elements with tau(u_j) = delta_j J_j:
//   R: u_j = [(f_j - f_{j+l'}) e_{2j-1}^t + (f_j + f_{j+l'}) e_{2j}^t]/sqrt(2)
//   C: u_j = e^{-i delta_j pi/4} f_{s(j)} e_j^t,  s(j) the j-th slot of the
//      matching signature block (first m in the p-block, the rest in q)
//   H: u_j = [(1-k)/sqrt(2)] f_j e_j^t
// The scalar phases are fixed so that the normal forms below hold exactly.
inline MatrixOverD cartan_element(const CartanSpec& cs) {
  validate_cartan(cs);
  const DualPair& pr = cs.pair;
  const long l2 = cartan_rank(pr);
  MatrixOverD w(pr.algebra, pr.d_prime, pr.d);
  const double s2 = 1.0 / std::sqrt(2.0);
  for (long j = 0; j < l2; ++j) {
    const double wj = cs.coords[j].get_d();
    switch (pr.algebra) {
      case Algebra::R: {
        const long lp = pr.l_prime;
        w.set_entry(j, 2 * j, wj * s2);
        w.set_entry(j + lp, 2 * j, -wj * s2);
        w.set_entry(j, 2 * j + 1, wj * s2);
        w.set_entry(j + lp, 2 * j + 1, wj * s2);
        break;
      }
      case Algebra::C: {
        const long slot = j < cs.m ? j : pr.p + (j - cs.m);
        const int dj = j < cs.m ? 1 : -1;
        w.set_entry(slot, j, wj * s2, -dj * wj * s2);  // e^{-i delta_j pi/4}
        break;
      }
      case Algebra::H:
        w.set_entry(j, j, wj * s2, 0, 0, -wj * s2);  // (1 - k)/sqrt(2)
        break;
    }
  }
  return w;
}

// Procedure: cartan_J / cartan_J_prime
// The commuting generators with tau(sum w_j u_j) = sum w_j^2 delta_j J_j and
// tau'(sum w_j u_j) = sum w_j^2 delta_j J'_j.
inline MatrixOverD cartan_J(const CartanSpec& cs, long j) {
  const DualPair& pr = cs.pair;
  MatrixOverD J(pr.algebra, pr.d, pr.d);
  switch (pr.algebra) {
    case Algebra::R:
      J.set_entry(2 * j, 2 * j + 1, 1);
      J.set_entry(2 * j + 1, 2 * j, -1);
      break;
    case Algebra::C: J.set_entry(j, j, 0, -1); break;
    case Algebra::H: J.set_entry(j, j, 0, -1, 0, 0); break;
  }
  return J;
}
inline MatrixOverD cartan_J_prime(const CartanSpec& cs, long j) {
  const DualPair& pr = cs.pair;
  MatrixOverD J(pr.algebra, pr.d_prime, pr.d_prime);
  switch (pr.algebra) {
    case Algebra::R: {
      const long lp = pr.l_prime;
      J.set_entry(j, j + lp, 1);
      J.set_entry(j + lp, j, -1);
      break;
    }
    case Algebra::C: {
      const long slot = j < cs.m ? j : pr.p + (j - cs.m);
      J.set_entry(slot, slot, 0, -1);
      break;
    }
    // u_j u_j* is the real matrix unit f_j f_j^t, so tau'(u_j) = f_j f_j^t j.
    case Algebra::H: J.set_entry(j, j, 0, 0, 1, 0); break;
  }
  return J;
}

// Procedure: rank_over_D
// Numerical rank over D (complex rank halved for H), SVD threshold 1e-9.
inline long rank_over_D(const MatrixOverD& w) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(w.m);
  long rank = 0;
  for (long k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()(k) > 1e-9) ++rank;
  return w.algebra == Algebra::H ? rank / 2 : rank;
}

// Procedure: is_in_Wg
// True iff no nonzero x in g kills w: w surjective onto V_0, except that for
// orthogonal G an image of codimension <= 1 suffices.
inline bool is_in_Wg(const MatrixOverD& w, const DualPair& pr) {
  const long slack = (pr.algebra == Algebra::R) ? 1 : 0;
  if (pr.d - slack <= 0) return true;  // g = 0 cases (O_1): every w qualifies
  return rank_over_D(w) >= pr.d - slack;
}

// Procedure: witt_index
// Witt index of the form F on V_1: l' (R); min(p,q) (C); floor(d'/2) (H).
inline long witt_index(const DualPair& pr) {
  switch (pr.algebra) {
    case Algebra::R: return pr.l_prime;
    case Algebra::C: return std::min(pr.p, pr.q);
    case Algebra::H: return pr.d_prime / 2;
  }
  throw std::logic_error("witt_index");
}

// Procedure: max_orbit_rank
inline long max_orbit_rank(const DualPair& pr) { return std::min(pr.d, witt_index(pr)); }

// Procedure: orbit_dim
// Dimension of the rank-k nilpotent G'-orbit:
//   R: k d' - k(k-1);  C: 2 k d' - 2 k^2;  H: 4 k d' - 2 k (2k+1).
// Equals d' k dim_R D - 2 dim_R SH_k(D); the oracle tests cross-check.
inline long orbit_dim(const DualPair& pr, long k) {
  if (k < 0 || k > max_orbit_rank(pr)) throw std::domain_error("orbit_dim: k out of range");
  switch (pr.algebra) {
    case Algebra::R: return k * pr.d_prime - k * (k - 1);
    case Algebra::C: return 2 * k * pr.d_prime - 2 * k * k;
    case Algebra::H: return 4 * k * pr.d_prime - 2 * k * (2 * k + 1);
  }
  throw std::logic_error("orbit_dim");
}

// Procedure: orbit_dim_general
// The same via d' k dim_R D - 2 dim_R SH_k(D), with SH_k the F-hermitian
// k x k matrices: dim k(k+1)/2 - k + k = k(k-1)/2, k^2, k(2k+1) resp.
inline long orbit_dim_general(const DualPair& pr, long k) {
  if (k < 0 || k > max_orbit_rank(pr)) throw std::domain_error("orbit_dim_general: k out of range");
  long dimD = 0, dimSH = 0;
  switch (pr.algebra) {
    case Algebra::R:
      dimD = 1;
      dimSH = k * (k - 1) / 2;
      break;
    case Algebra::C:
      dimD = 2;
      dimSH = k * k;
      break;
    case Algebra::H:
      dimD = 4;
      dimSH = k * (2 * k + 1);
      break;
  }
  return pr.d_prime * k * dimD - 2 * dimSH;
}

// Procedure: stable_range_equality
// True iff dim O'_m = dim W - 2 dim g, m = min(d, Witt index).
inline bool stable_range_equality(const DualPair& pr) {
  return orbit_dim(pr, max_orbit_rank(pr)) == dim_W(pr) - 2 * dim_g(pr);
}

// Procedure: homogeneity_gap
// dim W - dim O'_m - dim g - dim h  (l <= l' regime; dim h = l).
inline long homogeneity_gap(const DualPair& pr) {
  if (pr.l > pr.l_prime) throw std::domain_error("homogeneity_gap: requires l <= l'");
  return dim_W(pr) - orbit_dim(pr, max_orbit_rank(pr)) - dim_g(pr) - pr.l;
}

// Procedure: gt_dilation_exponent / gt_dilation_det
// Exponent of t in det(g_t) restricted transversally to the rank-k orbit:
// dim W - dim O'_k; the k = 0 value is dim W itself.
inline long gt_dilation_exponent(const DualPair& pr, long k) {
  return dim_W(pr) - orbit_dim(pr, k);
}
inline Rat gt_dilation_det(const DualPair& pr, long k, const Rat& t) {
  if (t <= 0) throw std::domain_error("gt_dilation_det: t must be positive");
  return rat_pow(t, gt_dilation_exponent(pr, k));
}

// Procedure: derivative_order_bound
// d' - r - 1 for D in {R, C}; 2(d' - r) for H.  Requires l <= l'.
inline long derivative_order_bound(const DualPair& pr) {
  if (pr.l > pr.l_prime) throw std::domain_error("derivative_order_bound: requires l <= l'");
  const Rat v = pr.algebra == Algebra::H ? Rat(2 * (Rat(pr.d_prime) - pr.r))
                                         : Rat(Rat(pr.d_prime) - pr.r - 1);
  return to_long(v);
}

// ---- random sampling --------------------------------------------------------

namespace detail {
inline MatrixOverD random_matrix(Algebra alg, long rows, long cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  MatrixOverD w(alg, rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) {
      switch (alg) {
        case Algebra::R: w.set_entry(r, c, g(rng)); break;
        case Algebra::C: w.set_entry(r, c, g(rng), g(rng)); break;
        case Algebra::H: w.set_entry(r, c, g(rng), g(rng), g(rng), g(rng)); break;
      }
    }
  return w;
}
}  // namespace detail

// Procedure: random_W
inline MatrixOverD random_W(const DualPair& pr, std::mt19937_64& rng) {
  return detail::random_matrix(pr.algebra, pr.d_prime, pr.d, rng);
}

// Procedure: random_G
// A random element of the compact group G: exp(M - M*) for random M.
inline MatrixOverD random_G(const DualPair& pr, std::mt19937_64& rng) {
  MatrixOverD m = detail::random_matrix(pr.algebra, pr.d, pr.d, rng);
  MatrixOverD g(pr.algebra, pr.d, pr.d);
  g.m = (0.5 * (m.m - m.m.adjoint().eval())).exp();
  return g;
}

// Procedure: random_Gprime
// A random element of G': exp(X) with X = M - F^{-1} M* F (F-skew).
inline MatrixOverD random_Gprime(const DualPair& pr, std::mt19937_64& rng) {
  MatrixOverD m = detail::random_matrix(pr.algebra, pr.d_prime, pr.d_prime, rng);
  const Eigen::MatrixXcd F = form_matrix(pr).m;
  MatrixOverD g(pr.algebra, pr.d_prime, pr.d_prime);
  Eigen::MatrixXcd x = 0.5 * (m.m - F.inverse() * m.m.adjoint() * F);
  g.m = x.exp();
  return g;
}

}  // namespace howe
