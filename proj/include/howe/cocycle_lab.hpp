// cocycle_lab.hpp - numerical verification of the metaplectic cocycle
// formulas and the determinant identity behind them, on concrete symplectic
// and unitary matrices.
//
// Conventions (pinned by the rank-one anchors in the tests):
//   W = R^{2n}, <u, v> = u^t J v with J = [[0, I], [-I, 0]];
//   W_C^{+-} are the +-i eigenspaces of J in C^{2n}, with H-orthonormal bases
//   v_k = e_k + i e_{k+n} (on W_C^+) for the positive hermitian form
//   H(u, v) = (i/2) u^t J conj(v);
//   c(g) = (g+1)(g-1)^{-1} (Cayley transform);
//   q_{g1,g2}(u', u'') = (1/2) <(c(g1)+c(g2)) u', u''> on (g1-1)W cap (g2-1)W;
//   the unitary cocycle is evaluated on W_C^- (the -i eigenspace); the
//   determinant identity of the appendix lives on W_C^+.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

namespace howe {

using RealMat = Eigen::MatrixXd;
using CplxMat = Eigen::MatrixXcd;

struct SymplecticElement {
  RealMat g;  // 2n x 2n
  long n() const { return g.rows() / 2; }
};

// Procedure: standard_J
inline RealMat standard_J(long n) {
  RealMat J = RealMat::Zero(2 * n, 2 * n);
  for (long k = 0; k < n; ++k) {
    J(k, k + n) = 1;
    J(k + n, k) = -1;
  }
  return J;
}

// Procedure: is_symplectic / commutes_with_J
inline bool is_symplectic(const SymplecticElement& g, double tol = 1e-10) {
  const RealMat J = standard_J(g.n());
  return (g.g.transpose() * J * g.g - J).norm() < tol;
}
inline bool commutes_with_J(const SymplecticElement& g, double tol = 1e-10) {
  const RealMat J = standard_J(g.n());
  return (g.g * J - J * g.g).norm() < tol;
}

// Procedure: restrict_plus
// The n x n complex matrix of a J-commuting real matrix on W_C^+ in the basis
// v_k = e_k + i e_{k+n}:  M = [[X, Y], [-Y, X]]  ->  X + iY.
inline CplxMat restrict_plus(const RealMat& m) {
  const long n = m.rows() / 2;
  CplxMat a(n, n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) a(r, c) = {m(r, c), -m(r + n, c)};
  return a;
}

// Procedure: embed_plus
// Inverse of restrict_plus: X + iY -> [[X, Y], [-Y, X]].
inline RealMat embed_plus(const CplxMat& a) {
  const long n = a.rows();
  RealMat m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = a.real();
  m.topRightCorner(n, n) = a.imag();
  m.bottomLeftCorner(n, n) = -a.imag();
  m.bottomRightCorner(n, n) = a.real();
  return m;
}

// Procedure: certified_singular_values
// Singular values with the kept/discarded spectral-gap certificate: values
// below `thresh` are treated as zero, and the gap between the smallest kept
// and largest discarded value must exceed `gap`.
inline std::vector<double> certified_singular_values(const RealMat& m, double thresh = 1e-9,
                                                     double gap = 1e3) {
  Eigen::JacobiSVD<RealMat> svd(m);
  std::vector<double> kept;
  double largest_dropped = 0;
  for (long k = 0; k < svd.singularValues().size(); ++k) {
    const double s = svd.singularValues()(k);
    if (s > thresh)
      kept.push_back(s);
    else
      largest_dropped = std::max(largest_dropped, s);
  }
  if (!kept.empty() && largest_dropped > 0 && kept.back() < gap * largest_dropped)
    throw std::runtime_error("certified_singular_values: spectral gap not certified");
  return kept;
}

// Procedure: pseudo_abs_det
// Product of the nonzero singular values of m.
inline double pseudo_abs_det(const RealMat& m, double thresh = 1e-9) {
  double p = 1;
  for (double s : certified_singular_values(m, thresh)) p *= s;
  return p;
}

// Procedure: theta_squared
// xi(g)^2 = i^{dim (g-1)W} / pseudo-det(J^{-1}(g-1)), the pseudo-determinant
// taken over the nonzero eigenvalues of J^{-1}(g-1).
inline std::complex<double> theta_squared(const SymplecticElement& g, double thresh = 1e-9) {
  const long n = g.n();
  const RealMat J = standard_J(n);
  const RealMat m = J.inverse() * (g.g - RealMat::Identity(2 * n, 2 * n));
  Eigen::EigenSolver<RealMat> es(m);
  std::complex<double> det = 1;
  long rank = 0;
  for (long k = 0; k < es.eigenvalues().size(); ++k) {
    const std::complex<double> lam = es.eigenvalues()(k);
    if (std::abs(lam) > thresh) {
      det *= lam;
      ++rank;
    }
  }
  const std::complex<double> I(0, 1);
  return std::pow(I, static_cast<double>(rank)) / det;
}

// Procedure: theta_squared_unitary_path
// For J-commuting g: the same value from the W_C^+ spectrum via
// det(g-1)_W = (-1)^n det(g-1)^2_{W_C^+} det(g)^{-1}_{W_C^+}.
inline std::complex<double> theta_squared_unitary_path(const SymplecticElement& g,
                                                       double thresh = 1e-9) {
  const long n = g.n();
  const CplxMat a = restrict_plus(g.g);
  Eigen::ComplexEigenSolver<CplxMat> es(a);
  std::complex<double> det_plus = 1, det_g = 1;
  long rank = 0;  // complex rank of (g-1) on W_C, = dim_R (g-1)W
  for (long k = 0; k < n; ++k) {
    const std::complex<double> lam = es.eigenvalues()(k);
    det_g *= lam;
    if (std::abs(lam - 1.0) > thresh) {
      det_plus *= (lam - 1.0);
      rank += 2;  // conjugate eigenvalue on W_C^- pairs with it
    }
  }
  const std::complex<double> detW =
      std::pow(-1.0, static_cast<double>(rank / 2)) * det_plus * det_plus / det_g;
  // det(J^{-1}(g-1)) = det(g-1)/det(J) = det(g-1) on the image; det J = 1.
  const std::complex<double> I(0, 1);
  return std::pow(I, static_cast<double>(rank)) / detW;
}

// Procedure: cocycle_modulus
// sqrt( |det(g1-1)| |det(g2-1)| / |det(g1 g2 - 1)| ), pseudo-determinants on
// the respective images.
inline double cocycle_modulus(const SymplecticElement& g1, const SymplecticElement& g2) {
  const long n = g1.n();
  const RealMat id = RealMat::Identity(2 * n, 2 * n);
  return std::sqrt(pseudo_abs_det(g1.g - id) * pseudo_abs_det(g2.g - id) /
                   pseudo_abs_det(g1.g * g2.g - id));
}

// Procedure: image_basis
// Orthonormal basis of the column space of m (SVD, certified threshold).
inline RealMat image_basis(const RealMat& m, double thresh = 1e-9) {
  Eigen::JacobiSVD<RealMat> svd(m, Eigen::ComputeFullU);
  const long r = static_cast<long>(certified_singular_values(m, thresh).size());
  return svd.matrixU().leftCols(r);
}

// Procedure: image_intersection
// Orthonormal basis of im(b1) cap im(b2) via principal angles; directions are
// kept when the corresponding singular value of q1^t q2 is 1 within 1e-7.
inline RealMat image_intersection(const RealMat& q1, const RealMat& q2) {
  if (q1.cols() == 0 || q2.cols() == 0) return RealMat(q1.rows(), 0);
  Eigen::JacobiSVD<RealMat> svd(q1.transpose() * q2, Eigen::ComputeFullU);
  long r = 0;
  while (r < svd.singularValues().size() && svd.singularValues()(r) > 1.0 - 1e-7) ++r;
  if (r < svd.singularValues().size() && svd.singularValues()(r) > 1.0 - 1e-10 * 1e3)
    throw std::runtime_error("image_intersection: principal angle not certified");
  return q1 * svd.matrixU().leftCols(r);
}

struct SignatureForm {
  RealMat gram;
  long signature = 0;
};

// Procedure: cocycle_signature_form
// The symmetric form q_{g1,g2}(u', u'') = (1/2) <(c(g1)+c(g2)) u', u''> on
// (g1-1)W cap (g2-1)W, with c applied through the pseudo-inverse of (g-1).
inline SignatureForm cocycle_signature_form(const SymplecticElement& g1,
                                            const SymplecticElement& g2) {
  const long n = g1.n();
  const RealMat id = RealMat::Identity(2 * n, 2 * n);
  const RealMat J = standard_J(n);
  const RealMat b1 = g1.g - id, b2 = g2.g - id;
  const RealMat u = image_intersection(image_basis(b1), image_basis(b2));
  SignatureForm f;
  f.gram = RealMat::Zero(u.cols(), u.cols());
  if (u.cols() == 0) return f;
  const auto cayley_apply = [&](const RealMat& g, const RealMat& b, const RealMat& vecs) {
    // (g+1)(g-1)^{-1} columnwise via least squares on the image.
    RealMat x = b.completeOrthogonalDecomposition().solve(vecs);
    return RealMat((g + id) * x);
  };
  const RealMat cu = cayley_apply(g1.g, b1, u) + cayley_apply(g2.g, b2, u);
  f.gram = 0.5 * (u.transpose() * J.transpose() * 0.5 * cu +
                  (u.transpose() * J.transpose() * 0.5 * cu).transpose());
  Eigen::SelfAdjointEigenSolver<RealMat> es(f.gram);
  for (long k = 0; k < es.eigenvalues().size(); ++k) {
    const double lam = es.eigenvalues()(k);
    if (lam > 1e-8)
      ++f.signature;
    else if (lam < -1e-8)
      --f.signature;
  }
  return f;
}

// Procedure: cocycle_phase
// exp(i pi sgn(q_{g1,g2}) / 4).
inline std::complex<double> cocycle_phase(const SymplecticElement& g1,
                                          const SymplecticElement& g2) {
  const long s = cocycle_signature_form(g1, g2).signature;
  return std::polar(1.0, M_PI * static_cast<double>(s) / 4.0);
}

// Procedure: pseudo_det_minus
// det(a - 1) on W_C^- over the eigenvalues away from 1, for J-commuting g
// whose restriction to W_C^- is conj(restrict_plus(g)).
inline std::complex<double> pseudo_det_minus(const RealMat& g, double thresh = 1e-9) {
  Eigen::ComplexEigenSolver<CplxMat> es(restrict_plus(g).conjugate());
  std::complex<double> det = 1;
  for (long k = 0; k < es.eigenvalues().size(); ++k) {
    const std::complex<double> lam = es.eigenvalues()(k);
    if (std::abs(lam - 1.0) > thresh) det *= (lam - 1.0);
  }
  return det;
}

// Procedure: unitary_cocycle
// det(g1-1) det(g2-1) / det(g1 g2 - 1) on W_C^-; equals
// cocycle_modulus x cocycle_phase for J-commuting elements.
inline std::complex<double> unitary_cocycle(const SymplecticElement& g1,
                                            const SymplecticElement& g2) {
  if (!commutes_with_J(g1) || !commutes_with_J(g2))
    throw std::invalid_argument("unitary_cocycle: elements must centralize J");
  return pseudo_det_minus(g1.g) * pseudo_det_minus(g2.g) /
         pseudo_det_minus(g1.g * g2.g);
}

struct DetIdentityReport {
  std::complex<double> lhs, rhs;
  double residual = 0;
};

// Procedure: det_identity_check
// On W_C^+, for J-commuting g1, g2 with Ker(g1-1) = 0 and generic g2:
//   det(g1 g2 - 1) / [det(g1-1) det(g2-1)]
//     = det of the form H((1/2)(c(g1)+c(g2)) . , .) in an H-orthonormal basis,
// which in that basis is det((1/2)(C1 + C2)) for the restricted Cayley
// transforms C_k.  Throws a resample request if g1 - 1 (or g2 - 1, g1g2 - 1)
// is ill-conditioned.
inline DetIdentityReport det_identity_check(const SymplecticElement& g1,
                                            const SymplecticElement& g2) {
  if (!commutes_with_J(g1) || !commutes_with_J(g2))
    throw std::invalid_argument("det_identity_check: elements must centralize J");
  const long n = g1.n();
  const CplxMat a1 = restrict_plus(g1.g), a2 = restrict_plus(g2.g);
  const CplxMat id = CplxMat::Identity(n, n);
  const auto well_conditioned = [&](const CplxMat& m) {
    Eigen::JacobiSVD<CplxMat> svd(m);
    return svd.singularValues()(svd.singularValues().size() - 1) > 1e-6;
  };
  if (!well_conditioned(a1 - id) || !well_conditioned(a2 - id) ||
      !well_conditioned(a1 * a2 - id))
    throw std::runtime_error("det_identity_check: resample (eigenvalue 1 too close)");
  DetIdentityReport rep;
  rep.lhs = (a1 * a2 - id).determinant() /
            ((a1 - id).determinant() * (a2 - id).determinant());
  const CplxMat c1 = (a1 + id) * (a1 - id).inverse();
  const CplxMat c2 = (a2 + id) * (a2 - id).inverse();
  rep.rhs = (0.5 * (c1 + c2)).determinant();
  rep.residual = std::abs(rep.lhs - rep.rhs) / std::max(1.0, std::abs(rep.rhs));
  return rep;
}

struct HalvingReport {
  long sgn_q = 0, sgn_h = 0;
};

// Procedure: signature_halving_check
// sgn h_{g1,g2} = (1/2) sgn q_{g1,g2}: h is the hermitian form with matrix
// -i(C1 + C2)/... on W_C^+ (in the H-orthonormal basis the Gram matrix of
// h(w', w'') = H(-i c1 w', w'') + H(-i c2 w', w'') is -i(C1 + C2)).
inline HalvingReport signature_halving_check(const SymplecticElement& g1,
                                             const SymplecticElement& g2) {
  if (!commutes_with_J(g1) || !commutes_with_J(g2))
    throw std::invalid_argument("signature_halving_check: elements must centralize J");
  const long n = g1.n();
  const CplxMat id = CplxMat::Identity(n, n);
  const CplxMat a1 = restrict_plus(g1.g), a2 = restrict_plus(g2.g);
  HalvingReport rep;
  rep.sgn_q = cocycle_signature_form(g1, g2).signature;
  const CplxMat c1 = (a1 + id) * (a1 - id).inverse();
  const CplxMat c2 = (a2 + id) * (a2 - id).inverse();
  CplxMat h = std::complex<double>(0, -1) * (c1 + c2);
  h = 0.5 * (h + h.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<CplxMat> es(h);
  for (long k = 0; k < es.eigenvalues().size(); ++k) {
    if (es.eigenvalues()(k) > 1e-8)
      ++rep.sgn_h;
    else if (es.eigenvalues()(k) < -1e-8)
      --rep.sgn_h;
  }
  return rep;
}

// Procedure: random_unitary_element
// J-commuting symplectic element from a Haar unitary (QR with phase fix).
inline SymplecticElement random_unitary_element(long n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CplxMat z(n, n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) z(r, c) = {g(rng), g(rng)};
  Eigen::HouseholderQR<CplxMat> qr(z);
  CplxMat q = qr.householderQ();
  const CplxMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long k = 0; k < n; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return {embed_plus(q)};
}

// Procedure: random_symplectic_element
// exp(J S) for random symmetric S.
inline SymplecticElement random_symplectic_element(long n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  RealMat s(2 * n, 2 * n);
  for (long r = 0; r < 2 * n; ++r)
    for (long c = r; c < 2 * n; ++c) s(r, c) = s(c, r) = 0.4 * g(rng);
  RealMat x = standard_J(n) * s;
  return {x.exp()};
}

// Procedure: rotation_element
// exp(theta J) for n = 1-style anchors (block rotation in every plane).
inline SymplecticElement rotation_element(long n, double theta) {
  const RealMat J = standard_J(n);
  RealMat x = theta * J;
  return {x.exp()};
}

// Procedure: splitting_check
// Whether the restriction of the metaplectic cover splits over G': fails
// exactly for Sp_{2m}(R) with m odd and for U_{p,q} with p+q odd.
inline bool splitting_check(long n_or_dprime, char family) {
  switch (family) {
    case 'S': return n_or_dprime % 2 == 0;  // Sp_{2m}(R), argument m
    case 'U': return n_or_dprime % 2 == 0;  // U_{p,q}, argument p+q
    case 'O': return true;                  // O*_{2d'}
  }
  throw std::invalid_argument("splitting_check: family must be S, U or O");
}

}  // namespace howe
