#pragma once

#include <Eigen/Dense>

#include "pointdisc/optics.hpp"

namespace pointdisc {

/// Zero-mean phase-insensitive n-mode Gaussian state: symplectic eigenvalues
/// nu (vacuum = 1, thermal mean N = 2N+1) plus the orthogonal mode mixing
/// that diagonalizes the single-quadrature covariance block. Both quadrature
/// blocks are equal and the cross block is zero, by construction.
struct GaussianHypothesis {
  Eigen::VectorXd nu;
  Eigen::MatrixXd mix;

  int modes() const { return static_cast<int>(nu.size()); }
  /// Single-quadrature covariance block mix diag(nu) mix^T (vacuum = 1).
  Eigen::MatrixXd quad_block() const { return mix * nu.asDiagonal() * mix.transpose(); }
};

/// Validates shapes, nu >= 1 (tiny slack clamped), and orthogonality of mix.
GaussianHypothesis make_gaussian(Eigen::VectorXd nu, Eigen::MatrixXd mix);

struct QcbResult {
  double q_min = 1.0;
  double s_star = 0.0;
  double exponent = 0.0;  // -log q_min
};

/// G_p(x) = 2^p / ((x+1)^p - (x-1)^p), evaluated via expm1 so it stays
/// accurate for p down to ~1e-9. Requires x >= 1 (vacuum), p > 0.
double g_factor(double p, double x);

/// Lambda_p(x) = ((x+1)^p + (x-1)^p) / ((x+1)^p - (x-1)^p); Lambda_1(x) = x.
double lambda_factor(double p, double x);

/// Tr(rho0^s rho1^(1-s)) for two hypotheses via the symplectic formula
///   Q(s) = 2^n prod_k G_s(nu0_k) G_{1-s}(nu1_k) / sqrt(det[V0(s)+V1(1-s)]).
/// The 2n x 2n determinant factors into the square of the single-quadrature
/// block determinant; both forms are computed and must agree.
double q_of_s(const GaussianHypothesis& h0, const GaussianHypothesis& h1, double s);

/// min_s Q(s) over [0,1]: interior grid + golden search plus both endpoint
/// limits evaluated on a shrinking epsilon sequence with extrapolation.
QcbResult quantum_exponent_pair(const GaussianHypothesis& h0, const GaussianHypothesis& h1);

/// H0 state of the three aperture modes: thermal(n0) in phi1, vacuum else.
GaussianHypothesis hypothesis_h0(const ModeGeometry& geom, double n0);

/// H1 state: thermal(n1) in the (phi1,phi3) eigenmode, thermal(n2) in phi2.
/// The constructor cross-checks mix diag(nu) mix^T against the covariance
/// block assembled from the mode overlaps and throws on mismatch.
GaussianHypothesis hypothesis_h1(const ModeGeometry& geom, double n0);

/// Quantum Chernoff exponent of the three-mode discrimination problem.
QcbResult quantum_exponent(double mu, double n0);

/// Z_mu = lim_{n0->0} xi_Q/n0, by evaluating at n0 = 1e-5 and 1e-6 and
/// extrapolating linearly; the two samples must agree to 1e-5 relative.
double normalized_quantum_exponent(double mu);

/// QCB for the two-mode problem: thermal(n1) x vacuum against thermal(n2)
/// x vacuum sent through a beamsplitter of transmissivity eta.
QcbResult two_mode_qcb(double n1, double n2, double eta);

}  // namespace pointdisc
