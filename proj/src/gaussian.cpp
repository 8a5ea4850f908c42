#include "pointdisc/gaussian.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "pointdisc/chernoff.hpp"
#include "pointdisc/quadrature.hpp"

namespace pointdisc {

namespace {

constexpr double kNuSlack = 1e-12;

// (x+1)^p - (x-1)^p and (x+1)^p + (x-1)^p without cancellation for small p.
// x == 1 works out through expm1(-inf) = -1.
double pow_diff(double p, double x) {
  return std::expm1(p * std::log(x + 1.0)) - std::expm1(p * std::log(x - 1.0));
}

double pow_sum(double p, double x) {
  return 2.0 + std::expm1(p * std::log(x + 1.0)) + std::expm1(p * std::log(x - 1.0));
}

void check_gp_args(double p, double x, const char* who) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument(std::string(who) + ": p must be > 0");
  if (!(x >= 1.0)) throw std::invalid_argument(std::string(who) + ": x must be >= 1");
}

}  // namespace

double g_factor(double p, double x) {
  check_gp_args(p, x, "g_factor");
  return std::exp2(p) / pow_diff(p, x);
}

double lambda_factor(double p, double x) {
  check_gp_args(p, x, "lambda_factor");
  return pow_sum(p, x) / pow_diff(p, x);
}

GaussianHypothesis make_gaussian(Eigen::VectorXd nu, Eigen::MatrixXd mix) {
  const auto n = nu.size();
  if (n < 1) throw std::invalid_argument("make_gaussian: need at least one mode");
  if (mix.rows() != n || mix.cols() != n) throw std::invalid_argument("make_gaussian: mix shape mismatch");
  for (Eigen::Index k = 0; k < n; ++k) {
    if (nu[k] < 1.0 - kNuSlack) throw std::invalid_argument("make_gaussian: symplectic eigenvalue below vacuum");
    if (nu[k] < 1.0) nu[k] = 1.0;
  }
  const double ortho_defect = (mix * mix.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (ortho_defect > 1e-10) throw std::invalid_argument("make_gaussian: mix is not orthogonal");
  return GaussianHypothesis{std::move(nu), std::move(mix)};
}

double q_of_s(const GaussianHypothesis& h0, const GaussianHypothesis& h1, double s) {
  const int n = h0.modes();
  if (h1.modes() != n) throw std::invalid_argument("q_of_s: mode count mismatch");
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("q_of_s: s must be in (0,1)");

  Eigen::VectorXd lam0(n), lam1(n);
  double log_g = 0.0;
  for (int k = 0; k < n; ++k) {
    lam0[k] = lambda_factor(s, h0.nu[k]);
    lam1[k] = lambda_factor(1.0 - s, h1.nu[k]);
    log_g += std::log(g_factor(s, h0.nu[k])) + std::log(g_factor(1.0 - s, h1.nu[k]));
  }
  const Eigen::MatrixXd m0 = h0.mix * lam0.asDiagonal() * h0.mix.transpose();
  const Eigen::MatrixXd m1 = h1.mix * lam1.asDiagonal() * h1.mix.transpose();
  const Eigen::MatrixXd sum = m0 + m1;
  const double det_block = sum.determinant();
  if (!(det_block > 0.0)) throw std::runtime_error("q_of_s: singular covariance sum");

  // Cross-check the factored determinant against the full 2n-dim form.
  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  full.topLeftCorner(n, n) = sum;
  full.bottomRightCorner(n, n) = sum;
  const double det_full = full.determinant();
  if (std::abs(std::sqrt(det_full) - det_block) > 1e-8 * det_block) {
    throw std::runtime_error("q_of_s: quadrature-block factorization check failed");
  }

  const double log_q = n * std::log(2.0) + log_g - std::log(det_block);
  return std::exp(log_q);
}

namespace {

// Endpoint limit of Q(s) at s -> 0 (or s -> 1) via a shrinking epsilon
// sequence and polynomial extrapolation; the sequence must be settling.
double endpoint_limit(const GaussianHypothesis& h0, const GaussianHypothesis& h1, bool at_one) {
  const std::array<double, 3> eps = {1e-3, 1e-5, 1e-7};
  std::array<double, 3> val{};
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const double s = at_one ? 1.0 - eps[i] : eps[i];
    val[i] = q_of_s(h0, h1, s);
  }
  const double d01 = std::abs(val[1] - val[0]);
  const double d12 = std::abs(val[2] - val[1]);
  if (d12 > 2.0 * d01 + 1e-12) {
    throw std::runtime_error("quantum_exponent: endpoint limit sequence not settling");
  }
  return extrapolate_to_zero(eps, val);
}

}  // namespace

QcbResult quantum_exponent_pair(const GaussianHypothesis& h0, const GaussianHypothesis& h1) {
  const double q_at_zero = endpoint_limit(h0, h1, false);
  const double q_at_one = endpoint_limit(h0, h1, true);
  const auto objective = [&](double s) {
    if (s <= 0.0) return q_at_zero;
    if (s >= 1.0) return q_at_one;
    return q_of_s(h0, h1, s);
  };
  const OptimumOnUnitInterval opt = optimize_unit_interval(objective);
  QcbResult result;
  result.q_min = std::min(opt.value, 1.0);
  result.s_star = opt.x;
  result.exponent = std::max(0.0, -std::log(result.q_min));
  return result;
}

GaussianHypothesis hypothesis_h0(const ModeGeometry& geom, double n0) {
  (void)geom;
  if (!(n0 > 0.0)) throw std::invalid_argument("hypothesis_h0: n0 must be > 0");
  Eigen::VectorXd nu(3);
  nu << 2.0 * n0 + 1.0, 1.0, 1.0;
  return make_gaussian(nu, Eigen::MatrixXd::Identity(3, 3));
}

GaussianHypothesis hypothesis_h1(const ModeGeometry& geom, double n0) {
  if (!(n0 > 0.0)) throw std::invalid_argument("hypothesis_h1: n0 must be > 0");
  if (std::abs(geom.n1 + geom.n2 - n0) > 1e-12 * std::max(1.0, n0)) {
    throw std::invalid_argument("hypothesis_h1: geometry was built for a different n0");
  }
  Eigen::VectorXd nu(3);
  nu << 2.0 * geom.n1 + 1.0, 2.0 * geom.n2 + 1.0, 1.0;
  Eigen::MatrixXd mix(3, 3);
  mix << geom.a, 0.0, -geom.b,
         0.0,    1.0,  0.0,
         geom.b, 0.0,  geom.a;
  GaussianHypothesis h = make_gaussian(nu, mix);

  // The quadrature block must reproduce the covariance assembled from the
  // mode overlaps: phi1 mean = eta n1, phi3 mean = (1-eta) n1, phi2 mean =
  // n2, and cross term n0 sinc(mu) B.
  Eigen::MatrixXd expected(3, 3);
  const double m11 = 2.0 * (geom.eta * geom.n1) + 1.0;
  const double m22 = 2.0 * geom.n2 + 1.0;
  const double m33 = 2.0 * ((1.0 - geom.eta) * geom.n1) + 1.0;
  const double m13 = n0 * geom.s1 * geom.B;
  expected << m11, 0.0, m13,
              0.0, m22, 0.0,
              m13, 0.0, m33;
  const double defect = (h.quad_block() - expected).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw std::runtime_error("hypothesis_h1: covariance reconstruction check failed");
  }
  return h;
}

QcbResult quantum_exponent(double mu, double n0) {
  const ModeGeometry geom = mode_geometry(mu, n0);
  return quantum_exponent_pair(hypothesis_h0(geom, n0), hypothesis_h1(geom, n0));
}

double normalized_quantum_exponent(double mu) {
  const std::array<double, 2> n0 = {1e-5, 1e-6};
  const double za = quantum_exponent(mu, n0[0]).exponent / n0[0];
  const double zb = quantum_exponent(mu, n0[1]).exponent / n0[1];
  const double scale = std::max({std::abs(za), std::abs(zb), 1e-9});
  if (std::abs(za - zb) > 1e-5 * scale) {
    throw std::runtime_error("normalized_quantum_exponent: small-n0 limit not converged");
  }
  return extrapolate_to_zero(n0, std::array<double, 2>{za, zb});
}

QcbResult two_mode_qcb(double n1, double n2, double eta) {
  if (!(n1 > 0.0 && n2 > 0.0)) throw std::invalid_argument("two_mode_qcb: thermal means must be > 0");
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("two_mode_qcb: eta must be in [0,1]");
  Eigen::VectorXd nu0(2), nu1(2);
  nu0 << 2.0 * n1 + 1.0, 1.0;
  nu1 << 2.0 * n2 + 1.0, 1.0;
  const double root_eta = std::sqrt(eta);
  const double root_rest = std::sqrt(1.0 - eta);
  Eigen::MatrixXd rot(2, 2);
  rot << root_eta, root_rest,
         -root_rest, root_eta;
  const GaussianHypothesis h0 = make_gaussian(nu0, Eigen::MatrixXd::Identity(2, 2));
  const GaussianHypothesis h1 = make_gaussian(nu1, rot);
  return quantum_exponent_pair(h0, h1);
}

}  // namespace pointdisc
