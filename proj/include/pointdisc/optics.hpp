#pragma once

#include <vector>

namespace pointdisc {

/// Free parameters of the discrimination problem: normalized half-angular
/// separation mu, mean photon number per temporal mode n0, and the number of
/// temporal modes m collected over the integration time.
struct SceneParams {
  double mu = 0.0;
  double n0 = 1e-3;
  long m = 1;

  void validate() const;
  double total_photons() const { return n0 * static_cast<double>(m); }
};

/// Overlap constants of the three aperture modes, derived from mu alone
/// except for the thermal occupations n1, n2 which scale with n0.
///
/// a and b are the eigenvector entries of the H1 covariance block, eta = a^2
/// is the beamsplitter transmissivity that decorrelates the H1 state, and
/// n1 + n2 = n0 splits the per-mode energy between the two thermal modes.
struct ModeGeometry {
  double s1 = 1.0;   // sinc(mu)
  double s2 = 1.0;   // sinc(2 mu)
  double A = 2.0;    // 2 sinc(mu)
  double B = 0.0;    // sqrt(2 (1 + sinc 2mu - 2 sinc^2 mu))
  double a = 1.0;
  double b = 0.0;
  double eta = 1.0;  // 2 sinc^2(mu) / (1 + sinc 2mu)
  double n1 = 0.0;   // n0 (1 + sinc 2mu) / 2
  double n2 = 0.0;   // n0 - n1
  double n0 = 0.0;
};

/// sin(pi x)/(pi x) with exact zeros at nonzero integers and a series
/// evaluation near the removable singularity.
double sinc(double x);

/// sin(pi x) via argument reduction to |r| <= 1/2; exact at integers.
double sin_pi(double x);

/// Image-plane photon densities in the scaled coordinate y.
double density_p0(double y);
double density_p1(double y, double mu);

/// Exact integrals of the densities over [lo, hi] (sine-integral closed form).
double interval_mass_p0(double lo, double hi);
double interval_mass_p1(double lo, double hi, double mu);

/// Cumulative integral of sinc^2 from 0 to t; odd in t, -> 1/2 as t -> inf.
double sinc_sq_integral(double t);

ModeGeometry mode_geometry(double mu, double n0);

/// Pixel masses q_k[n] of both densities over a uniform grid of width delta
/// with one pixel centered at y = 0. Index n runs over [-half_extent,
/// half_extent]; tail_mass holds the exact probability outside the grid.
struct PixelGrid {
  double delta = 0.0;
  long half_extent = 0;
  std::vector<double> q0;  // size 2*half_extent+1, entry i is pixel i-half_extent
  std::vector<double> q1;
  double tail_mass0 = 0.0;
  double tail_mass1 = 0.0;

  double q0_at(long n) const { return q0[static_cast<std::size_t>(n + half_extent)]; }
  double q1_at(long n) const { return q1[static_cast<std::size_t>(n + half_extent)]; }
  double edge() const { return (static_cast<double>(half_extent) + 0.5) * delta; }
};

/// Builds the grid wide enough that both tail masses stay below tail_tol,
/// using the envelope p(y) <= 1/(pi^2 (|y|-mu)^2) to size the extent.
/// Rejects delta <= 0, tail_tol outside (0,1), and extents beyond the
/// supported pixel budget (see implementation constant).
PixelGrid pixel_masses(double delta, double mu, double tail_tol);

}  // namespace pointdisc
