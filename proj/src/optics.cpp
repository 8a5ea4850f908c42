#include "pointdisc/optics.hpp"

#include <gsl/gsl_sf_expint.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pointdisc {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
// Largest pixel count we are willing to materialize (both hypotheses).
constexpr long kMaxPixels = 80'000'000;
}  // namespace

void SceneParams::validate() const {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw std::invalid_argument("SceneParams: mu must be finite and >= 0");
  if (!(n0 > 0.0) || !std::isfinite(n0)) throw std::invalid_argument("SceneParams: n0 must be finite and > 0");
  if (m < 0) throw std::invalid_argument("SceneParams: m must be >= 0");
}

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double n = std::nearbyint(x);
  const double r = x - n;  // exact
  double s = std::sin(kPi * r);
  if (std::fmod(n, 2.0) != 0.0) s = -s;
  return s;
}

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double t2 = (kPi * x) * (kPi * x);
    return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0);
  }
  return sin_pi(x) / (kPi * x);
}

double density_p0(double y) {
  const double s = sinc(y);
  return s * s;
}

double density_p1(double y, double mu) {
  const double sm = sinc(y - mu);
  const double sp = sinc(y + mu);
  return 0.5 * (sm * sm + sp * sp);
}

double sinc_sq_integral(double t) {
  const double at = std::abs(t);
  if (at < 1e-4) {
    return t * (1.0 - (kPi * t) * (kPi * t) / 9.0);
  }
  const double s = sin_pi(t);
  return -s * s / (kPi * kPi * t) + gsl_sf_Si(2.0 * kPi * t) / kPi;
}

double interval_mass_p0(double lo, double hi) {
  return sinc_sq_integral(hi) - sinc_sq_integral(lo);
}

double interval_mass_p1(double lo, double hi, double mu) {
  const double minus = sinc_sq_integral(hi - mu) - sinc_sq_integral(lo - mu);
  const double plus = sinc_sq_integral(hi + mu) - sinc_sq_integral(lo + mu);
  return 0.5 * (minus + plus);
}

ModeGeometry mode_geometry(double mu, double n0) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw std::invalid_argument("mode_geometry: mu must be >= 0");
  if (!(n0 > 0.0) || !std::isfinite(n0)) throw std::invalid_argument("mode_geometry: n0 must be > 0");

  ModeGeometry g;
  g.n0 = n0;
  g.s1 = sinc(mu);
  g.s2 = sinc(2.0 * mu);
  g.A = 2.0 * g.s1;
  // 1 + sinc(2mu) - 2 sinc^2(mu) vanishes to O(mu^4); clamp rounding residue.
  const double bsq = std::max(0.0, 1.0 + g.s2 - 2.0 * g.s1 * g.s1);
  g.B = std::sqrt(2.0 * bsq);
  const double denom = 1.0 + g.s2;  // >= 1 - 0.2172 * ... > 0.78 for all mu
  g.a = std::sqrt(2.0) * g.s1 / std::sqrt(denom);
  g.b = std::sqrt(bsq / denom);
  g.eta = std::clamp(g.a * g.a, 0.0, 1.0);
  g.n1 = n0 * denom / 2.0;
  g.n2 = n0 - g.n1;
  if (g.n2 < 0.0) g.n2 = 0.0;
  return g;
}

PixelGrid pixel_masses(double delta, double mu, double tail_tol) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("pixel_masses: delta must be > 0");
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw std::invalid_argument("pixel_masses: tail_tol must be in (0,1)");
  if (!(mu >= 0.0)) throw std::invalid_argument("pixel_masses: mu must be >= 0");

  // Two-sided envelope tail: 2/(pi^2 (Y - mu)) < tail_tol.
  const double y_needed = mu + 2.0 / (kPi * kPi * tail_tol);
  long half_extent = static_cast<long>(std::ceil((y_needed - 0.5 * delta) / delta));
  if (half_extent < 0) half_extent = 0;
  if (2 * half_extent + 1 > kMaxPixels) {
    throw std::invalid_argument("pixel_masses: requested tail_tol needs more pixels than supported");
  }

  PixelGrid grid;
  grid.delta = delta;
  grid.half_extent = half_extent;
  const std::size_t count = static_cast<std::size_t>(2 * half_extent + 1);
  grid.q0.assign(count, 0.0);
  grid.q1.assign(count, 0.0);

  for (long n = 0; n <= half_extent; ++n) {
    const double lo = (static_cast<double>(n) - 0.5) * delta;
    const double hi = (static_cast<double>(n) + 0.5) * delta;
    const double m0 = std::max(0.0, interval_mass_p0(lo, hi));
    const double m1 = std::max(0.0, interval_mass_p1(lo, hi, mu));
    grid.q0[static_cast<std::size_t>(half_extent + n)] = m0;
    grid.q0[static_cast<std::size_t>(half_extent - n)] = m0;  // densities are even
    grid.q1[static_cast<std::size_t>(half_extent + n)] = m1;
    grid.q1[static_cast<std::size_t>(half_extent - n)] = m1;
  }

  const double edge = grid.edge();
  grid.tail_mass0 = std::max(0.0, 1.0 - interval_mass_p0(-edge, edge));
  grid.tail_mass1 = std::max(0.0, 1.0 - interval_mass_p1(-edge, edge, mu));
  return grid;
}

}  // namespace pointdisc
