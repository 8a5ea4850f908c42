#include "pointdisc/chernoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "pointdisc/optics.hpp"
#include "pointdisc/quadrature.hpp"

namespace pointdisc {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kGolden = 0.6180339887498948482;

double require_finite(double v) {
  if (!std::isfinite(v)) throw std::runtime_error("optimize_unit_interval: non-finite objective value");
  return v;
}
}  // namespace

double bound_at(double exponent, double m) {
  if (!(exponent >= 0.0) || !std::isfinite(exponent)) throw std::invalid_argument("bound_at: exponent must be finite and >= 0");
  if (!(m >= 0.0)) throw std::invalid_argument("bound_at: m must be >= 0");
  return 0.5 * std::exp(-m * exponent);
}

double ChernoffResult::bound(double m) const {
  if (infinite) return 0.0;
  return bound_at(exponent, m);
}

OptimumOnUnitInterval optimize_unit_interval(const std::function<double(double)>& f, double tol) {
  constexpr int kGridPoints = 65;
  double best_x = 0.0;
  double best_v = std::numeric_limits<double>::infinity();
  std::array<double, kGridPoints> values{};
  for (int i = 0; i < kGridPoints; ++i) {
    const double x = static_cast<double>(i) / (kGridPoints - 1);
    values[i] = require_finite(f(x));
    if (values[i] < best_v) {
      best_v = values[i];
      best_x = x;
    }
  }
  const int best_i = static_cast<int>(std::lround(best_x * (kGridPoints - 1)));
  double lo = std::max(0.0, (best_i - 1.0) / (kGridPoints - 1));
  double hi = std::min(1.0, (best_i + 1.0) / (kGridPoints - 1));

  // Golden-section refinement of the bracket.
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = require_finite(f(x1));
  double f2 = require_finite(f(x2));
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = require_finite(f(x1));
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = require_finite(f(x2));
    }
  }
  const double xin = f1 <= f2 ? x1 : x2;
  const double fin = std::min(f1, f2);
  if (fin < best_v) {
    best_v = fin;
    best_x = xin;
  }
  return {best_x, best_v};
}

// ---------------------------------------------------------------------------
// Continuum exponent.
//
// C_mu(s) = 1 - J(s) with J(s) = integral p0^s p1^(1-s) dy. The integrand is
// even, decays like 1/y^2 with a unit-period oscillation, and has |y-n|^(2s)
// cusps at the zeros of the densities. We integrate over half-unit panels
// (every density zero is a panel edge) with tanh-sinh nodes, record partial
// integrals at a doubling set of integer radii, and extrapolate the radius
// to infinity; at integer radii the truncation error is a smooth series in
// 1/Y, so polynomial extrapolation removes it.
// ---------------------------------------------------------------------------

namespace {

struct ContinuumWorkspace {
  std::vector<double> ln_p0;
  std::vector<double> ln_p1;
  std::vector<double> weight;
  std::vector<std::size_t> checkpoint_end;  // node count up to each radius
  std::vector<double> inv_radius;

  double cross_integral(double s) const {
    KahanSum acc;
    std::vector<double> partial;
    partial.reserve(inv_radius.size());
    std::size_t next_checkpoint = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) {
      while (next_checkpoint < checkpoint_end.size() && i == checkpoint_end[next_checkpoint]) {
        partial.push_back(2.0 * acc.value());
        ++next_checkpoint;
      }
      acc.add(weight[i] * std::exp(s * ln_p0[i] + (1.0 - s) * ln_p1[i]));
    }
    while (partial.size() < inv_radius.size()) partial.push_back(2.0 * acc.value());
    return extrapolate_to_zero(inv_radius, partial);
  }
};

ContinuumWorkspace make_continuum_workspace(double mu, long base_radius) {
  long r0 = base_radius;
  while (static_cast<double>(r0) < 8.0 * std::max(1.0, mu)) r0 *= 2;
  const std::array<long, 4> radii = {r0, 2 * r0, 4 * r0, 8 * r0};
  const long y_max = radii.back();

  ContinuumWorkspace ws;
  ws.inv_radius.reserve(radii.size());
  for (long r : radii) ws.inv_radius.push_back(1.0 / static_cast<double>(r));

  std::size_t radius_idx = 0;
  for (long k = 0; k < 2 * y_max; ++k) {
    const double a = 0.5 * static_cast<double>(k);
    const double b = 0.5 * static_cast<double>(k + 1);
    if (radius_idx < radii.size() && a == static_cast<double>(radii[radius_idx])) {
      ws.checkpoint_end.push_back(ws.weight.size());
      ++radius_idx;
    }
    const int level = (b <= 64.0) ? 5 : 3;
    const TanhSinhNodes& nodes = tanh_sinh_nodes(level);
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    for (std::size_t i = 0; i < nodes.t.size(); ++i) {
      const double y = mid + rad * nodes.t[i];
      const double p0 = density_p0(y);
      const double p1 = density_p1(y, mu);
      if (p0 <= 0.0 || p1 <= 0.0) continue;  // exact zeros sit on panel edges
      ws.ln_p0.push_back(std::log(p0));
      ws.ln_p1.push_back(std::log(p1));
      ws.weight.push_back(rad * nodes.w[i]);
    }
  }
  return ws;
}

ChernoffResult continuum_exponent_impl(double mu, long base_radius) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw std::invalid_argument("continuum_exponent: mu must be >= 0");
  const ContinuumWorkspace ws = make_continuum_workspace(mu, base_radius);
  const auto objective = [&ws](double s) {
    if (s <= 0.0 || s >= 1.0) return 1.0;  // both densities are normalized
    return ws.cross_integral(s);
  };
  const OptimumOnUnitInterval opt = optimize_unit_interval(objective);
  ChernoffResult result;
  result.exponent = std::max(0.0, 1.0 - opt.value);
  result.s_star = opt.x;
  result.normalized = true;
  return result;
}

}  // namespace

ChernoffResult continuum_exponent(double mu) { return continuum_exponent_impl(mu, 256); }

ChernoffResult continuum_exponent_refined(double mu) { return continuum_exponent_impl(mu, 512); }

ChernoffResult pixelated_exponent(double mu, double delta, double tail_tol) {
  if (!(delta > 0.0)) throw std::invalid_argument("pixelated_exponent: delta must be > 0");
  const PixelGrid grid = pixel_masses(delta, mu, tail_tol);

  const std::size_t count = grid.q0.size();
  std::vector<double> q0(count), q1(count), lq0(count), lq1(count);
  std::size_t used = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const double a = grid.q0[i];
    const double b = grid.q1[i];
    if (a <= 0.0 && b <= 0.0) continue;
    q0[used] = a;
    q1[used] = b;
    lq0[used] = a > 0.0 ? std::log(a) : -std::numeric_limits<double>::infinity();
    lq1[used] = b > 0.0 ? std::log(b) : -std::numeric_limits<double>::infinity();
    ++used;
  }

  const auto negative_divergence = [&](double s) {
    if (s <= 0.0 || s >= 1.0) return 0.0;
    KahanSum acc;
    for (std::size_t i = 0; i < used; ++i) {
      double cross = 0.0;
      if (q0[i] > 0.0 && q1[i] > 0.0) cross = std::exp(s * lq0[i] + (1.0 - s) * lq1[i]);
      acc.add(s * q0[i] + (1.0 - s) * q1[i] - cross);
    }
    return -acc.value();
  };
  const OptimumOnUnitInterval opt = optimize_unit_interval(negative_divergence);
  ChernoffResult result;
  result.exponent = std::max(0.0, -opt.value);
  result.s_star = opt.x;
  result.normalized = true;
  return result;
}

// ---------------------------------------------------------------------------
// Discrete pmfs.
// ---------------------------------------------------------------------------

void DiscretePmf::finalize() {
  std::map<std::array<int, 3>, double> merged;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (prob[i] > 0.0) merged[keys[i]] += prob[i];
  }
  keys.clear();
  prob.clear();
  double total_mass = 0.0;
  for (const auto& [key, p] : merged) {
    keys.push_back(key);
    prob.push_back(p);
    total_mass += p;
  }
  tail_mass = std::max(0.0, 1.0 - total_mass);
}

double DiscretePmf::total() const {
  KahanSum acc;
  for (double p : prob) acc.add(p);
  return acc.value();
}

DiscretePmf clip_to_onoff(const DiscretePmf& pmf) {
  DiscretePmf out;
  out.dims = pmf.dims;
  out.keys.reserve(pmf.keys.size());
  out.prob.reserve(pmf.prob.size());
  for (std::size_t i = 0; i < pmf.keys.size(); ++i) {
    std::array<int, 3> key = pmf.keys[i];
    for (int& k : key) k = std::min(k, 1);
    out.keys.push_back(key);
    out.prob.push_back(pmf.prob[i]);
  }
  out.finalize();
  out.tail_mass = pmf.tail_mass;
  return out;
}

ChernoffResult discrete_chernoff(const DiscretePmf& p, const DiscretePmf& q) {
  if (p.dims != q.dims) throw std::invalid_argument("discrete_chernoff: mismatched key spaces");
  if (p.tail_mass > 1e-9 || q.tail_mass > 1e-9) {
    throw std::invalid_argument("discrete_chernoff: pmf tail mass exceeds 1e-9");
  }

  // Walk the two sorted supports; only the common support contributes for
  // s in (0,1), and the endpoint limits are the restricted masses.
  std::vector<double> ln_p, ln_q;
  KahanSum mass_q_on_p, mass_p_on_q;
  std::size_t i = 0, j = 0;
  while (i < p.keys.size() && j < q.keys.size()) {
    if (p.keys[i] < q.keys[j]) {
      ++i;
    } else if (q.keys[j] < p.keys[i]) {
      ++j;
    } else {
      ln_p.push_back(std::log(p.prob[i]));
      ln_q.push_back(std::log(q.prob[j]));
      mass_q_on_p.add(q.prob[j]);
      mass_p_on_q.add(p.prob[i]);
      ++i;
      ++j;
    }
  }

  ChernoffResult result;
  if (ln_p.empty()) {
    result.infinite = true;
    result.s_star = 0.5;
    return result;
  }

  const double at_zero = mass_q_on_p.value();
  const double at_one = mass_p_on_q.value();
  const auto objective = [&](double s) {
    if (s <= 0.0) return at_zero;
    if (s >= 1.0) return at_one;
    KahanSum acc;
    for (std::size_t k = 0; k < ln_p.size(); ++k) {
      acc.add(std::exp(s * ln_p[k] + (1.0 - s) * ln_q[k]));
    }
    return acc.value();
  };
  const OptimumOnUnitInterval opt = optimize_unit_interval(objective);
  result.exponent = std::max(0.0, -std::log(opt.value));
  result.s_star = opt.x;
  return result;
}

}  // namespace pointdisc
