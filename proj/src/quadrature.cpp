#include "pointdisc/quadrature.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace pointdisc {

namespace {
constexpr double kPiHalf = 1.570796326794896619231321691639751442;
constexpr double kUmax = 3.6;  // weights beyond this are below 1e-24
constexpr int kMaxLevel = 10;

TanhSinhNodes build_nodes(int level) {
  TanhSinhNodes n;
  const double h = std::ldexp(1.0, -level);
  const long jmax = static_cast<long>(std::floor(kUmax / h));
  n.t.reserve(2 * jmax + 1);
  n.w.reserve(2 * jmax + 1);
  for (long j = -jmax; j <= jmax; ++j) {
    const double u = static_cast<double>(j) * h;
    const double sh = kPiHalf * std::sinh(u);
    const double t = std::tanh(sh);
    const double ch = std::cosh(sh);
    const double w = h * kPiHalf * std::cosh(u) / (ch * ch);
    n.t.push_back(t);
    n.w.push_back(w);
  }
  return n;
}
}  // namespace

const TanhSinhNodes& tanh_sinh_nodes(int level) {
  if (level < 0 || level > kMaxLevel) throw std::invalid_argument("tanh_sinh_nodes: bad level");
  static TanhSinhNodes cache[kMaxLevel + 1];
  static std::once_flag built[kMaxLevel + 1];
  std::call_once(built[level], [level] { cache[level] = build_nodes(level); });
  return cache[level];
}

double tanh_sinh_integrate(const std::function<double(double)>& f, double a, double b, int level) {
  const TanhSinhNodes& n = tanh_sinh_nodes(level);
  const double mid = 0.5 * (a + b);
  const double rad = 0.5 * (b - a);
  KahanSum acc;
  for (std::size_t i = 0; i < n.t.size(); ++i) {
    acc.add(n.w[i] * f(mid + rad * n.t[i]));
  }
  return rad * acc.value();
}

double tanh_sinh_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_level) {
  double prev = tanh_sinh_integrate(f, a, b, 2);
  for (int level = 3; level <= max_level; ++level) {
    const double cur = tanh_sinh_integrate(f, a, b, level);
    if (std::abs(cur - prev) <= tol) return cur;
    prev = cur;
  }
  return prev;
}

double extrapolate_to_zero(std::span<const double> x, std::span<const double> v) {
  if (x.size() != v.size() || x.empty()) throw std::invalid_argument("extrapolate_to_zero: size mismatch");
  const std::size_t n = x.size();
  double result = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double weight = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      weight *= -x[j] / (x[i] - x[j]);
    }
    result += weight * v[i];
  }
  return result;
}

}  // namespace pointdisc
