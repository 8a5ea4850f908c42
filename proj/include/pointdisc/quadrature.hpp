#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace pointdisc {

/// tanh-sinh abscissas/weights on (-1,1). Level L uses step h = 2^-L, which
/// doubles the node count per level; endpoint algebraic singularities decay
/// double-exponentially in the transformed variable.
struct TanhSinhNodes {
  std::vector<double> t;
  std::vector<double> w;
};

/// Cached node table for a level (thread-safe after first use of each level).
const TanhSinhNodes& tanh_sinh_nodes(int level);

/// Integrates f over [a, b] at a fixed tanh-sinh level.
double tanh_sinh_integrate(const std::function<double(double)>& f, double a, double b, int level);

/// Integrates f over [a, b], doubling the level until two successive levels
/// agree within tol (absolute) or max_level is reached.
double tanh_sinh_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_level = 7);

/// Polynomial extrapolation of v(x) to x = 0 given samples at nodes x (all
/// distinct, nonzero). Used for 1/Y truncation-radius and s-endpoint limits.
double extrapolate_to_zero(std::span<const double> x, std::span<const double> v);

/// Compensated (Kahan) accumulator for long positive sums.
class KahanSum {
public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace pointdisc
