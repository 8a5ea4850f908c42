#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace pointdisc {

/// Optimized Chernoff exponent. `normalized` marks per-photon exponents
/// (C_mu style); `infinite` marks perfectly distinguishable inputs, in which
/// case `exponent` is meaningless and bound() is zero.
struct ChernoffResult {
  double exponent = 0.0;
  double s_star = 0.0;
  bool normalized = false;
  bool infinite = false;

  /// 1/2 exp(-m xi). For normalized exponents pass m*n0 (total photons).
  double bound(double m) const;
};

/// 1/2 exp(-m * exponent); exponent must be finite and >= 0, m >= 0.
double bound_at(double exponent, double m);

struct OptimumOnUnitInterval {
  double x = 0.0;
  double value = 0.0;
};

/// Global minimum of f over [0,1]: 65-point grid scan (endpoints included;
/// the caller bakes endpoint limits into f) followed by golden-section
/// refinement of the best bracket to |x - x*| <= tol for unimodal f.
/// Throws if f evaluates to a non-finite value.
OptimumOnUnitInterval optimize_unit_interval(const std::function<double(double)>& f,
                                             double tol = 1e-10);

/// Per-photon Chernoff exponent of the continuum image-plane detector:
/// C_mu = max_s [1 - integral p0^s p1^(1-s) dy].
ChernoffResult continuum_exponent(double mu);

/// Same but the truncation-radius set doubled, for convergence checks.
ChernoffResult continuum_exponent_refined(double mu);

/// Per-photon Chernoff exponent of the pixelated array with pixel width
/// delta. Pixels are materialized out to the tail_tol envelope; the omitted
/// far-pixel terms are nonnegative, so the result is a (tight) lower bound.
ChernoffResult pixelated_exponent(double mu, double delta, double tail_tol = 2e-5);

/// Finitely supported pmf over integer outcome tuples. `dims` says how many
/// of the key slots are meaningful; unused slots must be zero.
struct DiscretePmf {
  int dims = 1;
  std::vector<std::array<int, 3>> keys;  // sorted lexicographically, unique
  std::vector<double> prob;
  double tail_mass = 0.0;

  void finalize();  // sort keys, drop nonpositive entries, recompute tail
  double total() const;
};

/// Chernoff exponent between two finitely supported pmfs:
/// xi = -log min_s sum_k p(k)^s q(k)^(1-s), with the s -> 0 and s -> 1
/// endpoints evaluated as support-restricted masses. Disjoint supports give
/// an `infinite` result. Throws on mismatched dims or tail masses > 1e-9.
ChernoffResult discrete_chernoff(const DiscretePmf& p, const DiscretePmf& q);

/// Coarsens counts to on/off detection (every key component clipped to 0/1).
DiscretePmf clip_to_onoff(const DiscretePmf& pmf);

}  // namespace pointdisc
