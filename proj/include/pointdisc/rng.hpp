#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pointdisc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256++ with counter-based stream derivation: a stream is fully
// determined by (root seed, a, b, c), so parallel consumers never share state.
class RngStream {
public:
  RngStream() : RngStream(0, 0, 0, 0) {}

  RngStream(std::uint64_t root, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = root;
    h ^= splitmix64(a += 0x9e3779b97f4a7c15ULL);
    h ^= splitmix64(b += 0xbf58476d1ce4e5b9ULL) * 3;
    h ^= splitmix64(c += 0x94d049bb133111ebULL) * 5;
    for (auto& word : s_) word = splitmix64(h);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in the open interval (0,1).
  double u01() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  bool bernoulli(double p) { return u01() < p; }

  /// Poisson count by inversion; large means are split into halves so the
  /// running product never underflows.
  long poisson(double mean) {
    if (mean < 0) throw std::invalid_argument("poisson: negative mean");
    if (mean == 0) return 0;
    if (mean > 500.0) return poisson(mean * 0.5) + poisson(mean - mean * 0.5);
    double u = u01();
    double p = std::exp(-mean);
    double cdf = p;
    long k = 0;
    while (u > cdf && k < 100000) {
      ++k;
      p *= mean / static_cast<double>(k);
      cdf += p;
    }
    return k;
  }

  /// Bose-Einstein (thermal) count with mean n: P(k) = n^k/(1+n)^{k+1}.
  long bose_einstein(double mean) {
    if (mean < 0) throw std::invalid_argument("bose_einstein: negative mean");
    if (mean == 0) return 0;
    const double lp = std::log(mean / (1.0 + mean));
    return static_cast<long>(std::floor(std::log(u01()) / lp));
  }

  long binomial(long trials, double p) {
    long k = 0;
    for (long i = 0; i < trials; ++i) k += bernoulli(p) ? 1 : 0;
    return k;
  }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

}  // namespace pointdisc
