// Seeded random number generation with serialisable state, one instance per
// chain. Distribution objects are constructed per call so the stream is a
// pure function of the engine state.
#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace sgvar {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// U(0,1).
  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  /// N(0,1).
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  /// Gamma with shape-rate parameterisation.
  double gamma(double shape, double rate) {
    return std::gamma_distribution<double>(shape, 1.0 / rate)(engine_);
  }

  double beta(double a, double b) {
    const double x = gamma(a, 1.0);
    const double y = gamma(b, 1.0);
    return x / (x + y);
  }

  double chi_squared(double df) { return gamma(df / 2.0, 0.5); }

  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer on [lo, hi] inclusive.
  long uniform_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
  }

  /// Derives an independent substream seed for (seed, index); splitmix64
  /// finaliser. Used for per-chain and per-grid-cell streams.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::string serialize() const;
  static Rng deserialize(const std::string& state);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sgvar
