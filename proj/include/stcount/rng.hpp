#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace stcount {

// Seeded random stream. Independent sub-streams are derived from a root
// seed and a label/counter, so concurrent workers draw from disjoint
// streams regardless of scheduling order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(scramble(seed)) {}

  // Derived stream: deterministic function of (root seed, id).
  Rng stream(std::uint64_t id) const;
  Rng stream(std::string_view label) const;

  std::uint64_t seed() const { return seed_; }
  std::mt19937_64& engine() { return gen_; }

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }
  double normal(double mean = 0.0, double sd = 1.0) {
    return std::normal_distribution<double>(mean, sd)(gen_);
  }
  double gamma(double shape, double scale) {
    return std::gamma_distribution<double>(shape, scale)(gen_);
  }
  std::int64_t poisson(double mean) {
    return std::poisson_distribution<std::int64_t>(mean)(gen_);
  }
  // Gamma-Poisson mixture with Var = mu * (1 + psi * mu), size 1/psi.
  std::int64_t negbin(double mu, double psi);
  // Inverse-gamma draw: 1/X with X ~ Gamma(shape, rate).
  double inverse_gamma(double shape, double rate_b) {
    return 1.0 / std::gamma_distribution<double>(shape, 1.0 / rate_b)(gen_);
  }

 private:
  static std::uint64_t scramble(std::uint64_t x);  // splitmix64 finalizer
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace stcount
