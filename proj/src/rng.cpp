#include "stcount/rng.hpp"

#include "stcount/common.hpp"

namespace stcount {

std::uint64_t Rng::scramble(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::stream(std::uint64_t id) const {
  return Rng(scramble(seed_ ^ scramble(id + 0x636f756e74ULL)));
}

Rng Rng::stream(std::string_view label) const {
  // FNV-1a over the label, then mixed with the root seed.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return stream(h);
}

std::int64_t Rng::negbin(double mu, double psi) {
  if (psi <= 0.0) throw DataError("negbin dispersion psi must be positive");
  const double size = 1.0 / psi;
  const double g = gamma(size, mu / size);
  return poisson(g);
}

}  // namespace stcount
