#include "stcount/dist.hpp"

#include <cmath>

#include "stcount/common.hpp"

namespace stcount {

double log_poisson_pmf(std::int64_t y, double mu) {
  if (!(mu > 0.0)) throw DataError("Poisson mean must be positive");
  if (y < 0) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(y) * std::log(mu) - mu - std::lgamma(static_cast<double>(y) + 1.0);
}

double log_negbin_pmf(std::int64_t y, double mu, double psi) {
  if (!(mu > 0.0)) throw DataError("NegBin mean must be positive");
  if (!(psi > 0.0)) throw DataError("NegBin dispersion psi must be positive");
  if (y < 0) return -std::numeric_limits<double>::infinity();
  const double r = 1.0 / psi;
  const double yd = static_cast<double>(y);
  return std::lgamma(yd + r) - std::lgamma(r) - std::lgamma(yd + 1.0) +
         r * std::log(r / (r + mu)) + yd * std::log(mu / (r + mu));
}

namespace {

// Quantile by forward CDF accumulation in log space for stability.
template <typename LogPmf>
std::int64_t quantile_by_summation(double p, double mean, double sd, LogPmf log_pmf) {
  if (!(p > 0.0 && p < 1.0)) throw DataError("quantile probability must be in (0,1)");
  const std::int64_t cap = static_cast<std::int64_t>(mean + 30.0 * sd + 200.0);
  double cdf = 0.0;
  for (std::int64_t y = 0; y <= cap; ++y) {
    cdf += std::exp(log_pmf(y));
    if (cdf >= p) return y;
  }
  return cap;  // p in the extreme upper tail beyond the accumulation cap
}

}  // namespace

std::int64_t poisson_quantile(double p, double mu) {
  return quantile_by_summation(p, mu, std::sqrt(mu),
                               [mu](std::int64_t y) { return log_poisson_pmf(y, mu); });
}

std::int64_t negbin_quantile(double p, double mu, double psi) {
  const double sd = std::sqrt(mu * (1.0 + psi * mu));
  return quantile_by_summation(
      p, mu, sd, [mu, psi](std::int64_t y) { return log_negbin_pmf(y, mu, psi); });
}

double poisson_cdf(std::int64_t y, double mu) {
  double cdf = 0.0;
  for (std::int64_t i = 0; i <= y; ++i) cdf += std::exp(log_poisson_pmf(i, mu));
  return cdf;
}

double digamma(double x) {
  if (!(x > 0.0)) throw DataError("digamma defined here for x > 0 only");
  // Recurrence to push the argument above 6, then the asymptotic series.
  double result = 0.0;
  while (x < 6.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv -
            inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 / 240.0)));
  return result;
}

}  // namespace stcount
