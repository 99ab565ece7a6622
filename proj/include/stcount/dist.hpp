#pragma once

#include <cstdint>

namespace stcount {

// log Poisson pmf at y with mean mu > 0.
double log_poisson_pmf(std::int64_t y, double mu);

// log Negative Binomial pmf with mean mu and Var = mu * (1 + psi * mu),
// i.e. size r = 1/psi.
double log_negbin_pmf(std::int64_t y, double mu, double psi);

// Smallest y with CDF(y) >= p. Used for central predictive intervals.
std::int64_t poisson_quantile(double p, double mu);
std::int64_t negbin_quantile(double p, double mu, double psi);

double poisson_cdf(std::int64_t y, double mu);

double digamma(double x);

}  // namespace stcount
