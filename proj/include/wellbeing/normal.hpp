#pragma once

namespace wellbeing {

/// Standard normal distribution function, accurate in both tails.
double norm_cdf(double x);

/// Standard normal density.
double norm_pdf(double x);

/// Inverse of norm_cdf (Wichura's AS241 rational approximations, full
/// double precision). p must lie in (0, 1); p <= 0 or p >= 1 map to -+inf.
double norm_ppf(double p);

/// P(Z1 <= h, Z2 <= k) for standard bivariate normal with correlation rho.
/// Deterministic Gauss-Legendre evaluation of the single-integral reduction;
/// absolute error below 5e-16. Infinite arguments are handled.
double bvn_cdf(double h, double k, double rho);

}  // namespace wellbeing
