// Test-only reference implementations: brute-force and quadrature oracles
// kept independent of the library code paths they are used to check.
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <vector>

#include "wellbeing/copula.hpp"
#include "wellbeing/margins.hpp"

namespace oracles {

/// Adaptive Gauss-Kronrod-free quadrature: recursive Simpson with tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10, int max_depth = 30);

/// Tensor Gauss-Legendre on [a1,b1]x[a2,b2] with n nodes per axis.
double integrate2d(const std::function<double(double, double)>& f, double a1,
                   double b1, double a2, double b2, int n = 96);

/// Gauss-Legendre nodes/weights on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& x,
                    std::vector<double>& w);

/// Plain Monte Carlo estimate of P(Z <= upper), Z ~ N(0, sigma).
/// Returns {estimate, standard_error}.
std::pair<double, double> mc_mvn_cdf(const Eigen::VectorXd& upper,
                                     const Eigen::MatrixXd& sigma,
                                     long long n, std::uint64_t seed);

/// Random correlation matrix of dimension d (normalized Wishart-style).
Eigen::MatrixXd random_correlation(int d, std::uint64_t seed);

/// Random valid JointModel with moderate parameters.
wellbeing::JointModel random_joint_model(std::uint64_t seed);

/// Empirical Kolmogorov distance between a sample and a cdf on a grid.
double kolmogorov_distance(std::vector<double> sample,
                           const std::function<double(double)>& cdf);

/// Normal-scores (van der Waerden) correlation of two columns.
double normal_scores_correlation(const std::vector<double>& a,
                                 const std::vector<double>& b);

}  // namespace oracles
