#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace wellbeing {

struct MvnResult {
  double value = 0.0;
  double error_estimate = 0.0;  // ~3x standard error of the QMC estimate
  long long evaluations = 0;
};

/// P(Z <= upper componentwise) for Z ~ N(0, sigma), d <= 4. sigma must be a
/// valid correlation matrix (unit diagonal, positive definite). Components of
/// `upper` may be +-infinity. d <= 2 (after dropping +inf components) is
/// evaluated by deterministic quadrature; d in {3, 4} by randomized
/// quasi-Monte Carlo over the separation-of-variables form, with the sample
/// size grown until the error estimate falls below `tol`. Deterministic for a
/// fixed seed.
MvnResult mvn_cdf_detail(const Eigen::VectorXd& upper,
                         const Eigen::MatrixXd& sigma, double tol = 1e-5,
                         std::uint64_t seed = 0);

double mvn_cdf(const Eigen::VectorXd& upper, const Eigen::MatrixXd& sigma,
               double tol = 1e-5, std::uint64_t seed = 0);

}  // namespace wellbeing
