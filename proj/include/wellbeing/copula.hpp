#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "wellbeing/data.hpp"
#include "wellbeing/margins.hpp"

namespace wellbeing {

/// Validated 4x4 correlation matrix: symmetric, unit diagonal, off-diagonal
/// entries strictly inside (-1,1), smallest eigenvalue > 1e-10. Immutable;
/// the inverse and log-determinant are precomputed.
class CorrelationMatrix {
 public:
  explicit CorrelationMatrix(const Eigen::Matrix4d& m);

  const Eigen::Matrix4d& matrix() const { return m_; }
  const Eigen::Matrix4d& inverse() const { return inv_; }
  double log_det() const { return log_det_; }
  double condition_number() const { return cond_; }
  double operator()(int i, int j) const { return m_(i, j); }

  Eigen::Matrix2d submatrix(int i, int j) const;

  bool operator==(const CorrelationMatrix& o) const { return m_ == o.m_; }

 private:
  Eigen::Matrix4d m_, inv_;
  double log_det_ = 0.0, cond_ = 1.0;
};

/// Half-open latent-scale interval [lower, upper) for an ordinal category.
struct LatentBounds {
  double lower;
  double upper;
};

/// Full parameter set of the joint model: four margins plus the Gaussian
/// copula correlation. Attribute order (income, health, education, happiness).
struct JointModel {
  GammaMixture income;
  BetaMixture health;
  OrdinalModel education;
  OrdinalModel happiness;
  CorrelationMatrix correlation;

  bool operator==(const JointModel&) const = default;
};

/// Phi^{-1}(F(y)) for a continuous margin. CDF values within 1e-15 of 0 or 1
/// are clamped to a latent value of -+8; `clamped`, when given, is set
/// accordingly.
double continuous_to_latent(double y, const GammaMixture& margin,
                            bool* clamped = nullptr);
double continuous_to_latent(double y, const BetaMixture& margin,
                            bool* clamped = nullptr);

/// Latent interval for an observed category: [tau_{c-1}, tau_c), with -inf
/// below the first threshold and +inf above the last.
LatentBounds ordinal_latent_bounds(int category, const OrdinalModel& model);

/// Gaussian copula log-density at a latent point:
/// -log|G|/2 - y*' (G^{-1} - I) y* / 2. Exact (no hidden constant).
double copula_log_density(const Eigen::Vector4d& y_star,
                          const CorrelationMatrix& gamma);

/// Joint distribution function F(y1,y2,y3,y4). Ordinal coordinates are the
/// category values (cdf evaluated at the category). Continuous coordinates
/// may sit at the support limits.
double joint_cdf(const std::array<double, 4>& y, const JointModel& model,
                 double tol = 1e-5, std::uint64_t seed = 0);

/// Two-attribute marginal F(y_i, y_j) computed directly from the 2x2
/// correlation submatrix (exact Gaussian-copula marginalization).
double bivariate_cdf(double yi, double yj, std::pair<int, int> attrs,
                     const JointModel& model);

/// Inverse-transform sampler: z ~ N(0, Gamma), u = Phi(z), margins inverted.
/// Deterministic given the seed.
std::vector<Record> sample_joint(const JointModel& model, int n,
                                 std::uint64_t seed);

/// Latent coordinate of a grid value for CDF evaluation (u=0 -> -inf,
/// u=1 -> +inf; no +-8 clamp). Used by grid scans and cdf paths.
double latent_for_cdf(double u);

}  // namespace wellbeing
