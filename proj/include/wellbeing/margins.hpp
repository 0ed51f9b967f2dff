#pragma once

#include <Eigen/Core>
#include <vector>

namespace wellbeing {

/// Finite mixture of gamma densities parameterized by component mean mu_k > 0
/// and shape nu_k > 0 (density (nu/mu)^nu / Gamma(nu) * y^(nu-1) e^(-nu y/mu)).
/// Components are stored sorted by mean; weights live on the simplex.
class GammaMixture {
 public:
  GammaMixture(Eigen::VectorXd weights, Eigen::VectorXd means,
               Eigen::VectorXd shapes);

  int components() const { return static_cast<int>(weights_.size()); }
  const Eigen::VectorXd& weights() const { return weights_; }
  const Eigen::VectorXd& means() const { return means_; }
  const Eigen::VectorXd& shapes() const { return shapes_; }

  double pdf(double y) const;        // y > 0 required
  double cdf(double y) const;        // y >= 0; cdf(0) = 0
  double quantile(double u) const;   // 0 < u < 1
  double mean() const { return weights_.dot(means_); }
  double mean_log() const;           // E[log Y], closed form

  double component_pdf(int k, double y) const;
  double component_log_pdf(int k, double y) const;
  double component_cdf(int k, double y) const;

  bool operator==(const GammaMixture&) const = default;

 private:
  Eigen::VectorXd weights_, means_, shapes_;
};

/// Finite mixture of beta densities in the mean/precision parameterization:
/// component k has mean m_k in (0,1) and precision s_k > 0, i.e. classical
/// parameters alpha = s*m, beta = s*(1-m). Components sorted by mean.
class BetaMixture {
 public:
  BetaMixture(Eigen::VectorXd weights, Eigen::VectorXd precisions,
              Eigen::VectorXd means);

  int components() const { return static_cast<int>(weights_.size()); }
  const Eigen::VectorXd& weights() const { return weights_; }
  const Eigen::VectorXd& precisions() const { return precisions_; }
  const Eigen::VectorXd& means() const { return means_; }

  double pdf(double y) const;       // 0 < y < 1 required
  double cdf(double y) const;       // 0 <= y <= 1
  double quantile(double u) const;  // 0 < u < 1
  double mean() const { return weights_.dot(means_); }

  double component_pdf(int k, double y) const;
  double component_log_pdf(int k, double y) const;
  double component_cdf(int k, double y) const;

  bool operator==(const BetaMixture&) const = default;

 private:
  Eigen::VectorXd weights_, precisions_, means_;
};

/// Latent-threshold model for an ordinal outcome with L categories: category
/// s is observed when a standard normal latent falls in [tau_{s-1}, tau_s),
/// with tau_0 = -inf and tau_L = +inf.
class OrdinalModel {
 public:
  explicit OrdinalModel(Eigen::VectorXd thresholds);

  int categories() const { return static_cast<int>(thresholds_.size()) + 1; }
  const Eigen::VectorXd& thresholds() const { return thresholds_; }

  /// Probability of each category; a simplex of length L.
  Eigen::VectorXd category_probs() const;

  /// P(Y <= category); category in 1..L, cdf(L) = 1.
  double cdf(int category) const;

  /// Smallest category with cumulative probability >= u.
  int quantile(double u) const;

  double mean() const;  // sum over s of s * p_s

  bool operator==(const OrdinalModel&) const = default;

 private:
  Eigen::VectorXd thresholds_;
};

}  // namespace wellbeing
