#include "wellbeing/margins.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wellbeing/normal.hpp"

namespace wellbeing {

namespace {

constexpr double kSimplexTol = 1e-12;
constexpr int kQuantileMaxIter = 200;

void check_simplex(const Eigen::VectorXd& w, const char* what) {
  if (w.size() < 1) throw std::invalid_argument(std::string(what) + ": empty");
  if (w.minCoeff() < 0.0) {
    throw std::invalid_argument(std::string(what) + ": negative weight");
  }
  if (std::fabs(w.sum() - 1.0) > kSimplexTol) {
    throw std::invalid_argument(std::string(what) + ": weights must sum to 1");
  }
}

// Sort mixture components by `key` ascending, permuting all blocks.
void sort_components(Eigen::VectorXd& w, Eigen::VectorXd& key,
                     Eigen::VectorXd& other) {
  const auto n = w.size();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return key[a] < key[b]; });
  Eigen::VectorXd w2(n), k2(n), o2(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    w2[i] = w[idx[i]];
    k2[i] = key[idx[i]];
    o2[i] = other[idx[i]];
  }
  w = w2;
  key = k2;
  other = o2;
}

// Safeguarded Newton for a mixture quantile on the bracket [lo, hi]:
// Newton steps are taken when they stay inside the bracket, otherwise
// bisection; the bracket shrinks monotonically either way.
template <typename Cdf, typename Pdf>
double bracketed_quantile(double u, double lo, double hi, const Cdf& cdf,
                          const Pdf& pdf) {
  double y = 0.5 * (lo + hi);
  for (int it = 0; it < kQuantileMaxIter; ++it) {
    const double f = cdf(y);
    if (std::fabs(f - u) <= 1e-12) return y;
    if (f < u) {
      lo = y;
    } else {
      hi = y;
    }
    if (hi - lo <= 1e-13 * (1.0 + std::fabs(hi))) return 0.5 * (lo + hi);
    const double d = pdf(y);
    double next = (d > 0.0) ? y - (f - u) / d : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    y = next;
  }
  throw std::runtime_error("mixture quantile: no convergence after 200 "
                           "iterations, u=" +
                           std::to_string(u));
}

}  // namespace

GammaMixture::GammaMixture(Eigen::VectorXd weights, Eigen::VectorXd means,
                           Eigen::VectorXd shapes)
    : weights_(std::move(weights)),
      means_(std::move(means)),
      shapes_(std::move(shapes)) {
  if (means_.size() != weights_.size() || shapes_.size() != weights_.size()) {
    throw std::invalid_argument("GammaMixture: size mismatch");
  }
  check_simplex(weights_, "GammaMixture");
  if (means_.minCoeff() <= 0.0 || shapes_.minCoeff() <= 0.0) {
    throw std::invalid_argument("GammaMixture: means and shapes must be > 0");
  }
  sort_components(weights_, means_, shapes_);
}

double GammaMixture::component_log_pdf(int k, double y) const {
  const double nu = shapes_[k];
  const double mu = means_[k];
  return nu * std::log(nu / mu) - std::lgamma(nu) + (nu - 1.0) * std::log(y) -
         nu * y / mu;
}

double GammaMixture::component_pdf(int k, double y) const {
  return std::exp(component_log_pdf(k, y));
}

double GammaMixture::component_cdf(int k, double y) const {
  if (y <= 0.0) return 0.0;
  return boost::math::gamma_p(shapes_[k], shapes_[k] * y / means_[k]);
}

double GammaMixture::pdf(double y) const {
  if (!(y > 0.0)) {
    throw std::domain_error("gamma mixture pdf: y must be > 0");
  }
  double acc = 0.0;
  for (int k = 0; k < components(); ++k) {
    acc += weights_[k] * component_pdf(k, y);
  }
  return acc;
}

double GammaMixture::cdf(double y) const {
  if (std::isnan(y)) throw std::domain_error("gamma mixture cdf: NaN");
  if (y <= 0.0) {
    if (y < 0.0) throw std::domain_error("gamma mixture cdf: y must be >= 0");
    return 0.0;
  }
  double acc = 0.0;
  for (int k = 0; k < components(); ++k) {
    acc += weights_[k] * component_cdf(k, y);
  }
  return std::min(acc, 1.0);
}

double GammaMixture::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("gamma mixture quantile: u must be in (0,1)");
  }
  // Any y above every component quantile at max(u, 1-1e-6) brackets from
  // above because the mixture cdf is a convex combination of component cdfs.
  double hi = 0.0;
  double lo = std::numeric_limits<double>::max();
  const double uq = std::max(u, 1.0 - 1e-6);
  for (int k = 0; k < components(); ++k) {
    const double scale = means_[k] / shapes_[k];
    hi = std::max(hi, scale * boost::math::gamma_p_inv(shapes_[k], uq));
    lo = std::min(lo, scale * boost::math::gamma_p_inv(shapes_[k], u));
  }
  return bracketed_quantile(
      u, std::nextafter(lo, 0.0), hi, [this](double y) { return cdf(y); },
      [this](double y) { return y > 0.0 ? pdf(y) : 0.0; });
}

double GammaMixture::mean_log() const {
  double acc = 0.0;
  for (int k = 0; k < components(); ++k) {
    acc += weights_[k] * (boost::math::digamma(shapes_[k]) +
                          std::log(means_[k] / shapes_[k]));
  }
  return acc;
}

BetaMixture::BetaMixture(Eigen::VectorXd weights, Eigen::VectorXd precisions,
                         Eigen::VectorXd means)
    : weights_(std::move(weights)),
      precisions_(std::move(precisions)),
      means_(std::move(means)) {
  if (precisions_.size() != weights_.size() ||
      means_.size() != weights_.size()) {
    throw std::invalid_argument("BetaMixture: size mismatch");
  }
  check_simplex(weights_, "BetaMixture");
  if (precisions_.minCoeff() <= 0.0) {
    throw std::invalid_argument("BetaMixture: precisions must be > 0");
  }
  if (means_.minCoeff() <= 0.0 || means_.maxCoeff() >= 1.0) {
    throw std::invalid_argument("BetaMixture: means must be in (0,1)");
  }
  sort_components(weights_, means_, precisions_);
}

double BetaMixture::component_log_pdf(int k, double y) const {
  const double a = precisions_[k] * means_[k];
  const double b = precisions_[k] * (1.0 - means_[k]);
  return std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
         (a - 1.0) * std::log(y) + (b - 1.0) * std::log1p(-y);
}

double BetaMixture::component_pdf(int k, double y) const {
  return std::exp(component_log_pdf(k, y));
}

double BetaMixture::component_cdf(int k, double y) const {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  const double a = precisions_[k] * means_[k];
  const double b = precisions_[k] * (1.0 - means_[k]);
  return boost::math::ibeta(a, b, y);
}

double BetaMixture::pdf(double y) const {
  if (!(y > 0.0 && y < 1.0)) {
    throw std::domain_error("beta mixture pdf: y must be in (0,1)");
  }
  double acc = 0.0;
  for (int k = 0; k < components(); ++k) {
    acc += weights_[k] * component_pdf(k, y);
  }
  return acc;
}

double BetaMixture::cdf(double y) const {
  if (std::isnan(y) || y < 0.0 || y > 1.0) {
    throw std::domain_error("beta mixture cdf: y must be in [0,1]");
  }
  double acc = 0.0;
  for (int k = 0; k < components(); ++k) {
    acc += weights_[k] * component_cdf(k, y);
  }
  return std::min(acc, 1.0);
}

double BetaMixture::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("beta mixture quantile: u must be in (0,1)");
  }
  return bracketed_quantile(
      u, 0.0, 1.0, [this](double y) { return cdf(y); },
      [this](double y) {
        return (y > 0.0 && y < 1.0) ? pdf(y) : 0.0;
      });
}

OrdinalModel::OrdinalModel(Eigen::VectorXd thresholds)
    : thresholds_(std::move(thresholds)) {
  if (thresholds_.size() < 1) {
    throw std::invalid_argument("OrdinalModel: need at least one threshold");
  }
  for (Eigen::Index i = 0; i + 1 < thresholds_.size(); ++i) {
    if (!(thresholds_[i] < thresholds_[i + 1])) {
      throw std::invalid_argument(
          "OrdinalModel: thresholds must be strictly increasing");
    }
  }
  if (!thresholds_.allFinite()) {
    throw std::invalid_argument("OrdinalModel: thresholds must be finite");
  }
}

Eigen::VectorXd OrdinalModel::category_probs() const {
  const int L = categories();
  Eigen::VectorXd p(L);
  double prev = 0.0;
  for (int s = 1; s < L; ++s) {
    const double cur = norm_cdf(thresholds_[s - 1]);
    p[s - 1] = cur - prev;
    prev = cur;
  }
  p[L - 1] = 1.0 - prev;
  return p;
}

double OrdinalModel::cdf(int category) const {
  const int L = categories();
  if (category < 1 || category > L) {
    throw std::domain_error("OrdinalModel cdf: category out of range");
  }
  if (category == L) return 1.0;
  return norm_cdf(thresholds_[category - 1]);
}

int OrdinalModel::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("OrdinalModel quantile: u must be in (0,1)");
  }
  const int L = categories();
  for (int s = 1; s < L; ++s) {
    if (norm_cdf(thresholds_[s - 1]) >= u) return s;
  }
  return L;
}

double OrdinalModel::mean() const {
  const Eigen::VectorXd p = category_probs();
  double acc = 0.0;
  for (int s = 0; s < p.size(); ++s) acc += (s + 1) * p[s];
  return acc;
}

}  // namespace wellbeing
