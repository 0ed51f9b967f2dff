#include "wellbeing/copula.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wellbeing/mvn.hpp"
#include "wellbeing/normal.hpp"
#include "wellbeing/rng.hpp"

namespace wellbeing {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLatentClamp = 8.0;
constexpr double kCdfEps = 1e-15;
}  // namespace

CorrelationMatrix::CorrelationMatrix(const Eigen::Matrix4d& m) : m_(m) {
  if (!m_.isApprox(m_.transpose(), 1e-12)) {
    throw std::invalid_argument("CorrelationMatrix: not symmetric");
  }
  m_ = 0.5 * (m_ + m_.transpose()).eval();
  for (int i = 0; i < 4; ++i) {
    if (std::fabs(m_(i, i) - 1.0) > 1e-12) {
      throw std::invalid_argument("CorrelationMatrix: diagonal must be 1");
    }
    m_(i, i) = 1.0;
    for (int j = 0; j < 4; ++j) {
      if (i != j && std::fabs(m_(i, j)) >= 1.0) {
        throw std::invalid_argument(
            "CorrelationMatrix: off-diagonal outside (-1,1)");
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(m_);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo <= 1e-10) {
    throw std::invalid_argument("CorrelationMatrix: not positive definite");
  }
  cond_ = hi / lo;
  log_det_ = es.eigenvalues().array().log().sum();
  inv_ = m_.llt().solve(Eigen::Matrix4d::Identity());
}

Eigen::Matrix2d CorrelationMatrix::submatrix(int i, int j) const {
  Eigen::Matrix2d s;
  s << m_(i, i), m_(i, j), m_(j, i), m_(j, j);
  return s;
}

namespace {

double latent_from_u(double u, bool* clamped) {
  if (clamped) *clamped = false;
  if (u < kCdfEps) {
    if (clamped) *clamped = true;
    return -kLatentClamp;
  }
  if (u > 1.0 - kCdfEps) {
    if (clamped) *clamped = true;
    return kLatentClamp;
  }
  const double z = norm_ppf(u);
  if (z < -kLatentClamp) {
    if (clamped) *clamped = true;
    return -kLatentClamp;
  }
  if (z > kLatentClamp) {
    if (clamped) *clamped = true;
    return kLatentClamp;
  }
  return z;
}

}  // namespace

double continuous_to_latent(double y, const GammaMixture& margin,
                            bool* clamped) {
  if (!(y > 0.0)) {
    throw std::domain_error("continuous_to_latent: y outside gamma support");
  }
  return latent_from_u(margin.cdf(y), clamped);
}

double continuous_to_latent(double y, const BetaMixture& margin,
                            bool* clamped) {
  if (!(y > 0.0 && y < 1.0)) {
    throw std::domain_error("continuous_to_latent: y outside beta support");
  }
  return latent_from_u(margin.cdf(y), clamped);
}

LatentBounds ordinal_latent_bounds(int category, const OrdinalModel& model) {
  const int L = model.categories();
  if (category < 1 || category > L) {
    throw std::domain_error("ordinal_latent_bounds: category out of range");
  }
  const double lo = (category == 1) ? -kInf : model.thresholds()[category - 2];
  const double hi = (category == L) ? kInf : model.thresholds()[category - 1];
  return {lo, hi};
}

double copula_log_density(const Eigen::Vector4d& y_star,
                          const CorrelationMatrix& gamma) {
  if (!y_star.allFinite()) {
    throw std::invalid_argument("copula_log_density: non-finite latent");
  }
  if (gamma.condition_number() > 1e12) {
    throw std::runtime_error("copula_log_density: ill-conditioned correlation");
  }
  const Eigen::Matrix4d a =
      gamma.inverse() - Eigen::Matrix4d::Identity();
  return -0.5 * gamma.log_det() - 0.5 * y_star.dot(a * y_star);
}

double latent_for_cdf(double u) {
  if (u <= 0.0) return -kInf;
  if (u >= 1.0) return kInf;
  return norm_ppf(u);
}

double joint_cdf(const std::array<double, 4>& y, const JointModel& model,
                 double tol, std::uint64_t seed) {
  Eigen::VectorXd z(4);
  z[0] = latent_for_cdf(model.income.cdf(y[0]));
  z[1] = latent_for_cdf(model.health.cdf(y[1]));
  z[2] = latent_for_cdf(
      model.education.cdf(static_cast<int>(std::lround(y[2]))));
  z[3] = latent_for_cdf(
      model.happiness.cdf(static_cast<int>(std::lround(y[3]))));
  return mvn_cdf(z, model.correlation.matrix(), tol, seed);
}

double bivariate_cdf(double yi, double yj, std::pair<int, int> attrs,
                     const JointModel& model) {
  const auto coord = [&](int attr, double v) -> double {
    switch (attr) {
      case 0: return latent_for_cdf(model.income.cdf(v));
      case 1: return latent_for_cdf(model.health.cdf(v));
      case 2:
        return latent_for_cdf(
            model.education.cdf(static_cast<int>(std::lround(v))));
      case 3:
        return latent_for_cdf(
            model.happiness.cdf(static_cast<int>(std::lround(v))));
      default:
        throw std::invalid_argument("bivariate_cdf: bad attribute index");
    }
  };
  if (attrs.first == attrs.second) {
    throw std::invalid_argument("bivariate_cdf: attributes must differ");
  }
  const double zi = coord(attrs.first, yi);
  const double zj = coord(attrs.second, yj);
  return bvn_cdf(zi, zj, model.correlation(attrs.first, attrs.second));
}

std::vector<Record> sample_joint(const JointModel& model, int n,
                                 std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_joint: n must be >= 1");
  Eigen::LLT<Eigen::Matrix4d> llt(model.correlation.matrix());
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("sample_joint: Cholesky failed");
  }
  const Eigen::Matrix4d chol = llt.matrixL();
  Rng rng(seed);
  std::vector<Record> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Eigen::Vector4d eps;
    for (int j = 0; j < 4; ++j) eps[j] = rng.normal();
    const Eigen::Vector4d z = chol * eps;
    Record r;
    r.income = model.income.quantile(norm_cdf(z[0]));
    r.health = model.health.quantile(norm_cdf(z[1]));
    r.education = model.education.quantile(norm_cdf(z[2]));
    r.happiness = model.happiness.quantile(norm_cdf(z[3]));
    out.push_back(r);
  }
  return out;
}

}  // namespace wellbeing
