#include "wellbeing/mvn.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wellbeing/normal.hpp"
#include "wellbeing/rng.hpp"

namespace wellbeing {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_correlation(const Eigen::MatrixXd& sigma) {
  const auto d = sigma.rows();
  if (d < 1 || d > 4 || sigma.cols() != d) {
    throw std::invalid_argument("mvn_cdf: dimension must be 1..4");
  }
  if (!sigma.isApprox(sigma.transpose(), 1e-12)) {
    throw std::invalid_argument("mvn_cdf: sigma not symmetric");
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    if (std::fabs(sigma(i, i) - 1.0) > 1e-12) {
      throw std::invalid_argument("mvn_cdf: sigma diagonal must be 1");
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma);
  if (es.eigenvalues().minCoeff() <= 1e-10) {
    throw std::invalid_argument("mvn_cdf: sigma not positive definite");
  }
}

// Genz separation-of-variables integrand for P(Z <= b), lower limits -inf.
// chol is the lower Cholesky factor; b sorted ascending beforehand.
struct SovIntegrand {
  Eigen::MatrixXd chol;
  Eigen::VectorXd b;
  int d;

  double operator()(const double* w) const {
    double e = norm_cdf(b[0] / chol(0, 0));
    double prod = e;
    double y[3];
    for (int i = 1; i < d; ++i) {
      double u = w[i - 1] * e;
      // Guard the open interval; norm_ppf(0/1) would be infinite.
      u = std::min(std::max(u, 1e-300), 1.0 - 1e-16);
      y[i - 1] = norm_ppf(u);
      double num = b[i];
      if (num < kInf) {
        for (int j = 0; j < i; ++j) num -= chol(i, j) * y[j];
        e = norm_cdf(num / chol(i, i));
      } else {
        e = 1.0;
      }
      prod *= e;
    }
    return prod;
  }
};

// Square roots of the first primes: Richtmyer lattice generators.
const double kRichtmyer[3] = {1.4142135623730951, 1.7320508075688772,
                              2.23606797749979};

MvnResult qmc_sov(const Eigen::VectorXd& upper, const Eigen::MatrixXd& sigma,
                  double tol, std::uint64_t seed) {
  const int d = static_cast<int>(upper.size());
  // Sort variables by upper limit (ascending): standard accuracy heuristic.
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return upper[a] < upper[b]; });
  Eigen::VectorXd b(d);
  Eigen::MatrixXd s(d, d);
  for (int i = 0; i < d; ++i) {
    b[i] = upper[order[i]];
    for (int j = 0; j < d; ++j) s(i, j) = sigma(order[i], order[j]);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(s);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("mvn_cdf: Cholesky failed");
  }
  SovIntegrand f{llt.matrixL(), b, d};

  constexpr int kShifts = 10;
  Rng rng(derive_seed(seed, 0x6d766e63646600ULL));
  MvnResult res;
  int n = 128;
  const int dim = d - 1;
  for (int round = 0; round < 12; ++round) {
    double shift_means[kShifts];
    for (int s_i = 0; s_i < kShifts; ++s_i) {
      double shift[3];
      for (int j = 0; j < dim; ++j) shift[j] = rng.uniform();
      double acc = 0.0;
      for (int k = 1; k <= n; ++k) {
        double w[3];
        for (int j = 0; j < dim; ++j) {
          double v = std::fmod(k * kRichtmyer[j] + shift[j], 1.0);
          // Baker transform improves lattice-rule accuracy.
          w[j] = 1.0 - std::fabs(2.0 * v - 1.0);
        }
        acc += (f(w) - acc) / k;
      }
      shift_means[s_i] = acc;
    }
    double mean = 0.0;
    for (double v : shift_means) mean += v;
    mean /= kShifts;
    double var = 0.0;
    for (double v : shift_means) var += (v - mean) * (v - mean);
    var /= (kShifts - 1.0) * kShifts;
    res.value = mean;
    res.error_estimate = 3.0 * std::sqrt(var);
    res.evaluations += static_cast<long long>(n) * kShifts;
    if (res.error_estimate <= tol) break;
    n *= 2;
  }
  res.value = std::min(1.0, std::max(0.0, res.value));
  return res;
}

}  // namespace

MvnResult mvn_cdf_detail(const Eigen::VectorXd& upper,
                         const Eigen::MatrixXd& sigma, double tol,
                         std::uint64_t seed) {
  check_correlation(sigma);
  if (upper.size() != sigma.rows()) {
    throw std::invalid_argument("mvn_cdf: size mismatch");
  }
  for (Eigen::Index i = 0; i < upper.size(); ++i) {
    if (std::isnan(upper[i])) throw std::invalid_argument("mvn_cdf: NaN limit");
    if (upper[i] == -kInf) return {0.0, 0.0, 0};
  }
  // Drop +inf components: exact marginalization of a Gaussian.
  std::vector<int> keep;
  for (Eigen::Index i = 0; i < upper.size(); ++i) {
    if (upper[i] < kInf) keep.push_back(static_cast<int>(i));
  }
  const int d = static_cast<int>(keep.size());
  if (d == 0) return {1.0, 0.0, 0};
  if (d == 1) return {norm_cdf(upper[keep[0]]), 0.0, 1};
  if (d == 2) {
    return {bvn_cdf(upper[keep[0]], upper[keep[1]],
                    sigma(keep[0], keep[1])),
            0.0, 1};
  }
  Eigen::VectorXd b(d);
  Eigen::MatrixXd s(d, d);
  for (int i = 0; i < d; ++i) {
    b[i] = upper[keep[i]];
    for (int j = 0; j < d; ++j) s(i, j) = sigma(keep[i], keep[j]);
  }
  return qmc_sov(b, s, tol, seed);
}

double mvn_cdf(const Eigen::VectorXd& upper, const Eigen::MatrixXd& sigma,
               double tol, std::uint64_t seed) {
  return mvn_cdf_detail(upper, sigma, tol, seed).value;
}

}  // namespace wellbeing
