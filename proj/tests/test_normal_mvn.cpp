#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "wellbeing/mvn.hpp"
#include "wellbeing/normal.hpp"
#include "wellbeing/rng.hpp"

using namespace wellbeing;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("normal cdf and quantile") {
  CHECK(norm_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(norm_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
  CHECK(norm_ppf(0.5) == doctest::Approx(0.0));
  CHECK(norm_ppf(0.05) == doctest::Approx(-1.6448536269514722).epsilon(1e-12));

  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const double p = rng.uniform();
    CHECK(norm_cdf(norm_ppf(p)) == doctest::Approx(p).epsilon(1e-12));
  }
  // Deep tails keep relative precision.
  CHECK(norm_ppf(1e-300) == doctest::Approx(-37.0471).epsilon(1e-4));
  CHECK(norm_cdf(-37.0) == doctest::Approx(5.725571e-300).epsilon(1e-5));
}

TEST_CASE("bivariate normal cdf closed form at the origin") {
  for (double rho : {-0.9, -0.5, 0.0, 0.3, 0.5, 0.925, 0.99}) {
    const double expected = 0.25 + std::asin(rho) / (2.0 * M_PI);
    CHECK(bvn_cdf(0.0, 0.0, rho) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("bivariate normal cdf vs 2-d quadrature oracle") {
  Rng rng(42);
  for (int rep = 0; rep < 25; ++rep) {
    const double h = -2.5 + 5.0 * rng.uniform();
    const double k = -2.5 + 5.0 * rng.uniform();
    const double rho = -0.98 + 1.96 * rng.uniform();
    const double c = std::sqrt(1.0 - rho * rho);
    // P(Z1<=h, Z2<=k) = int_{-inf}^{h} phi(x) Phi((k - rho x)/c) dx
    const double oracle = oracles::integrate(
        [&](double x) {
          return norm_pdf(x) * norm_cdf((k - rho * x) / c);
        },
        -9.0, h, 1e-12);
    CHECK(bvn_cdf(h, k, rho) == doctest::Approx(oracle).epsilon(1e-10));
  }
}

TEST_CASE("bvn handles infinities and reduces to the margins") {
  CHECK(bvn_cdf(kInf, 0.3, 0.7) == doctest::Approx(norm_cdf(0.3)));
  CHECK(bvn_cdf(0.3, kInf, -0.7) == doctest::Approx(norm_cdf(0.3)));
  CHECK(bvn_cdf(-kInf, 0.3, 0.5) == 0.0);
  CHECK(bvn_cdf(1.0, 1.0, 0.0) ==
        doctest::Approx(norm_cdf(1.0) * norm_cdf(1.0)).epsilon(1e-14));
}

TEST_CASE("mvn_cdf exact special cases") {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(4);
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(4, 4);
  CHECK(mvn_cdf(x, id) == doctest::Approx(0.0625).epsilon(1e-7));

  Eigen::MatrixXd s2(2, 2);
  s2 << 1.0, 0.5, 0.5, 1.0;
  CHECK(mvn_cdf(Eigen::VectorXd::Zero(2), s2) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-9));

  // d=1 reduces exactly to Phi.
  Eigen::VectorXd x1(1);
  x1 << 0.7;
  Eigen::MatrixXd s1 = Eigen::MatrixXd::Identity(1, 1);
  CHECK(mvn_cdf(x1, s1) == doctest::Approx(norm_cdf(0.7)).epsilon(1e-15));
}

TEST_CASE("mvn_cdf drops +inf components exactly") {
  Eigen::MatrixXd s = oracles::random_correlation(4, 11);
  Eigen::VectorXd x(4);
  x << 0.4, kInf, -0.2, kInf;
  Eigen::MatrixXd sub(2, 2);
  sub << 1.0, s(0, 2), s(2, 0), 1.0;
  Eigen::VectorXd xs(2);
  xs << 0.4, -0.2;
  CHECK(mvn_cdf(x, s) == doctest::Approx(mvn_cdf(xs, sub)).epsilon(1e-12));
  x << 0.4, -kInf, -0.2, kInf;
  CHECK(mvn_cdf(x, s) == 0.0);
}

TEST_CASE("mvn_cdf matches brute-force Monte Carlo on random 4-d cases") {
  // A short version of acceptance criterion 2 (the full 10^7-draw run lives
  // in the acceptance suite).
  for (int rep = 0; rep < 6; ++rep) {
    Eigen::MatrixXd s = oracles::random_correlation(4, 100 + rep);
    Rng rng(200 + rep);
    Eigen::VectorXd x(4);
    for (int i = 0; i < 4; ++i) x[i] = -1.5 + 3.0 * rng.uniform();
    const auto [est, se] = oracles::mc_mvn_cdf(x, s, 400000, 300 + rep);
    const auto res = mvn_cdf_detail(x, s, 1e-5, 17);
    CHECK(std::fabs(res.value - est) <= 3.0 * se + 1e-5);
    CHECK(res.error_estimate <= 1e-5);
  }
}

TEST_CASE("mvn_cdf deterministic for a fixed seed") {
  Eigen::MatrixXd s = oracles::random_correlation(4, 5);
  Eigen::VectorXd x(4);
  x << 0.3, -0.4, 1.1, 0.0;
  const double a = mvn_cdf(x, s, 1e-6, 77);
  const double b = mvn_cdf(x, s, 1e-6, 77);
  CHECK(a == b);
}

TEST_CASE("mvn_cdf rejects bad inputs") {
  Eigen::MatrixXd bad(2, 2);
  bad << 1.0, 1.2, 1.2, 1.0;
  CHECK_THROWS_AS(mvn_cdf(Eigen::VectorXd::Zero(2), bad),
                  std::invalid_argument);
  Eigen::MatrixXd nonsym(2, 2);
  nonsym << 1.0, 0.2, 0.4, 1.0;
  CHECK_THROWS_AS(mvn_cdf(Eigen::VectorXd::Zero(2), nonsym),
                  std::invalid_argument);
}

TEST_CASE("rng gamma and dirichlet moments") {
  Rng rng(123);
  double acc = 0.0, acc2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gamma(2.5);
    acc += g;
    acc2 += g * g;
  }
  const double mean = acc / n;
  const double var = acc2 / n - mean * mean;
  CHECK(mean == doctest::Approx(2.5).epsilon(0.01));
  CHECK(var == doctest::Approx(2.5).epsilon(0.03));

  Eigen::VectorXd conc(3);
  conc << 1.0, 2.0, 3.0;
  Eigen::VectorXd m = Eigen::VectorXd::Zero(3);
  for (int i = 0; i < 50000; ++i) m += rng.dirichlet(conc);
  m /= 50000.0;
  CHECK(m[0] == doctest::Approx(1.0 / 6.0).epsilon(0.02));
  CHECK(m[2] == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("truncated normal stays inside bounds and has correct cdf") {
  Rng rng(9);
  // Compare the empirical cdf on a tail interval with the exact one.
  const double lo = 1.5, hi = 2.5;
  const double fa = norm_cdf(lo), fb = norm_cdf(hi);
  int below2 = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.truncated_normal(0.0, 1.0, lo, hi);
    CHECK(z >= lo);
    CHECK(z <= hi);
    if (z <= 2.0) ++below2;
  }
  const double expect = (norm_cdf(2.0) - fa) / (fb - fa);
  CHECK(static_cast<double>(below2) / n ==
        doctest::Approx(expect).epsilon(0.02));
}
