#include "wellbeing/rng.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wellbeing/normal.hpp"

namespace wellbeing {

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::normal() { return norm_ppf(uniform()); }

double Rng::exponential() { return -std::log(uniform()); }

double Rng::gamma(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma shape must be > 0");
  if (shape < 1.0) {
    const double u = uniform();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

Eigen::VectorXd Rng::dirichlet(const Eigen::VectorXd& concentration) {
  Eigen::VectorXd g(concentration.size());
  for (Eigen::Index k = 0; k < concentration.size(); ++k) {
    g[k] = gamma(concentration[k]);
  }
  const double total = g.sum();
  if (total <= 0.0) throw std::runtime_error("degenerate dirichlet draw");
  return g / total;
}

double Rng::truncated_normal(double mean, double sd, double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("truncated_normal: lo >= hi");
  double a = (lo - mean) / sd;
  double b = (hi - mean) / sd;
  // Work in the lower tail where norm_cdf keeps full relative precision.
  bool flipped = false;
  if (a > 0.0) {
    std::swap(a, b);
    a = -a;
    b = -b;
    flipped = true;
  }
  const double fa = norm_cdf(a);
  const double fb = norm_cdf(b);
  double p = fa + uniform() * (fb - fa);
  if (p <= 0.0) p = std::nextafter(0.0, 1.0);
  if (p >= 1.0) p = std::nextafter(1.0, 0.0);
  double z = norm_ppf(p);
  if (z < a) z = a;
  if (z > b) z = b;
  if (flipped) z = -z;
  return mean + sd * z;
}

int Rng::uniform_int(int n) {
  if (n <= 0) throw std::invalid_argument("uniform_int: n <= 0");
  // Rejection to avoid modulo bias; n is tiny relative to 2^64.
  const std::uint64_t limit =
      ~std::uint64_t{0} - (~std::uint64_t{0} % static_cast<std::uint64_t>(n));
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<int>(x % static_cast<std::uint64_t>(n));
}

std::string Rng::state() const {
  std::ostringstream os;
  os << engine_;
  return os.str();
}

void Rng::set_state(const std::string& s) {
  std::istringstream is(s);
  is >> engine_;
  if (!is) throw std::invalid_argument("bad rng state string");
}

}  // namespace wellbeing
