#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <string>

namespace wellbeing {

/// Mixes a root seed with a stream id into an independent-looking seed
/// (splitmix64 finalizer). Used to derive per-chain / per-draw streams.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

/// Seeded random source. All variates are produced by inverse-transform or
/// rejection built on the mt19937_64 bit stream, so sequences are identical
/// across platforms and compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via inverse transform.
  double normal();

  /// Standard exponential.
  double exponential();

  /// Gamma with given shape, unit scale (Marsaglia-Tsang).
  double gamma(double shape);

  /// Dirichlet draw with the given concentration vector.
  Eigen::VectorXd dirichlet(const Eigen::VectorXd& concentration);

  /// Normal(mean, sd) truncated to [lo, hi]; lo < hi, either may be infinite.
  double truncated_normal(double mean, double sd, double lo, double hi);

  int uniform_int(int n);  // 0..n-1

  std::string state() const;
  void set_state(const std::string& s);

 private:
  std::mt19937_64 engine_;
};

}  // namespace wellbeing
